#include <doctest.h>

#include <random>

#include "radii_atlas/diagram.hpp"
#include "radii_atlas/families.hpp"
#include "radii_atlas/radii.hpp"

using namespace radii_atlas;

namespace {

double linf(const DiagramPoint& a, const DiagramPoint& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

double expected_gap(const FamilySpec& spec) {
    const RadiiTuple t = compute_radii(construct(spec));
    const ExpectedRadii e = expected_radii(spec);
    double gap = 0.0;
    if (e.r) gap = std::max(gap, std::abs(*e.r - t.r));
    if (e.w) gap = std::max(gap, std::abs(*e.w - t.w));
    if (e.D) gap = std::max(gap, std::abs(*e.D - t.D));
    if (e.R) gap = std::max(gap, std::abs(*e.R - t.R));
    return gap;
}

std::vector<FamilySpec> sample_specs(std::mt19937_64& rng, int per_family) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<FamilySpec> out;
    for (int k = 0; k < per_family; ++k) {
        for (const auto& e : edge_catalog()) out.push_back(e.at(U(rng)));
        for (const auto& p : facet_catalog()) out.push_back(p.at(U(rng), U(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("vertex bodies reproduce the printed coordinates") {
    const auto rows = vertex_table();
    REQUIRE(rows.size() == 10);
    for (const auto& row : rows) {
        CAPTURE(row.name);
        const DiagramPoint f = f_map(construct(row.spec));
        CHECK(linf(f, {row.printed[0], row.printed[1], row.printed[2]}) <= 5e-4);
        CHECK(linf(f, row.point) <= 1e-9);
    }
}

TEST_CASE("vertex sign patterns") {
    for (const auto& row : vertex_table()) {
        CAPTURE(row.name);
        const DiagramPoint f = f_map(construct(row.spec));
        const SlackVector s = eval_slacks(f);
        const auto tight = tight_set(s, f.x, 2 * f.z, 1e-7);
        for (std::size_t k = 0; k < 9; ++k) {
            const Ineq i = kAllIneqs[k];
            const bool is_tight = std::find(tight.begin(), tight.end(), i) != tight.end();
            CAPTURE(ineq_name(i));
            if (row.pattern[k] == Sign::Tight) CHECK(is_tight);
            if (row.pattern[k] == Sign::Strict) CHECK_FALSE(is_tight);
            if (row.pattern[k] == Sign::Artefact) CHECK(s[i] == 0.0);
        }
    }
    const std::string pat = pattern_string(vertex_table()[0].pattern);
    CHECK(9 == std::count_if(pat.begin(), pat.end(), [](char c) { return c != ' '; }));
}

TEST_CASE("named constants") {
    CHECK(std::abs(closed::hood_inradius_radicals() - closed::hood_inradius()) <= 1e-9);
    CHECK(std::abs(closed::iso_inradius(kPi / 3) - 0.5) <= 1e-12);
    CHECK(std::abs(closed::iso_width(kPi / 3) - 1.5) <= 1e-12);
    CHECK(std::abs(closed::iso_diameter(kPi / 3) - std::sqrt(3.0)) <= 1e-12);
    CHECK(std::abs(closed::iso_inradius(kPi / 2) - (std::sqrt(2.0) - 1)) <= 1e-12);
    CHECK(std::abs(closed::iso_diameter(kPi / 2) - 2.0) <= 1e-12);
    CHECK(closed::frt_inradius() > 0.5);
    CHECK(closed::frt_inradius() < closed::srt_inradius());
    CHECK(std::abs(closed::srt_inradius() - (std::sqrt(3.0) - 1)) <= 1e-12);
    const RadiiTuple srt = compute_radii(construct(make_spec(FamilyId::SRT)));
    CHECK(std::abs(srt.w - closed::srt_width()) <= 1e-9);
    const RadiiTuple hood = compute_radii(construct(make_spec(FamilyId::HoodVertex)));
    CHECK(std::abs(hood.r - closed::hood_inradius()) <= 1e-9);
}

TEST_CASE("property: closed forms agree with the kernel across families") {
    std::mt19937_64 rng(5);
    double worst = 0.0;
    for (const auto& spec : sample_specs(rng, 3)) {
        CAPTURE(to_string(spec));
        const double gap = expected_gap(spec);
        CHECK(gap <= 1e-8);
        worst = std::max(worst, gap);
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("property: constructed bodies are valid with the unit circumcircle") {
    std::mt19937_64 rng(6);
    for (const auto& spec : sample_specs(rng, 1)) {
        CAPTURE(to_string(spec));
        const ArcPolygon b = construct(spec);
        if (!b.degenerate) CHECK(validate(b).ok());
        const RadiiTuple t = compute_radii(b);
        CHECK(std::abs(t.R - 1.0) <= 1e-9);
        CHECK(norm(t.circumcenter) <= 1e-7);
    }
}

TEST_CASE("Yamanouti sets and Reuleaux blossoms share diagram points") {
    for (double r : {0.5, 0.55, 0.6, 0.65, 0.7, std::sqrt(3.0) - 1}) {
        CAPTURE(r);
        const DiagramPoint a = f_map(construct(make_spec(FamilyId::Yamanouti, {r})));
        const DiagramPoint b = f_map(construct(make_spec(FamilyId::ReB, {r})));
        CHECK(linf(a, b) <= 1e-9);
        CHECK(std::abs(a.x - r) <= 1e-9);
    }
}

TEST_CASE("completion mixes keep the diameter and interpolate the width") {
    for (int k = 0; k <= 10; ++k) {
        const double lambda = 0.1 * k;
        const RadiiTuple t = compute_radii(construct(make_spec(FamilyId::CompletionMix, {lambda})));
        CHECK(std::abs(t.D - std::sqrt(3.0)) <= 1e-9);
        CHECK(std::abs(t.w - (lambda * 1.5 + (1 - lambda) * std::sqrt(3.0))) <= 1e-9);
    }
}

TEST_CASE("rounded bodies move affinely towards the ball") {
    const FamilySpec inner = make_spec(FamilyId::BPen, {0.7, 1.0});
    const DiagramPoint f0 = f_map(construct(inner));
    for (double lambda : {0.0, 0.25, 0.5, 0.9}) {
        const DiagramPoint f = f_map(construct(make_rounded(inner, lambda)));
        CHECK(linf(f, {(1 - lambda) * f0.x + lambda, (1 - lambda) * f0.y + lambda, (1 - lambda) * f0.z + lambda}) <= 1e-9);
    }
}

TEST_CASE("edge families start and end at their vertices") {
    const auto rows = vertex_table();
    auto vertex = [&](const std::string& name) {
        for (const auto& row : rows) {
            if (row.name == name) return row.point;
        }
        FAIL("unknown vertex " << name);
        return DiagramPoint{};
    };
    REQUIRE(edge_catalog().size() == 17);
    for (const auto& e : edge_catalog()) {
        CAPTURE(e.name);
        CHECK(linf(f_map(construct(e.at(0.0))), vertex(e.from)) <= 1e-9);
        CHECK(linf(f_map(construct(e.at(1.0))), vertex(e.to)) <= 1e-9);
        const DiagramPoint mid = f_map(construct(e.at(0.5)));
        const SlackVector s = eval_slacks(mid);
        CHECK(std::abs(s[e.tight[0]]) <= 1e-7);
        CHECK(std::abs(s[e.tight[1]]) <= 1e-7);
        CHECK(s.min() >= -1e-9);
    }
}

TEST_CASE("edge endpoints are congruent to the vertex bodies") {
    const auto rows = vertex_table();
    for (const auto& e : edge_catalog()) {
        CAPTURE(e.name);
        for (const auto& row : rows) {
            if (row.name == e.from) CHECK(congruence_support_distance(construct(e.at(0.0)), construct(row.spec)) <= 1e-7);
        }
    }
}

TEST_CASE("companions share the diagram point") {
    const std::vector<FamilySpec> specs = {
        make_spec(FamilyId::SRT),          make_spec(FamilyId::FRT),          make_spec(FamilyId::HoodVertex),
        make_spec(FamilyId::BT),           make_spec(FamilyId::SB),           make_spec(FamilyId::RSB, {0.55}),
        make_spec(FamilyId::SBoat, {0.55, 1.2}), make_spec(FamilyId::ReB, {0.6}), make_spec(FamilyId::BEq, {0.6}),
        make_spec(FamilyId::SliRT, {0.7}), make_spec(FamilyId::BPen, {0.7, 1.0}), make_spec(FamilyId::Hood, {1.0}),
    };
    for (const auto& spec : specs) {
        CAPTURE(to_string(spec));
        const Companions c = min_max_companions(spec);
        REQUIRE(c.max_body);
        const DiagramPoint f = f_map(construct(spec));
        CHECK(linf(f_map(*c.max_body), f) <= 1e-9);
        if (c.min_body) CHECK(linf(f_map(*c.min_body), f) <= 1e-9);
    }
}

TEST_CASE("family spec parsing") {
    for (const std::string text : {"iso:gamma=0.9", "bpen:r=0.7,gamma=1", "rounded:inner=reb:r=0.6,lambda=0.3", "eqt",
                                   "triangle:r=0.45,D=1.8", "nonconcentric_reb:r=0.6,shift=0.5"}) {
        CAPTURE(text);
        const FamilySpec a = parse_family(text);
        const FamilySpec b = parse_family(to_string(a));
        CHECK(a.id == b.id);
        CHECK(a.params == b.params);
        CHECK(to_string(a) == to_string(b));
    }
    CHECK(parse_family("h").id == FamilyId::HoodVertex);
    CHECK_THROWS_AS(parse_family("nosuch"), DomainError);
    CHECK_THROWS_AS(parse_family("iso:bogus=1"), DomainError);
    CHECK_THROWS_AS(construct(parse_family("iso:gamma=7")), DomainError);
    CHECK_THROWS_AS(construct(parse_family("bpen:r=0.2,gamma=1")), DomainError);
}

TEST_CASE("property: parse and print round trip on sampled specs") {
    std::mt19937_64 rng(8);
    for (const auto& spec : sample_specs(rng, 1)) {
        const FamilySpec back = parse_family(to_string(spec));
        CHECK(to_string(back) == to_string(spec));
        CHECK(linf(f_map(construct(back)), f_map(construct(spec))) <= 1e-9);
    }
}
