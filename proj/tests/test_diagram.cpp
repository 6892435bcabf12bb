#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "radii_atlas/diagram.hpp"
#include "radii_atlas/families.hpp"
#include "radii_atlas/random_bodies.hpp"

using namespace radii_atlas;

namespace {

const double kS3 = std::sqrt(3.0);

bool has(const std::vector<Ineq>& v, Ineq i) { return std::find(v.begin(), v.end(), i) != v.end(); }

}  // namespace

TEST_CASE("inequality names") {
    for (Ineq i : kAllIneqs) CHECK(parse_ineq(ineq_name(i)) == i);
    CHECK_THROWS_AS(parse_ineq("ub9"), DomainError);
}

TEST_CASE("slacks at the equilateral triangle") {
    const SlackVector s = eval_slacks(0.5, 1.5, kS3, 1.0);
    for (Ineq i : {Ineq::lb2, Ineq::ib3, Ineq::ub1, Ineq::ub2, Ineq::ub3}) CHECK(std::abs(s[i]) <= 1e-12);
    for (Ineq i : {Ineq::lb1, Ineq::lb3, Ineq::ib1, Ineq::ib2}) CHECK(s[i] > 0.1);
    CHECK(s.domain_ok);
    CHECK(std::abs(s.lb2_polynomial) <= 1e-12);
}

TEST_CASE("slacks scale with the circumradius") {
    const SlackVector a = eval_slacks(0.5, 1.5, kS3, 1.0);
    const SlackVector b = eval_slacks(1.5, 4.5, 3 * kS3, 3.0);
    for (Ineq i : kAllIneqs) CHECK(std::abs(a[i] - b[i]) <= 1e-12);
}

TEST_CASE("lb3 at the segment is an unattained equality") {
    const SlackVector s = eval_slacks(0.0, 0.0, 2.0, 1.0);
    CHECK(s[Ineq::lb3] == doctest::Approx(0.0));
    CHECK_FALSE(lb3_attainable(0.0, 2.0, 1e-7));
    CHECK_FALSE(has(tight_set(s, 0.0, 2.0, 1e-7), Ineq::lb3));
    CHECK(s[Ineq::ub2] == 0.0);
}

TEST_CASE("domain violations are reported") {
    CHECK_FALSE(eval_slacks(0.9, 1.0, 1.5, 1.0).domain_ok);
    CHECK_FALSE(eval_slacks(0.5, 1.5, kS3, 0.0).domain_ok);
}

TEST_CASE("width envelopes") {
    WEnvelope e = w_envelopes(1.0, 2.0);
    CHECK(e.w_lower == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e.w_upper == doctest::Approx(2.0).epsilon(1e-12));
    e = w_envelopes(0.5, kS3);
    CHECK(e.w_lower == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(e.w_upper == doctest::Approx(1.5).epsilon(1e-12));
    e = w_envelopes(kS3 - 1, kS3);
    CHECK(e.w_lower == doctest::Approx(closed::srt_width()).epsilon(1e-9));
    CHECK(e.w_upper == doctest::Approx(kS3).epsilon(1e-12));
    CHECK_THROWS_AS(w_envelopes(0.9, 1.8), DomainError);
}

TEST_CASE("two-dimensional projection") {
    for (double p : check_2d_projection(1.0, 2.0)) CHECK(p >= -1e-15);
    for (double p : check_2d_projection(0.5, kS3)) CHECK(p >= -1e-15);
    const auto out = check_2d_projection(0.2, 1.6);
    CHECK(*std::min_element(out.begin(), out.end()) < 0.0);
}

TEST_CASE("classification of vertices, edges and facets") {
    for (const auto& row : vertex_table()) {
        const SkeletonLabel l = classify(row.point, 1e-7);
        CHECK(l.kind == SkeletonKind::Vertex);
        CHECK(l.name == row.name);
    }
    for (const auto& e : edge_catalog()) {
        const SkeletonLabel l = classify(f_map(construct(e.at(0.5))), 1e-7);
        CAPTURE(e.name);
        CHECK(to_string(l) == "edge:" + e.name);
    }
    for (const auto& p : facet_catalog()) {
        const SkeletonLabel l = classify(f_map(construct(p.at(0.5, 0.5))), 1e-7);
        CAPTURE(p.description);
        CHECK(to_string(l) == "facet:" + ineq_name(p.facet));
    }
    CHECK(classify({0.8, 0.86, 0.92}, 1e-7).kind == SkeletonKind::Interior);
    const SkeletonLabel out = classify({0.9, 0.1, 0.9}, 1e-7);
    CHECK(out.kind == SkeletonKind::Outside);
    CHECK_FALSE(out.violated.empty());
}

TEST_CASE("tolerance override from the environment") {
    ::setenv("RADII_ATLAS_TOL", "1e-3", 1);
    CHECK(default_tolerance() == 1e-3);
    ::setenv("RADII_ATLAS_TOL", "junk", 1);
    CHECK(default_tolerance() == 1e-6);
    ::unsetenv("RADII_ATLAS_TOL");
    CHECK(default_tolerance() == 1e-6);
}

TEST_CASE("mesh CSV re-read reproduces the labels") {
    const auto mesh = sample_boundary(3, 0, 1e-6);
    CHECK(mesh.size() == 9 * facet_catalog().size());
    std::stringstream csv;
    write_mesh_csv(mesh, csv);
    std::string line;
    std::getline(csv, line);
    CHECK(line == "x,y,z,label,family,params");
    std::size_t k = 0;
    while (std::getline(csv, line)) {
        std::stringstream row(line);
        std::string x, y, z, label;
        std::getline(row, x, ',');
        std::getline(row, y, ',');
        std::getline(row, z, ',');
        std::getline(row, label, ',');
        REQUIRE(k < mesh.size());
        CHECK(label == to_string(mesh[k].label));
        CHECK(to_string(classify({std::stod(x), std::stod(y), std::stod(z)}, 1e-6)) == label);
        CHECK(mesh[k].label.kind != SkeletonKind::Outside);
        CHECK(mesh[k].label.kind != SkeletonKind::Interior);
        ++k;
    }
    CHECK(k == mesh.size());
}

TEST_CASE("witness synthesis") {
    for (const auto& row : vertex_table()) {
        const Witness w = synthesize_witness(row.point);
        CAPTURE(row.name);
        CHECK(w.error <= 1e-6);
        CHECK(congruence_support_distance(w.body, construct(row.spec)) <= 1e-6);
    }
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const auto& patches = facet_catalog();
    for (int k = 0; k < 30; ++k) {
        const auto& p = patches[k % patches.size()];
        const DiagramPoint b = f_map(construct(p.at(U(rng), U(rng))));
        const double mu = 0.9 * U(rng);
        const DiagramPoint t{(1 - mu) * b.x + mu, (1 - mu) * b.y + mu, (1 - mu) * b.z + mu};
        const Witness w = synthesize_witness(t);
        const DiagramPoint f = f_map(w.body);
        CHECK(std::max({std::abs(f.x - t.x), std::abs(f.y - t.y), std::abs(f.z - t.z)}) <= 1e-6);
    }
    CHECK_THROWS_AS(synthesize_witness({0.9, 0.1, 0.9}), DomainError);
}

TEST_CASE("parallel_for covers every index and rethrows") {
    std::vector<std::atomic<int>> hits(500);
    parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                        if (i == 7) throw DomainError("boom");
                    }),
                    DomainError);
}

TEST_CASE("property: random bodies satisfy every inequality") {
    std::mt19937_64 rng(31);
    for (std::size_t k = 0; k < 120; ++k) {
        const RadiiTuple t = compute_radii(random_body(rng, k));
        const SlackVector s = eval_slacks(t.r, t.w, t.D, t.R);
        CHECK(s.min() >= -1e-9);
        CHECK(std::abs(s.lb3_form_gap) <= 1e-9);
        for (double p : check_2d_projection(t.r, t.D, t.R)) CHECK(p >= -1e-7);
        CHECK(classify(f_map(t), 1e-9).kind != SkeletonKind::Outside);
    }
}

TEST_CASE("property: the diagram is starshaped about the ball") {
    std::mt19937_64 rng(32);
    const ArcPolygon ball = make_disk({0.0, 0.0}, 1.0);
    for (std::size_t k = 0; k < 8; ++k) {
        const ArcPolygon raw = random_body(rng, k);
        const RadiiTuple t0 = compute_radii(raw);
        const ArcPolygon body = scale(translate(raw, -t0.circumcenter), 1.0 / t0.R);
        const DiagramPoint f = f_map(body);
        for (double lambda : {0.2, 0.5, 0.8}) {
            const DiagramPoint g = f_map(minkowski_combination(body, ball, lambda));
            CHECK(std::abs(g.x - ((1 - lambda) * f.x + lambda)) <= 1e-6);
            CHECK(std::abs(g.y - ((1 - lambda) * f.y + lambda)) <= 1e-6);
            CHECK(std::abs(g.z - ((1 - lambda) * f.z + lambda)) <= 1e-6);
        }
    }
}

TEST_CASE("property: lb3 forms agree and the Steinhagen coefficient stays below 3") {
    for (int i = 0; i <= 60; ++i) {
        const double D = kS3 + (2.0 - kS3) * i / 60.0;
        CHECK(steinhagen_coefficient(D) <= 3.0 + 1e-12);
        const double s = std::sqrt(4 - D * D);
        const double lo = D * D * s / (2 * (2 + s)), hi = D - 1;
        for (int j = 0; j <= 60; ++j) {
            const double r = lo + (hi - lo) * j / 60.0;
            CHECK(std::abs(lb3_bound(r, D) - lb3_bound_algebraic(r, D)) <= 1e-9);
        }
    }
    CHECK(steinhagen_coefficient(kS3) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("property: lb2 polynomial and slack share a sign") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int k = 0; k < 500; ++k) {
        const double D = kS3 + (2.0 - kS3) * U(rng);
        const double w = D * U(rng);
        const SlackVector s = eval_slacks(0.1, w, D, 1.0);
        if (std::abs(s[Ineq::lb2]) > 1e-9) CHECK((s[Ineq::lb2] > 0) == (s.lb2_polynomial > 0));
    }
}
