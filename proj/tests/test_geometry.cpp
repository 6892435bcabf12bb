#include <doctest.h>

#include <random>

#include "radii_atlas/body_io.hpp"
#include "radii_atlas/geometry.hpp"
#include "radii_atlas/radii.hpp"
#include "test_bodies.hpp"

using namespace radii_atlas;

namespace {

// Support value by brute force over densely sampled boundary points.
double sampled_support(const ArcPolygon& b, double theta, int per_arc = 4000) {
    const Point u = polar(theta);
    double best = -1e300;
    for (const auto& e : b.elements) {
        if (const auto* s = std::get_if<Segment>(&e)) {
            best = std::max({best, dot(s->a, u), dot(s->b, u)});
        } else {
            const auto& a = std::get<Arc>(e);
            for (int k = 0; k <= per_arc; ++k) {
                best = std::max(best, dot(a.center + a.radius * polar(a.normal_start + a.sweep() * k / per_arc), u));
            }
        }
    }
    return best;
}

int count_arcs(const ArcPolygon& b) {
    int n = 0;
    for (const auto& e : b.elements) n += std::holds_alternative<Arc>(e) ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("validate accepts disk and triangle, flags clockwise order") {
    CHECK(validate(make_disk({0, 0}, 1.0)).ok());
    CHECK(validate(tb::eqt()).ok());
    auto v = tb::eqt_vertices();
    std::swap(v[1], v[2]);
    const auto rep = validate(make_polygon(v));
    REQUIRE_FALSE(rep.ok());
    bool mono = false;
    for (const auto& s : rep.violations) mono = mono || s.find("normal monotonicity") != std::string::npos;
    CHECK(mono);
}

TEST_CASE("validate reports broken input without throwing") {
    ArcPolygon empty;
    CHECK_FALSE(validate(empty).ok());
    ArcPolygon gap;
    gap.elements.emplace_back(Segment{{0, 0}, {1, 0}});
    gap.elements.emplace_back(Segment{{1, 0}, {0, 1}});
    gap.elements.emplace_back(Segment{{0, 1.1}, {0, 0}});
    CHECK_FALSE(validate(gap).ok());
    ArcPolygon bad_arc;
    bad_arc.elements.emplace_back(Arc{{0, 0}, -1.0, 0.0, kTwoPi});
    CHECK_FALSE(validate(bad_arc).ok());
    CHECK(validate(make_segment_body({-1, 0}, {1, 0})).ok());
}

TEST_CASE("support values") {
    CHECK(support(make_disk({0, 0}, 1.0), UnitDir(0.0)).h == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(support(tb::eqt(), UnitDir(kPi / 2)).h == doctest::Approx(1.0).epsilon(1e-15));
    const auto s = support(tb::ret(), UnitDir(-kPi / 2));
    CHECK(s.h == doctest::Approx(std::sqrt(3.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("breadth values") {
    CHECK(breadth(make_disk({0.3, -0.2}, 1.0), 0.7) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(breadth(tb::eqt(), kPi / 2) == doctest::Approx(1.5).epsilon(1e-15));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.0, kTwoPi);
    const auto r = tb::ret();
    for (int i = 0; i < 12; ++i) CHECK(breadth(r, U(rng)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("minkowski sum examples") {
    const auto ball = make_disk({0, 0}, 1.0);
    const auto two = minkowski_sum(ball, ball);
    REQUIRE(two.elements.size() == 1);
    const auto& a = std::get<Arc>(two.elements[0]);
    CHECK(a.radius == doctest::Approx(2.0));
    CHECK(a.normal_start == 0.0);
    CHECK(a.sweep() == doctest::Approx(kTwoPi));

    const auto mix = minkowski_combination(tb::eqt(), tb::ret(), 0.5);
    CHECK(validate(mix).ok());
    const auto t = compute_radii(mix);
    CHECK(t.D == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(t.w == doctest::Approx(0.75 + std::sqrt(3.0) / 2).epsilon(1e-12));

    const auto sq = make_polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    const double rho = 0.3;
    const auto sd = minkowski_sum(sq, make_disk({0, 0}, rho));
    CHECK(support(sd, UnitDir(kPi / 4)).h == doctest::Approx(support(sq, UnitDir(kPi / 4)).h + rho).epsilon(1e-14));
    CHECK(count_arcs(sd) == 4);

    const auto tri2 = minkowski_sum(tb::eqt(), scale(tb::eqt(), 0.5));
    CHECK(count_arcs(tri2) == 0);
    CHECK(tri2.elements.size() == 3);

    const auto shifted = minkowski_sum(make_disk({1, 2}, 0.5), make_disk({-3, 1}, 0.25));
    REQUIRE(shifted.elements.size() == 1);
    const auto& sa = std::get<Arc>(shifted.elements[0]);
    CHECK(sa.center.x == doctest::Approx(-2.0));
    CHECK(sa.center.y == doctest::Approx(3.0));
    CHECK(sa.radius == doctest::Approx(0.75));

    const auto vertex_arc = minkowski_sum(tb::eqt(), make_disk({0, 0}, 0.1));
    for (const auto& e : vertex_arc.elements) {
        if (const auto* arc = std::get_if<Arc>(&e)) CHECK(arc->radius == doctest::Approx(0.1));
    }

    // Upper and lower half disks meet at a single normal angle on each side.
    const auto upper = clip_halfplane(make_disk({0, 0}, 1.0), UnitDir(1.5 * kPi), 0.0);
    const auto lower = clip_halfplane(make_disk({0, 0}, 1.0), UnitDir(0.5 * kPi), 0.0);
    const auto both = minkowski_sum(upper, lower);
    CHECK(validate(both).ok());
    for (const auto& e : both.elements) {
        if (const auto* arc = std::get_if<Arc>(&e)) CHECK(arc->sweep() > 1e-6);
    }
    CHECK(breadth(both, 0.0) == doctest::Approx(4.0));
}

TEST_CASE("scale rejects non-positive factors") {
    CHECK_THROWS_AS(scale(tb::eqt(), 0.0), DomainError);
    CHECK_THROWS_AS(scale(tb::eqt(), -1.0), DomainError);
    CHECK_THROWS_AS(scale(make_segment_body({0, 0}, {1, 0}), 2.0), DomainError);
}

TEST_CASE("clip halfplane") {
    const auto ball = make_disk({0, 0}, 1.0);
    const auto half = clip_halfplane(ball, UnitDir(0.0), 0.0);
    CHECK(validate(half).ok());
    CHECK(area(half) == doctest::Approx(kPi / 2).epsilon(1e-13));
    CHECK_THROWS_AS(clip_halfplane(ball, UnitDir(0.0), 1.0), DomainError);
    CHECK_THROWS_AS(clip_halfplane(ball, UnitDir(0.0), 2.0), DomainError);
    CHECK_THROWS_AS(clip_halfplane(ball, UnitDir(0.0), -1.0), DomainError);
    CHECK_THROWS_AS(clip_halfplane(ball, UnitDir(0.0), -3.0), DomainError);

    // Line through the top vertex tangent to the concentric inball.
    const double r = std::sqrt(3.0) - 1.0;
    const double alpha = std::asin(r);
    const auto srt = clip_halfplane(tb::ret(), UnitDir(alpha), r);
    CHECK(validate(srt).ok());
    const auto t = compute_radii(srt);
    CHECK(t.R == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(t.w / (2 * t.R) == doctest::Approx(0.8440).epsilon(5e-4));
    CHECK(t.w == doctest::Approx(std::sqrt(3.0) * std::cos(kPi / 3 - std::asin(r))).epsilon(1e-10));
}

TEST_CASE("hull of points and disks") {
    const double rf = 3.0 * std::sqrt(3.0) / 8.0;
    const auto frt_min = hull_points_disks(tb::eqt_vertices(), {{{0.0, rf - 0.5}, rf}});
    CHECK(validate(frt_min).ok());
    const auto t = compute_radii(frt_min);
    CHECK(t.r / t.R == doctest::Approx(0.6495).epsilon(5e-4));
    CHECK(t.w / (2 * t.R) == doctest::Approx(0.75).epsilon(5e-4));
    CHECK(t.D / (2 * t.R) == doctest::Approx(0.8660).epsilon(5e-4));

    const auto single = hull_points_disks({}, {{{0.5, 0.5}, 2.0}});
    REQUIRE(single.elements.size() == 1);
    CHECK(std::get<Arc>(single.elements[0]).radius == 2.0);

    const auto sq = hull_points_disks({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.2, 0.7}}, {});
    CHECK(sq.elements.size() == 4);
    CHECK(area(sq) == doctest::Approx(1.0));
}

TEST_CASE("property: support additivity and validity of sums") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0.0, kTwoPi);
    for (int i = 0; i < 40; ++i) {
        const auto a = tb::random_body(rng), b = tb::random_body(rng);
        const auto s = minkowski_sum(a, b);
        CHECK(validate(s).ok());
        for (int k = 0; k < 10; ++k) {
            const double t = U(rng);
            CHECK(std::abs(support(s, UnitDir(t)).h - support(a, UnitDir(t)).h - support(b, UnitDir(t)).h) <= 1e-9);
        }
    }
}

TEST_CASE("property: support agrees with a sampled oracle") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> U(0.0, kTwoPi);
    for (int i = 0; i < 20; ++i) {
        const auto a = tb::random_body(rng);
        for (int k = 0; k < 10; ++k) {
            const double t = U(rng);
            const double h = support(a, UnitDir(t)).h;
            const double hs = sampled_support(a, t);
            CHECK(h >= hs - 1e-12);
            CHECK(h - hs <= 1e-6);
        }
    }
}

TEST_CASE("property: clip monotonicity and validity") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> U(0.0, kTwoPi), F(0.1, 0.9);
    for (int i = 0; i < 40; ++i) {
        const auto a = tb::random_body(rng);
        const UnitDir n(U(rng));
        const double lo = -support(a, n.opposite()).h, hi = support(a, n).h;
        const double o1 = lo + F(rng) * (hi - lo);
        const double o2 = o1 + 0.5 * (hi - o1);
        const auto c1 = clip_halfplane(a, n, o1);
        const auto c2 = clip_halfplane(a, n, o2);
        CHECK(validate(c1).ok());
        CHECK(validate(c2).ok());
        for (int k = 0; k < 10; ++k) {
            const UnitDir u(U(rng));
            CHECK(support(c1, u).h <= support(c2, u).h + 1e-12);
            CHECK(support(c2, u).h <= support(a, u).h + 1e-12);
        }
        CHECK(support(c1, n).h == doctest::Approx(o1).epsilon(1e-12));
    }
}

TEST_CASE("property: scale homogeneity and hull idempotence") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> U(0.0, kTwoPi), L(0.2, 3.0);
    for (int i = 0; i < 30; ++i) {
        const auto a = tb::random_body(rng);
        const double lam = L(rng);
        const Point c{0.3, -0.1};
        const auto s = scale(a, lam, c);
        CHECK(validate(s).ok());
        const auto h = hull_bodies({a});
        const auto hh = hull_bodies({a, a});
        for (int k = 0; k < 10; ++k) {
            const UnitDir u(U(rng));
            CHECK(std::abs(support(s, u).h - (lam * (support(a, u).h - dot(c, u.vec())) + dot(c, u.vec()))) <= 1e-9);
            CHECK(std::abs(support(h, u).h - support(a, u).h) <= 1e-9);
            CHECK(std::abs(support(hh, u).h - support(a, u).h) <= 1e-9);
        }
    }
}

TEST_CASE("property: JSON round trip") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 20; ++i) {
        const auto a = tb::random_body(rng);
        const auto b = body_from_json(nlohmann::json::parse(body_to_json(a).dump()));
        REQUIRE(a.elements.size() == b.elements.size());
        for (int k = 0; k < 16; ++k) {
            const UnitDir u(kTwoPi * k / 16.0);
            CHECK(std::abs(support(a, u).h - support(b, u).h) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(body_from_json(nlohmann::json::parse(R"({"elements":[{"type":"blob"}]})")), DomainError);
}
