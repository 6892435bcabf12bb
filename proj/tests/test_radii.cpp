#include <doctest.h>

#include <random>

#include "radii_atlas/radii.hpp"
#include "test_bodies.hpp"

using namespace radii_atlas;

namespace {

double sweep_width(const ArcPolygon& b, int m) {
    double w = 1e300;
    for (int k = 0; k < m; ++k) w = std::min(w, breadth(b, kPi * k / m));
    return w;
}

std::vector<Point> boundary_samples(const ArcPolygon& b, int per_element) {
    std::vector<Point> pts;
    for (const auto& e : b.elements) {
        for (int k = 0; k < per_element; ++k) {
            const double t = static_cast<double>(k) / per_element;
            if (const auto* s = std::get_if<Segment>(&e)) {
                pts.push_back(s->a + t * (s->b - s->a));
            } else {
                const auto& a = std::get<Arc>(e);
                pts.push_back(a.center + a.radius * polar(a.normal_start + t * a.sweep()));
            }
        }
    }
    return pts;
}

void check_inequalities(const RadiiTuple& t, double tol) {
    CHECK(2 * t.r <= t.w + tol);
    CHECK(t.w <= t.D + tol);
    CHECK(t.D <= 2 * t.R + tol);
    CHECK(t.w <= t.r + t.R + tol);
    CHECK(t.r + t.R <= t.D + tol);
    CHECK(t.D >= std::sqrt(3.0) * t.R - tol);
}

}  // namespace

TEST_CASE("width") {
    CHECK(width(make_segment_body({-1, 0}, {1, 0})).w == 0.0);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<Point> pts;
    for (int i = 0; i < 9; ++i) {
        const double t = kTwoPi * i / 9.0 + 0.3 * U(rng);
        const double rad = 1.0 + 0.2 * U(rng);
        pts.push_back(rad * polar(t));
    }
    const auto poly = make_polygon(pts);
    REQUIRE(validate(poly).ok());
    CHECK(std::abs(width(poly).w - sweep_width(poly, 100000)) <= 1e-6);
    CHECK(width(poly).w <= sweep_width(poly, 100000) + 1e-15);
}

TEST_CASE("diameter") {
    CHECK(diameter(make_disk({0.2, 0.1}, 1.0)).D == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(diameter(tb::eqt()).D == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    const auto clipped = clip_halfplane(make_disk({0, 0}, 1.0), UnitDir(0.4), 0.3);
    const auto pts = boundary_samples(clipped, 2500);
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, dist(pts[i], pts[j]));
    }
    const auto d = diameter(clipped);
    CHECK(std::abs(d.D - best) <= 1e-4);
    CHECK(dist(d.pair[0], d.pair[1]) == doctest::Approx(d.D));
}

TEST_CASE("circumball") {
    const auto obtuse = make_polygon({{-1, 0}, {1, 0}, {0, 0.1}});
    const auto c = circumball(obtuse);
    CHECK(norm(c.center) <= 1e-12);
    CHECK(c.R == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.cert.touching.size() == 2);
    const auto cb = circumball(tb::ret());
    CHECK(norm(cb.center) <= 1e-12);
    CHECK(cb.R == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("inball") {
    const auto deg = inball(make_segment_body({0, 0}, {2, 0}));
    CHECK(deg.r == 0.0);
    CHECK(deg.center.x == doctest::Approx(1.0));
    CHECK(deg.cert.normals.empty());
    CHECK(inball(tb::eqt()).r == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(inball(make_polygon({{-1, 0}, {1, 0}, {0, 1}})).r == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
    const auto rt = inball(tb::ret());
    CHECK(rt.r == doctest::Approx(std::sqrt(3.0) - 1.0).epsilon(1e-12));
    CHECK(norm(rt.center) <= 1e-9);
}

TEST_CASE("compute_radii on the unit ball") {
    const auto t = compute_radii(make_disk({0, 0}, 1.0));
    CHECK(t.r == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.w == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(t.D == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(t.R == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("certificates") {
    const auto r = tb::ret();
    const auto t = compute_radii(r);
    const auto rep = verify_certificates(r, t);
    CHECK(rep.valid);
    REQUIRE(t.circum_cert.touching.size() == 3);
    REQUIRE(t.in_cert.normals.size() == 3);
    std::vector<double> angs;
    for (const auto& n : t.in_cert.normals) angs.push_back(n.theta);
    std::sort(angs.begin(), angs.end());
    CHECK(angs[1] - angs[0] == doctest::Approx(kTwoPi / 3).epsilon(1e-6));
    CHECK(angs[2] - angs[1] == doctest::Approx(kTwoPi / 3).epsilon(1e-6));

    const auto ball = make_disk({0, 0}, 1.0);
    const auto tb_ = compute_radii(ball);
    CHECK(verify_certificates(ball, tb_).valid);
    REQUIRE(tb_.circum_cert.touching.size() == 2);
    CHECK(norm(tb_.circum_cert.touching[0] + tb_.circum_cert.touching[1]) <= 1e-12);

    auto wrong = t;
    wrong.incenter = wrong.incenter + Point{1e-3, 0.0};
    CHECK_FALSE(verify_certificates(r, wrong).valid);
}

TEST_CASE("property: radii invariances and inequalities") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> U(-1.0, 1.0), L(0.3, 2.5), A(0.0, kTwoPi);
    for (int i = 0; i < 30; ++i) {
        const auto b = tb::random_body(rng);
        const auto t = compute_radii(b);
        check_inequalities(t, 1e-9);
        CHECK(verify_certificates(b, t).valid);
        CHECK(t.circum_cert.hull_margin >= -1e-7);
        CHECK(t.in_cert.hull_margin >= -1e-7);

        const auto moved = translate(rotate(b, A(rng)), {U(rng), U(rng)});
        const auto tm = compute_radii(moved);
        CHECK(std::abs(tm.r - t.r) <= 1e-9);
        CHECK(std::abs(tm.w - t.w) <= 1e-9);
        CHECK(std::abs(tm.D - t.D) <= 1e-9);
        CHECK(std::abs(tm.R - t.R) <= 1e-9);

        const double lam = L(rng);
        const auto ts = compute_radii(scale(b, lam, {U(rng), U(rng)}));
        CHECK(std::abs(ts.r - lam * t.r) <= 1e-9);
        CHECK(std::abs(ts.w - lam * t.w) <= 1e-9);
        CHECK(std::abs(ts.D - lam * t.D) <= 1e-9);
        CHECK(std::abs(ts.R - lam * t.R) <= 1e-9);

        const double rho = 0.5 * std::abs(U(rng)) + 0.05;
        const auto td = compute_radii(minkowski_sum(b, make_disk({0, 0}, rho)));
        CHECK(std::abs(td.r - t.r - rho) <= 1e-9);
        CHECK(std::abs(td.w - t.w - 2 * rho) <= 1e-9);
        CHECK(std::abs(td.D - t.D - 2 * rho) <= 1e-9);
        CHECK(std::abs(td.R - t.R - rho) <= 1e-9);

        const UnitDir n(A(rng));
        const double lo = -support(b, n.opposite()).h, hi = support(b, n).h;
        const auto tc = compute_radii(clip_halfplane(b, n, lo + 0.6 * (hi - lo)));
        CHECK(tc.r <= t.r + 1e-9);
        CHECK(tc.w <= t.w + 1e-9);
        CHECK(tc.D <= t.D + 1e-9);
        CHECK(tc.R <= t.R + 1e-9);
    }
}
