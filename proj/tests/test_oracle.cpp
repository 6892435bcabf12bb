#include <doctest.h>

#include <random>

#include "radii_atlas/families.hpp"
#include "radii_atlas/oracle.hpp"
#include "radii_atlas/radii.hpp"
#include "radii_atlas/random_bodies.hpp"
#include "radii_atlas/render.hpp"

using namespace radii_atlas;

namespace {

double max_gap(const RadiiTuple& a, const RadiiTuple& b) {
    return std::max({std::abs(a.r - b.r), std::abs(a.w - b.w), std::abs(a.D - b.D), std::abs(a.R - b.R)});
}

bool is_polygon(const ArcPolygon& b) {
    return std::all_of(b.elements.begin(), b.elements.end(), [](const BoundaryElement& e) { return std::holds_alternative<Segment>(e); });
}

}  // namespace

TEST_CASE("boundary sampling") {
    const ArcPolygon disk = make_disk({0.0, 0.0}, 1.0);
    CHECK_THROWS_AS(oracle::sample_boundary_points(disk, 4), DomainError);
    const auto cloud = oracle::sample_boundary_points(disk, 100);
    CHECK(cloud.points.size() == 100);
    for (auto p : cloud.points) CHECK(norm(p) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cloud.sagitta_bound > 0.0);
    CHECK(cloud.sagitta_bound < 1e-2);
    const auto tri = oracle::sample_boundary_points(construct(make_spec(FamilyId::EqT)), 30);
    CHECK(tri.sagitta_bound == 0.0);
}

TEST_CASE("oracle on a regular octagon") {
    std::vector<Point> v;
    for (int k = 0; k < 8; ++k) v.push_back(polar(kTwoPi * k / 8));
    const RadiiTuple t = oracle::brute_radii(oracle::sample_boundary_points(make_polygon(v), 64));
    CHECK(t.R == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.D == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(t.w == doctest::Approx(2 * std::cos(kPi / 8)).epsilon(1e-12));
    CHECK(t.r == doctest::Approx(std::cos(kPi / 8)).epsilon(1e-9));
}

TEST_CASE("oracle on the vertex bodies") {
    const RadiiTuple eq = oracle::brute_radii(oracle::sample_boundary_points(construct(make_spec(FamilyId::EqT)), 300));
    CHECK(std::abs(eq.r - 0.5) <= 1e-12);
    CHECK(std::abs(eq.w - 1.5) <= 1e-12);
    CHECK(std::abs(eq.D - std::sqrt(3.0)) <= 1e-12);
    CHECK(std::abs(eq.R - 1.0) <= 1e-12);
    const ArcPolygon ret = construct(make_spec(FamilyId::ReT));
    const RadiiTuple re = oracle::brute_radii(oracle::sample_boundary_points(ret, 3000));
    CHECK(max_gap(re, compute_radii(ret)) <= 1e-5);
}

TEST_CASE("oracle on a degenerate segment") {
    const RadiiTuple t = oracle::brute_radii(oracle::sample_boundary_points(make_segment_body({-1.0, 0.0}, {1.0, 0.0}), 20));
    CHECK(t.r == 0.0);
    CHECK(t.w == doctest::Approx(0.0));
    CHECK(t.D == doctest::Approx(2.0));
    CHECK(t.R == doctest::Approx(1.0));
}

TEST_CASE("property: kernel and oracle agree on random bodies") {
    std::mt19937_64 rng(41);
    for (std::size_t k = 0; k < 16; ++k) {
        const ArcPolygon body = random_body(rng, k);
        const RadiiTuple t = compute_radii(body);
        const RadiiTuple o = oracle::brute_radii(oracle::sample_boundary_points(body, 3000));
        CAPTURE(k);
        CHECK(max_gap(t, o) <= (is_polygon(body) ? 1e-10 : 1e-3));
        CHECK(o.R <= t.R + 1e-12);
        CHECK(o.D <= t.D + 1e-12);
    }
}

TEST_CASE("SVG rendering") {
    const ArcPolygon body = construct(make_spec(FamilyId::ReT));
    RenderStyle style;
    style.inball = "#00ff00";
    const std::string svg = render_svg(body, compute_radii(body), style);
    for (const char* cls : {"class=\"body\"", "class=\"inball\"", "class=\"circumball\"", "class=\"width\"", "class=\"diameter\""}) {
        CHECK(svg.find(cls) != std::string::npos);
    }
    CHECK(svg.find("#00ff00") != std::string::npos);
    CHECK(svg.find(" A ") != std::string::npos);
    CHECK(svg.rfind("</svg>") != std::string::npos);
}
