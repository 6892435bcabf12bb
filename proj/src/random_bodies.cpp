#include "radii_atlas/random_bodies.hpp"

#include <cmath>

namespace radii_atlas {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

template <class F>
ArcPolygon retry(F make) {
    for (;;) {
        try {
            ArcPolygon b = make();
            if (area(b) > 0.05) return b;
        } catch (const DomainError&) {
        }
    }
}

}  // namespace

ArcPolygon random_point_hull(std::mt19937_64& rng) {
    return retry([&] {
        std::vector<Point> pts;
        const int n = std::uniform_int_distribution<int>(3, 12)(rng);
        for (int i = 0; i < n; ++i) pts.push_back({uniform(rng, -1, 1), uniform(rng, -1, 1)});
        return hull_points_disks(pts, {});
    });
}

ArcPolygon random_clipped_disk(std::mt19937_64& rng) {
    return retry([&] {
        ArcPolygon b = make_disk({uniform(rng, -0.3, 0.3), uniform(rng, -0.3, 0.3)}, uniform(rng, 0.5, 1.5));
        const int cuts = std::uniform_int_distribution<int>(1, 5)(rng);
        for (int i = 0; i < cuts; ++i) {
            const UnitDir u(uniform(rng, 0, kTwoPi));
            const double h = support(b, u).h, lo = -support(b, u.opposite()).h;
            b = clip_halfplane(b, u, lo + (h - lo) * uniform(rng, 0.45, 0.95));
        }
        return b;
    });
}

ArcPolygon random_arc_hull(std::mt19937_64& rng) {
    return retry([&] {
        std::vector<Point> pts;
        std::vector<Disk> disks;
        const int n = std::uniform_int_distribution<int>(2, 8)(rng);
        const int m = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i < n; ++i) pts.push_back({uniform(rng, -1, 1), uniform(rng, -1, 1)});
        for (int i = 0; i < m; ++i) disks.push_back({{uniform(rng, -0.8, 0.8), uniform(rng, -0.8, 0.8)}, uniform(rng, 0.05, 0.45)});
        return hull_points_disks(pts, disks);
    });
}

ArcPolygon random_minkowski_mix(std::mt19937_64& rng) {
    return retry([&] {
        const ArcPolygon a = random_point_hull(rng);
        const ArcPolygon b = uniform(rng, 0, 1) < 0.5 ? random_clipped_disk(rng) : random_arc_hull(rng);
        return minkowski_combination(a, b, uniform(rng, 0.1, 0.9));
    });
}

ArcPolygon random_body(std::mt19937_64& rng, RandomKind kind) {
    switch (kind) {
        case RandomKind::PointHull:
            return random_point_hull(rng);
        case RandomKind::ClippedDisk:
            return random_clipped_disk(rng);
        case RandomKind::MinkowskiMix:
            return random_minkowski_mix(rng);
        case RandomKind::ArcHull:
            return random_arc_hull(rng);
    }
    return random_point_hull(rng);
}

ArcPolygon random_body(std::mt19937_64& rng, std::size_t index) { return random_body(rng, static_cast<RandomKind>(index % 4)); }

}  // namespace radii_atlas
