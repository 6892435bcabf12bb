#pragma once

#include <random>

#include "radii_atlas/geometry.hpp"

namespace tb {

using namespace radii_atlas;

inline std::vector<Point> eqt_vertices() {
    return {{0.0, 1.0}, {-std::sqrt(3.0) / 2.0, -0.5}, {std::sqrt(3.0) / 2.0, -0.5}};
}

inline ArcPolygon eqt() { return make_polygon(eqt_vertices()); }

inline ArcPolygon ret() {
    std::vector<Disk> ds;
    for (auto p : eqt_vertices()) ds.push_back({p, std::sqrt(3.0)});
    return intersect_disks(ds);
}

// Random hull of points and small disks, optionally clipped.
inline ArcPolygon random_body(std::mt19937_64& rng, bool allow_arcs = true) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::uniform_int_distribution<int> npts(3, 9), ndisk(0, 3);
    for (;;) {
        std::vector<Point> pts;
        std::vector<Disk> disks;
        const int n = npts(rng);
        for (int i = 0; i < n; ++i) pts.push_back({U(rng), U(rng)});
        if (allow_arcs) {
            const int m = ndisk(rng);
            for (int i = 0; i < m; ++i) disks.push_back({{0.8 * U(rng), 0.8 * U(rng)}, 0.05 + 0.4 * std::abs(U(rng))});
        }
        try {
            ArcPolygon b = hull_points_disks(pts, disks);
            if (area(b) < 0.05) continue;
            return b;
        } catch (const DomainError&) {
        }
    }
}

}  // namespace tb
