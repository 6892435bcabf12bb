#pragma once

#include <vector>

#include "radii_atlas/geometry.hpp"
#include "radii_atlas/radii.hpp"

namespace radii_atlas::oracle {

struct PointCloudBody {
    std::vector<Point> points;
    int source_resolution = 0;
    // Largest distance from a sampled arc chord to its arc.
    double sagitta_bound = 0.0;
};

// n boundary points in CCW order; every element start is included, arcs are sampled by normal angle.
PointCloudBody sample_boundary_points(const ArcPolygon& body, int n);

// Radii of the point cloud from the definitions: all pairs for D, move-to-front enclosing ball for R,
// 4N directions plus the cloud's edge normals for w, grid and local descent for r.
RadiiTuple brute_radii(const PointCloudBody& cloud, unsigned seed = 1);

}  // namespace radii_atlas::oracle
