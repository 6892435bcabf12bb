#pragma once

#include <random>

#include "radii_atlas/geometry.hpp"

namespace radii_atlas {

enum class RandomKind { PointHull, ClippedDisk, MinkowskiMix, ArcHull };

ArcPolygon random_point_hull(std::mt19937_64& rng);
ArcPolygon random_clipped_disk(std::mt19937_64& rng);
ArcPolygon random_minkowski_mix(std::mt19937_64& rng);
// Hull of random points and disks.
ArcPolygon random_arc_hull(std::mt19937_64& rng);
ArcPolygon random_body(std::mt19937_64& rng, RandomKind kind);
// Cycles through the kinds by index.
ArcPolygon random_body(std::mt19937_64& rng, std::size_t index);

}  // namespace radii_atlas
