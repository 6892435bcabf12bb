#pragma once

namespace radii_atlas {

// (r / R, w / 2R, D / 2R)
struct DiagramPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

}  // namespace radii_atlas
