#pragma once

#include <string>

#include "radii_atlas/geometry.hpp"
#include "radii_atlas/radii.hpp"

namespace radii_atlas {

struct RenderStyle {
    std::string body = "#222222";
    std::string fill = "#f2f2f2";
    std::string inball = "green";
    std::string circumball = "blue";
    std::string width = "#d07000";
    std::string diameter = "#b00020";
    int pixels = 480;
};

// SVG with the body, its inball and circumball, and width and diameter chords in separate stroke classes.
std::string render_svg(const ArcPolygon& body, const RadiiTuple& radii, const RenderStyle& style = {});

}  // namespace radii_atlas
