#pragma once

#include <array>
#include <string>
#include <vector>

#include "radii_atlas/geometry.hpp"

namespace radii_atlas {

struct CircumCertificate {
    std::vector<Point> touching;
    double hull_margin = 0.0;
};

struct InCertificate {
    std::vector<UnitDir> normals;
    std::vector<Point> touch_points;
    double hull_margin = 0.0;
};

struct RadiiTuple {
    double r = 0.0;
    double w = 0.0;
    double D = 0.0;
    double R = 0.0;
    Point incenter;
    UnitDir width_dir;
    std::array<Point, 2> diam_pair{};
    Point circumcenter;
    CircumCertificate circum_cert;
    InCertificate in_cert;
};

struct WidthResult {
    double w = 0.0;
    UnitDir dir;
};

struct DiameterResult {
    double D = 0.0;
    UnitDir dir;
    std::array<Point, 2> pair{};
};

struct CircumResult {
    Point center;
    double R = 0.0;
    CircumCertificate cert;
};

struct InResult {
    Point center;
    double r = 0.0;
    InCertificate cert;
};

WidthResult width(const ArcPolygon& body);
DiameterResult diameter(const ArcPolygon& body);
CircumResult circumball(const ArcPolygon& body);
InResult inball(const ArcPolygon& body);
RadiiTuple compute_radii(const ArcPolygon& body);

// min over u of h(u) - x.u; the distance to the boundary for interior x.
double inner_distance(const ArcPolygon& body, Point x);
// max over y in the body of |x - y|.
double farthest_distance(const ArcPolygon& body, Point x);

// Signed margin of p in conv(pts): distance to the nearest hull edge when
// inside, minus the distance to the hull when outside, zero on a segment hull.
double hull_margin(Point p, const std::vector<Point>& pts);

struct CertificateReport {
    bool valid = true;
    std::vector<std::string> failures;
};

CertificateReport verify_certificates(const ArcPolygon& body, const RadiiTuple& radii, double tol = 1e-7);

}  // namespace radii_atlas
