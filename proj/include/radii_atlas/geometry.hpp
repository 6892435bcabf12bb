#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace radii_atlas {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kTauGeom = 1e-9;

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(Point a) { return {-a.x, -a.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point polar(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline Point rotate(Point p, double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Wraps into [0, 2pi).
double wrap_angle(double theta);
double angle_of(Point v);

struct UnitDir {
    double theta = 0.0;

    UnitDir() = default;
    explicit UnitDir(double t) : theta(wrap_angle(t)) {}
    Point vec() const { return polar(theta); }
    UnitDir opposite() const { return UnitDir(theta + kPi); }
};

struct Segment {
    Point a;
    Point b;
};

// Boundary arc c + radius * (cos t, sin t) for t in [normal_start, normal_end].
// normal_end may exceed 2pi; the sweep normal_end - normal_start lies in (0, 2pi].
struct Arc {
    Point center;
    double radius = 0.0;
    double normal_start = 0.0;
    double normal_end = 0.0;

    double sweep() const { return normal_end - normal_start; }
    Point start() const { return center + radius * polar(normal_start); }
    Point end() const { return center + radius * polar(normal_end); }
};

using BoundaryElement = std::variant<Segment, Arc>;

struct ArcPolygon {
    std::vector<BoundaryElement> elements;
    bool degenerate = false;
};

struct SupportValue {
    double h = 0.0;
    Point point;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

Point element_start(const BoundaryElement& e);
Point element_end(const BoundaryElement& e);
double segment_normal_angle(const Segment& s);

ValidationReport validate(const ArcPolygon& body, double tol = kTauGeom);

SupportValue support(const ArcPolygon& body, UnitDir u);
double breadth(const ArcPolygon& body, double theta);

ArcPolygon minkowski_sum(const ArcPolygon& a, const ArcPolygon& b);
// (1 - lambda) a + lambda b
ArcPolygon minkowski_combination(const ArcPolygon& a, const ArcPolygon& b, double lambda);
ArcPolygon scale(const ArcPolygon& body, double lambda, Point center = {});
ArcPolygon translate(const ArcPolygon& body, Point shift);
ArcPolygon rotate(const ArcPolygon& body, double phi, Point center = {});

// Keeps {x : n . x <= offset}.
ArcPolygon clip_halfplane(const ArcPolygon& body, UnitDir normal, double offset);
// Keeps body intersected with the closed disk.
ArcPolygon clip_disk(const ArcPolygon& body, Point center, double radius);

struct Disk {
    Point center;
    double radius = 0.0;
};

ArcPolygon hull_points_disks(const std::vector<Point>& points, const std::vector<Disk>& disks);
ArcPolygon hull_bodies(const std::vector<ArcPolygon>& bodies);

ArcPolygon make_disk(Point center, double radius);
ArcPolygon make_polygon(const std::vector<Point>& ccw_vertices);
ArcPolygon make_segment_body(Point a, Point b);
ArcPolygon intersect_disks(const std::vector<Disk>& disks);

double area(const ArcPolygon& body);
double perimeter(const ArcPolygon& body);
// Boundary vertices where the outward normal jumps.
std::vector<Point> corners(const ArcPolygon& body);

// Support-point parametrization by outward normal angle. Pieces are sorted,
// cover [0, 2pi] without gaps, and on [t0, t1] the support point is
// center + radius * (cos t, sin t). A radius of zero marks a vertex.
struct NormalPiece {
    double t0 = 0.0;
    double t1 = 0.0;
    Point center;
    double radius = 0.0;
};

std::vector<NormalPiece> normal_pieces(const ArcPolygon& body);
ArcPolygon from_pieces(const std::vector<NormalPiece>& pieces);

// max over n directions of |h_a - h_b|.
double support_distance(const ArcPolygon& a, const ArcPolygon& b, int n = 720);
// Support distance minimized over rotations about the origin and reflections of b.
double congruence_support_distance(const ArcPolygon& a, const ArcPolygon& b, int n = 720);

}  // namespace radii_atlas
