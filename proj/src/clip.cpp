#include <algorithm>
#include <optional>

#include "radii_atlas/geometry.hpp"

namespace radii_atlas {

namespace {

constexpr double kSliver = 1e-12;

// Either the halfplane n.x <= offset or the disk |x - c| <= radius.
struct Cutter {
    bool is_disk = false;
    Point n;
    double offset = 0.0;
    Point c;
    double radius = 0.0;

    double g(Point p) const { return is_disk ? norm(p - c) - radius : dot(n, p) - offset; }
};

// Parameter values in (lo, hi) where the element crosses the cutter boundary.
std::vector<double> crossings(const BoundaryElement& e, const Cutter& cut) {
    std::vector<double> ts;
    if (const auto* s = std::get_if<Segment>(&e)) {
        const Point d = s->b - s->a;
        if (!cut.is_disk) {
            const double ga = cut.g(s->a), gb = cut.g(s->b);
            if ((ga < 0) != (gb < 0) && ga != gb) ts.push_back(ga / (ga - gb));
        } else {
            const Point f = s->a - cut.c;
            const double A = dot(d, d), B = 2.0 * dot(f, d), C = dot(f, f) - cut.radius * cut.radius;
            const double disc = B * B - 4.0 * A * C;
            if (disc > 0.0) {
                const double sq = std::sqrt(disc);
                const double q = -0.5 * (B + (B >= 0 ? sq : -sq));
                ts.push_back(q / A);
                if (q != 0.0) ts.push_back(C / q);
            }
        }
        std::vector<double> in;
        for (double t : ts) {
            if (t > 0.0 && t < 1.0) in.push_back(t);
        }
        return in;
    }
    const auto& a = std::get<Arc>(e);
    std::vector<double> angles;
    if (!cut.is_disk) {
        const double k = (cut.offset - dot(cut.n, a.center)) / a.radius;
        if (std::abs(k) < 1.0) {
            const double phi = angle_of(cut.n), w = std::acos(k);
            angles = {phi + w, phi - w};
        }
    } else {
        const Point dv = cut.c - a.center;
        const double d = norm(dv);
        if (d > 1e-15 && d < a.radius + cut.radius && d > std::abs(a.radius - cut.radius)) {
            const double x = (a.radius * a.radius - cut.radius * cut.radius + d * d) / (2.0 * d);
            const double w = std::acos(std::clamp(x / a.radius, -1.0, 1.0));
            const double phi = angle_of(dv);
            angles = {phi + w, phi - w};
        }
    }
    std::vector<double> in;
    for (double t : angles) {
        const double rel = wrap_angle(t - a.normal_start);
        if (rel > 0.0 && rel < a.sweep()) in.push_back(a.normal_start + rel);
    }
    return in;
}

std::optional<BoundaryElement> sub_element(const BoundaryElement& e, double t0, double t1) {
    if (const auto* s = std::get_if<Segment>(&e)) {
        const Point d = s->b - s->a;
        Segment out{s->a + t0 * d, s->a + t1 * d};
        if (dist(out.a, out.b) <= kSliver) return std::nullopt;
        return out;
    }
    const auto& a = std::get<Arc>(e);
    if (a.radius * (t1 - t0) <= kSliver) return std::nullopt;
    return Arc{a.center, a.radius, t0, t1};
}

Point point_at(const BoundaryElement& e, double t) {
    if (const auto* s = std::get_if<Segment>(&e)) return s->a + t * (s->b - s->a);
    const auto& a = std::get<Arc>(e);
    return a.center + a.radius * polar(t);
}

bool contains(const ArcPolygon& body, Point p) {
    bool in_chords = true;
    int chords = 0;
    for (const auto& e : body.elements) {
        const Point a = element_start(e), b = element_end(e);
        const bool has_chord = dist(a, b) > 0.0;
        const double side = has_chord ? cross(b - a, p - a) : 0.0;
        if (has_chord) {
            ++chords;
            if (side < 0.0) in_chords = false;
        }
        if (const auto* arc = std::get_if<Arc>(&e)) {
            if (dist(p, arc->center) < arc->radius && side <= 0.0) return true;
        }
    }
    return chords >= 3 && in_chords;
}

ArcPolygon clip(const ArcPolygon& body, const Cutter& cut, bool& untouched) {
    std::vector<BoundaryElement> kept;
    untouched = true;
    for (const auto& e : body.elements) {
        double lo = 0.0, hi = 1.0;
        if (const auto* a = std::get_if<Arc>(&e)) {
            lo = a->normal_start;
            hi = a->normal_start + a->sweep();
        }
        std::vector<double> ts = crossings(e, cut);
        ts.push_back(lo);
        ts.push_back(hi);
        std::sort(ts.begin(), ts.end());
        for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
            if (ts[k + 1] - ts[k] <= 0.0) continue;
            const Point mid = point_at(e, 0.5 * (ts[k] + ts[k + 1]));
            if (cut.g(mid) < 0.0) {
                if (auto sub = sub_element(e, ts[k], ts[k + 1])) kept.push_back(*sub);
            } else {
                untouched = false;
            }
        }
    }
    ArcPolygon out;
    if (kept.empty()) return out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        out.elements.push_back(kept[i]);
        const Point from = element_end(kept[i]);
        const Point to = element_start(kept[(i + 1) % kept.size()]);
        if (dist(from, to) <= kSliver) continue;
        if (!cut.is_disk) {
            out.elements.emplace_back(Segment{from, to});
        } else {
            const double t0 = angle_of(from - cut.c);
            double t1 = angle_of(to - cut.c);
            if (t1 <= t0) t1 += kTwoPi;
            out.elements.emplace_back(Arc{cut.c, cut.radius, t0, t1});
        }
    }
    return from_pieces(normal_pieces(out));
}

}  // namespace

ArcPolygon clip_halfplane(const ArcPolygon& body, UnitDir normal, double offset) {
    if (body.degenerate) throw DomainError("clip_halfplane: degenerate body not accepted");
    const double hmax = support(body, normal).h;
    const double hmin = -support(body, normal.opposite()).h;
    if (offset >= hmax - kTauGeom) throw DomainError("clip_halfplane: halfplane contains the body or touches it tangentially");
    if (offset <= hmin + kTauGeom) throw DomainError("clip_halfplane: intersection is empty or tangential");
    Cutter cut;
    cut.n = normal.vec();
    cut.offset = offset;
    bool untouched = false;
    ArcPolygon out = clip(body, cut, untouched);
    if (out.elements.empty()) throw DomainError("clip_halfplane: intersection is empty");
    return out;
}

ArcPolygon clip_disk(const ArcPolygon& body, Point center, double radius) {
    if (body.degenerate) throw DomainError("clip_disk: degenerate body not accepted");
    if (!(radius > 0.0)) throw DomainError("clip_disk: radius must be positive");
    Cutter cut;
    cut.is_disk = true;
    cut.c = center;
    cut.radius = radius;
    bool untouched = false;
    ArcPolygon out = clip(body, cut, untouched);
    if (untouched && !out.elements.empty()) return body;
    if (out.elements.empty()) {
        // Whole boundary outside the disk: the disk sits inside the body or they are disjoint.
        const bool inside = contains(body, center);
        if (!inside) throw DomainError("clip_disk: intersection is empty");
        return make_disk(center, radius);
    }
    return out;
}

}  // namespace radii_atlas
