#include "radii_atlas/geometry.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace radii_atlas {

namespace {

constexpr double kPieceEps = 1e-13;
constexpr double kPointEps = 1e-12;

double start_normal(const BoundaryElement& e) {
    if (const auto* s = std::get_if<Segment>(&e)) return segment_normal_angle(*s);
    return wrap_angle(std::get<Arc>(e).normal_start);
}

double end_normal(const BoundaryElement& e) {
    if (const auto* s = std::get_if<Segment>(&e)) return segment_normal_angle(*s);
    return wrap_angle(std::get<Arc>(e).normal_end);
}

// Normal gap from element i to i+1, with tiny negative turns folded to zero.
double normal_gap(const BoundaryElement& cur, const BoundaryElement& next) {
    double g = wrap_angle(start_normal(next) - end_normal(cur));
    if (g > kTwoPi - 1e-7) g = 0.0;
    return g;
}

bool same_support(const NormalPiece& a, const NormalPiece& b) {
    return dist(a.center, b.center) <= kPointEps && std::abs(a.radius - b.radius) <= kPointEps;
}

std::vector<NormalPiece> sum_pieces(const std::vector<NormalPiece>& a, const std::vector<NormalPiece>& b,
                                    double wa, double wb) {
    std::vector<double> breaks;
    for (const auto& p : a) breaks.push_back(p.t0);
    for (const auto& p : b) breaks.push_back(p.t0);
    breaks.push_back(kTwoPi);
    std::sort(breaks.begin(), breaks.end());
    std::vector<NormalPiece> out;
    std::size_t ia = 0, ib = 0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double s = breaks[k], e = breaks[k + 1];
        if (e - s <= 0.0) continue;
        const double mid = 0.5 * (s + e);
        while (ia + 1 < a.size() && a[ia].t1 < mid) ++ia;
        while (ib + 1 < b.size() && b[ib].t1 < mid) ++ib;
        out.push_back({s, e, wa * a[ia].center + wb * b[ib].center, wa * a[ia].radius + wb * b[ib].radius});
    }
    return out;
}

struct Sinusoid {
    Point c;
    double rho = 0.0;
    double at(double t) const { return dot(c, polar(t)) + rho; }
};

// Upper envelope of support functions c.u + rho over [s, e].
void envelope_on(const std::vector<Sinusoid>& fs, double s, double e, std::vector<NormalPiece>& out) {
    std::vector<double> cuts{s, e};
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            const Point d = fs[i].c - fs[j].c;
            const double len = norm(d);
            if (len < 1e-15) continue;
            const double k = (fs[j].rho - fs[i].rho) / len;
            if (std::abs(k) > 1.0) continue;
            const double phi = angle_of(d);
            const double a = std::acos(k);
            for (double t : {phi + a, phi - a}) {
                double w = wrap_angle(t);
                for (double cand : {w, w + kTwoPi, w - kTwoPi}) {
                    if (cand > s && cand < e) cuts.push_back(cand);
                }
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double a = cuts[k], b = cuts[k + 1];
        if (b - a <= 0.0) continue;
        const double mid = 0.5 * (a + b);
        std::size_t best = 0;
        double bv = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const double v = fs[i].at(mid);
            if (v > bv + 1e-15) {
                bv = v;
                best = i;
            }
        }
        out.push_back({a, b, fs[best].c, fs[best].rho});
    }
}

std::vector<Point> monotone_chain(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end(), [](Point a, Point b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

void require_nondegenerate(const ArcPolygon& body, const char* op) {
    if (body.degenerate) throw DomainError(std::string(op) + ": degenerate body not accepted");
    if (body.elements.empty()) throw DomainError(std::string(op) + ": empty body");
}

}  // namespace

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

double angle_of(Point v) { return wrap_angle(std::atan2(v.y, v.x)); }

Point element_start(const BoundaryElement& e) {
    if (const auto* s = std::get_if<Segment>(&e)) return s->a;
    return std::get<Arc>(e).start();
}

Point element_end(const BoundaryElement& e) {
    if (const auto* s = std::get_if<Segment>(&e)) return s->b;
    return std::get<Arc>(e).end();
}

double segment_normal_angle(const Segment& s) {
    const Point d = s.b - s.a;
    return angle_of({d.y, -d.x});
}

ValidationReport validate(const ArcPolygon& body, double tol) {
    ValidationReport rep;
    const auto& els = body.elements;
    if (els.empty()) {
        rep.violations.push_back("empty boundary");
        return rep;
    }
    double scale_len = 1.0;
    for (const auto& e : els) {
        scale_len = std::max({scale_len, norm(element_start(e)), norm(element_end(e))});
    }
    for (std::size_t i = 0; i < els.size(); ++i) {
        std::ostringstream where;
        where << "element " << i << ": ";
        if (const auto* s = std::get_if<Segment>(&els[i])) {
            if (!std::isfinite(s->a.x) || !std::isfinite(s->a.y) || !std::isfinite(s->b.x) || !std::isfinite(s->b.y)) {
                rep.violations.push_back(where.str() + "non-finite coordinate");
                continue;
            }
            if (dist(s->a, s->b) <= tol) rep.violations.push_back(where.str() + "zero-length segment");
        } else {
            const auto& a = std::get<Arc>(els[i]);
            if (!(a.radius > 0.0) || !std::isfinite(a.radius)) rep.violations.push_back(where.str() + "radius must be positive");
            if (!(a.sweep() > 0.0) || a.sweep() > kTwoPi + tol)
                rep.violations.push_back(where.str() + "arc sweep outside (0, 2pi]");
        }
        const auto& next = els[(i + 1) % els.size()];
        if (dist(element_end(els[i]), element_start(next)) > tol * scale_len)
            rep.violations.push_back(where.str() + "boundary not continuous with next element");
    }
    if (!rep.ok()) return rep;

    double total = 0.0;
    bool big_gap = false;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (const auto* a = std::get_if<Arc>(&els[i])) total += a->sweep();
        const double g = normal_gap(els[i], els[(i + 1) % els.size()]);
        if (g > kPi + 1e-7) big_gap = true;
        total += g;
    }
    if (big_gap || std::abs(total - kTwoPi) > 1e-6)
        rep.violations.push_back("normal monotonicity: outward normals must turn once counterclockwise");

    if (body.degenerate) {
        const bool two_segments = els.size() == 2 && std::get_if<Segment>(&els[0]) && std::get_if<Segment>(&els[1]);
        if (!two_segments) rep.violations.push_back("degenerate body must be two antiparallel segments");
    } else if (rep.ok() && area(body) <= tol * scale_len) {
        rep.violations.push_back("zero area without degenerate flag");
    }
    return rep;
}

SupportValue support(const ArcPolygon& body, UnitDir u) {
    const Point v = u.vec();
    SupportValue best{-std::numeric_limits<double>::infinity(), {}};
    auto offer = [&](Point p, double h) {
        if (h > best.h) best = {h, p};
    };
    for (const auto& e : body.elements) {
        if (const auto* s = std::get_if<Segment>(&e)) {
            offer(s->a, dot(s->a, v));
            offer(s->b, dot(s->b, v));
        } else {
            const auto& a = std::get<Arc>(e);
            if (wrap_angle(u.theta - a.normal_start) <= a.sweep() || a.sweep() >= kTwoPi) {
                const Point p = a.center + a.radius * v;
                offer(p, dot(a.center, v) + a.radius);
            } else {
                offer(a.start(), dot(a.start(), v));
                offer(a.end(), dot(a.end(), v));
            }
        }
    }
    if (body.elements.empty()) throw DomainError("support: empty body");
    return best;
}

double breadth(const ArcPolygon& body, double theta) {
    const UnitDir u(theta);
    return support(body, u).h + support(body, u.opposite()).h;
}

std::vector<NormalPiece> normal_pieces(const ArcPolygon& body) {
    const auto& els = body.elements;
    if (els.empty()) throw DomainError("normal_pieces: empty body");
    std::vector<NormalPiece> raw;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (const auto* a = std::get_if<Arc>(&els[i])) {
            raw.push_back({a->normal_start, a->normal_start + a->sweep(), a->center, a->radius});
        }
        const double g = normal_gap(els[i], els[(i + 1) % els.size()]);
        if (g > 0.0) {
            const double t0 = end_normal(els[i]);
            raw.push_back({t0, t0 + g, element_end(els[i]), 0.0});
        }
    }
    std::vector<NormalPiece> pieces;
    for (const auto& p : raw) {
        const double len = p.t1 - p.t0;
        const double s = wrap_angle(p.t0);
        if (len <= kPieceEps) continue;
        if (s + len > kTwoPi) {
            pieces.push_back({s, kTwoPi, p.center, p.radius});
            pieces.push_back({0.0, s + len - kTwoPi, p.center, p.radius});
        } else {
            pieces.push_back({s, s + len, p.center, p.radius});
        }
    }
    std::sort(pieces.begin(), pieces.end(), [](const NormalPiece& a, const NormalPiece& b) {
        return a.t0 < b.t0 || (a.t0 == b.t0 && a.t1 < b.t1);
    });
    if (pieces.empty()) throw DomainError("normal_pieces: no normal coverage");
    pieces.front().t0 = 0.0;
    for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
        const double m = 0.5 * (pieces[k].t1 + pieces[k + 1].t0);
        pieces[k].t1 = m;
        pieces[k + 1].t0 = m;
    }
    pieces.back().t1 = kTwoPi;
    std::vector<NormalPiece> out;
    for (const auto& p : pieces) {
        if (p.t1 - p.t0 > 0.0) out.push_back(p);
    }
    return out;
}

ArcPolygon from_pieces(const std::vector<NormalPiece>& input) {
    std::vector<NormalPiece> ps;
    for (auto p : input) {
        if (p.t1 - p.t0 < kPieceEps) continue;
        if (p.radius < 1e-14) p.radius = 0.0;
        if (!ps.empty() && same_support(ps.back(), p)) {
            ps.back().t1 = p.t1;
        } else {
            ps.push_back(p);
        }
    }
    if (ps.empty()) throw DomainError("body has no boundary");
    if (ps.size() > 1 && same_support(ps.front(), ps.back())) {
        ps.back().t1 = ps.front().t1 + kTwoPi;
        ps.erase(ps.begin());
    }
    if (ps.size() == 1 && ps[0].radius == 0.0) throw DomainError("body collapses to a point");

    ArcPolygon out;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        const auto& cur = ps[k];
        const auto& prev = ps[(k + ps.size() - 1) % ps.size()];
        const Point u = polar(cur.t0);
        const Point prev_end = prev.center + prev.radius * u;
        const Point start = cur.center + cur.radius * u;
        if (dist(prev_end, start) > kPointEps) out.elements.emplace_back(Segment{prev_end, start});
        if (cur.radius > 0.0) {
            const double t0 = (ps.size() == 1) ? 0.0 : wrap_angle(cur.t0);
            const double sweep = (ps.size() == 1) ? kTwoPi : cur.t1 - cur.t0;
            out.elements.emplace_back(Arc{cur.center, cur.radius, t0, t0 + sweep});
        }
    }
    if (out.elements.size() == 2 && std::get_if<Segment>(&out.elements[0]) &&
        std::get_if<Segment>(&out.elements[1])) {
        out.degenerate = true;
    }
    if (out.elements.empty()) throw DomainError("body collapses to a point");
    return out;
}

ArcPolygon minkowski_sum(const ArcPolygon& a, const ArcPolygon& b) {
    require_nondegenerate(a, "minkowski_sum");
    require_nondegenerate(b, "minkowski_sum");
    return from_pieces(sum_pieces(normal_pieces(a), normal_pieces(b), 1.0, 1.0));
}

ArcPolygon minkowski_combination(const ArcPolygon& a, const ArcPolygon& b, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("minkowski_combination: lambda outside [0, 1]");
    if (lambda == 0.0) return a;
    if (lambda == 1.0) return b;
    return from_pieces(sum_pieces(normal_pieces(a), normal_pieces(b), 1.0 - lambda, lambda));
}

ArcPolygon scale(const ArcPolygon& body, double lambda, Point center) {
    require_nondegenerate(body, "scale");
    if (!(lambda > 0.0)) throw DomainError("scale: factor must be positive");
    ArcPolygon out = body;
    for (auto& e : out.elements) {
        if (auto* s = std::get_if<Segment>(&e)) {
            s->a = center + lambda * (s->a - center);
            s->b = center + lambda * (s->b - center);
        } else {
            auto& a = std::get<Arc>(e);
            a.center = center + lambda * (a.center - center);
            a.radius *= lambda;
        }
    }
    return out;
}

ArcPolygon translate(const ArcPolygon& body, Point shift) {
    ArcPolygon out = body;
    for (auto& e : out.elements) {
        if (auto* s = std::get_if<Segment>(&e)) {
            s->a = s->a + shift;
            s->b = s->b + shift;
        } else {
            std::get<Arc>(e).center = std::get<Arc>(e).center + shift;
        }
    }
    return out;
}

ArcPolygon rotate(const ArcPolygon& body, double phi, Point center) {
    ArcPolygon out = body;
    for (auto& e : out.elements) {
        if (auto* s = std::get_if<Segment>(&e)) {
            s->a = center + rotate(s->a - center, phi);
            s->b = center + rotate(s->b - center, phi);
        } else {
            auto& a = std::get<Arc>(e);
            const double sw = a.sweep();
            a.center = center + rotate(a.center - center, phi);
            a.normal_start = wrap_angle(a.normal_start + phi);
            a.normal_end = a.normal_start + sw;
        }
    }
    return out;
}

ArcPolygon hull_points_disks(const std::vector<Point>& points, const std::vector<Disk>& disks) {
    std::vector<Sinusoid> fs;
    std::vector<Point> pts = points.size() > 3 ? monotone_chain(points) : points;
    for (const auto& d : disks) {
        if (!(d.radius >= 0.0)) throw DomainError("hull_points_disks: negative radius");
    }
    std::vector<Disk> all;
    for (const auto& p : pts) all.push_back({p, 0.0});
    for (const auto& d : disks) all.push_back(d);
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool covered = false;
        for (std::size_t j = 0; j < all.size() && !covered; ++j) {
            if (i == j) continue;
            const double slack = all[j].radius - all[i].radius - dist(all[i].center, all[j].center);
            covered = slack > 1e-14 || (slack >= -1e-14 && j < i);
        }
        if (!covered) fs.push_back({all[i].center, all[i].radius});
    }
    if (fs.empty()) throw DomainError("hull_points_disks: no input");
    std::vector<NormalPiece> out;
    envelope_on(fs, 0.0, kTwoPi, out);
    return from_pieces(out);
}

ArcPolygon hull_bodies(const std::vector<ArcPolygon>& bodies) {
    if (bodies.empty()) throw DomainError("hull_bodies: no input");
    std::vector<std::vector<NormalPiece>> all;
    std::vector<double> breaks{kTwoPi};
    for (const auto& b : bodies) {
        all.push_back(normal_pieces(b));
        for (const auto& p : all.back()) breaks.push_back(p.t0);
    }
    std::sort(breaks.begin(), breaks.end());
    std::vector<NormalPiece> out;
    std::vector<std::size_t> idx(all.size(), 0);
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double s = breaks[k], e = breaks[k + 1];
        if (e - s <= 0.0) continue;
        const double mid = 0.5 * (s + e);
        std::vector<Sinusoid> fs;
        for (std::size_t b = 0; b < all.size(); ++b) {
            while (idx[b] + 1 < all[b].size() && all[b][idx[b]].t1 < mid) ++idx[b];
            fs.push_back({all[b][idx[b]].center, all[b][idx[b]].radius});
        }
        envelope_on(fs, s, e, out);
    }
    return from_pieces(out);
}

ArcPolygon make_disk(Point center, double radius) {
    if (!(radius > 0.0)) throw DomainError("make_disk: radius must be positive");
    ArcPolygon out;
    out.elements.emplace_back(Arc{center, radius, 0.0, kTwoPi});
    return out;
}

ArcPolygon make_polygon(const std::vector<Point>& v) {
    if (v.size() < 3) throw DomainError("make_polygon: need at least three vertices");
    ArcPolygon out;
    for (std::size_t i = 0; i < v.size(); ++i) out.elements.emplace_back(Segment{v[i], v[(i + 1) % v.size()]});
    return out;
}

ArcPolygon make_segment_body(Point a, Point b) {
    if (dist(a, b) <= kTauGeom) throw DomainError("make_segment_body: coincident endpoints");
    ArcPolygon out;
    out.elements.emplace_back(Segment{a, b});
    out.elements.emplace_back(Segment{b, a});
    out.degenerate = true;
    return out;
}

ArcPolygon intersect_disks(const std::vector<Disk>& disks) {
    if (disks.empty()) throw DomainError("intersect_disks: no input");
    ArcPolygon out = make_disk(disks[0].center, disks[0].radius);
    for (std::size_t i = 1; i < disks.size(); ++i) out = clip_disk(out, disks[i].center, disks[i].radius);
    return out;
}

double area(const ArcPolygon& body) {
    double twice = 0.0;
    for (const auto& e : body.elements) {
        if (const auto* s = std::get_if<Segment>(&e)) {
            twice += cross(s->a, s->b);
        } else {
            const auto& a = std::get<Arc>(e);
            const double t0 = a.normal_start, t1 = a.normal_end;
            twice += a.radius * (a.center.x * (std::sin(t1) - std::sin(t0)) - a.center.y * (std::cos(t1) - std::cos(t0))) +
                     a.radius * a.radius * (t1 - t0);
        }
    }
    return 0.5 * twice;
}

double perimeter(const ArcPolygon& body) {
    double len = 0.0;
    for (const auto& e : body.elements) {
        if (const auto* s = std::get_if<Segment>(&e)) {
            len += dist(s->a, s->b);
        } else {
            len += std::get<Arc>(e).radius * std::get<Arc>(e).sweep();
        }
    }
    return body.degenerate ? 0.5 * len : len;
}

std::vector<Point> corners(const ArcPolygon& body) {
    std::vector<Point> out;
    const auto& els = body.elements;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (normal_gap(els[i], els[(i + 1) % els.size()]) > 1e-12) out.push_back(element_end(els[i]));
    }
    return out;
}

}  // namespace radii_atlas
