#include "radii_atlas/radii.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace radii_atlas {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const NormalPiece& piece_at(const std::vector<NormalPiece>& ps, double t) {
    t = wrap_angle(t);
    auto it = std::upper_bound(ps.begin(), ps.end(), t, [](double v, const NormalPiece& p) { return v < p.t0; });
    if (it == ps.begin()) return ps.front();
    return *(it - 1);
}

struct AntipodalPiece {
    double s = 0.0;
    double e = 0.0;
    const NormalPiece* a = nullptr;
    const NormalPiece* b = nullptr;

    Point d() const { return a->center - b->center; }
    double breadth(double t) const { return dot(d(), polar(t)) + a->radius + b->radius; }
    std::vector<double> candidates() const {
        std::vector<double> ts{s, e};
        const Point dv = d();
        if (norm(dv) > 0.0) {
            const double phi = angle_of(dv);
            for (double t : {phi, phi + kPi, phi - kPi, phi + kTwoPi}) {
                if (t > s && t < e) ts.push_back(t);
            }
        }
        return ts;
    }
};

// Pairs of pieces active at t and t + pi, for t in [0, pi].
std::vector<AntipodalPiece> antipodal_pieces(const std::vector<NormalPiece>& ps) {
    std::vector<double> breaks{0.0, kPi};
    for (const auto& p : ps) breaks.push_back(p.t0 < kPi ? p.t0 : p.t0 - kPi);
    std::sort(breaks.begin(), breaks.end());
    std::vector<AntipodalPiece> out;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double s = breaks[k], e = breaks[k + 1];
        if (e - s <= 0.0) continue;
        const double mid = 0.5 * (s + e);
        out.push_back({s, e, &piece_at(ps, mid), &piece_at(ps, mid + kPi)});
    }
    return out;
}

struct Ball {
    Point c;
    double r = -1.0;
    std::vector<Point> supp;

    bool contains(Point p, double eps) const { return r >= 0.0 && dist(p, c) <= r + eps; }
};

Ball ball2(Point a, Point b) { return {0.5 * (a + b), 0.5 * dist(a, b), {a, b}}; }

Ball ball3(Point a, Point b, Point c) {
    const Point ab = b - a, ac = c - a;
    const double den = 2.0 * cross(ab, ac);
    if (std::abs(den) < 1e-300) {
        Ball best = ball2(a, b);
        for (const Ball& cand : {ball2(a, c), ball2(b, c)}) {
            if (cand.r > best.r) best = cand;
        }
        return best;
    }
    const double ab2 = dot(ab, ab), ac2 = dot(ac, ac);
    const Point o{(ac.y * ab2 - ab.y * ac2) / den, (ab.x * ac2 - ac.x * ab2) / den};
    return {a + o, norm(o), {a, b, c}};
}

// Move-to-front minimal enclosing ball of a point set.
Ball mtf_ball(std::vector<Point> pts) {
    double scale = 1.0;
    for (const auto& p : pts) scale = std::max(scale, norm(p));
    const double eps = 1e-14 * scale;
    Ball b;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (b.contains(pts[i], eps)) continue;
        b = {pts[i], 0.0, {pts[i]}};
        for (std::size_t j = 0; j < i; ++j) {
            if (b.contains(pts[j], eps)) continue;
            b = ball2(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (b.contains(pts[k], eps)) continue;
                b = ball3(pts[i], pts[j], pts[k]);
            }
        }
        std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(i), pts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
    if (b.supp.size() == 3) {
        for (int drop = 0; drop < 3; ++drop) {
            const Point p = b.supp[(drop + 1) % 3], q = b.supp[(drop + 2) % 3];
            Ball cand = ball2(p, q);
            if (cand.contains(b.supp[drop], 1e-12 * scale) && cand.r >= b.r - 1e-12 * scale) return cand;
        }
    }
    return b;
}

std::vector<Point> piece_samples(const std::vector<NormalPiece>& ps) {
    std::vector<Point> out;
    for (const auto& p : ps) {
        const int n = p.radius > 0.0 ? 4 : 0;
        for (int k = 0; k <= n; ++k) out.push_back(p.center + p.radius * polar(p.t0 + (p.t1 - p.t0) * k / std::max(n, 1)));
    }
    return out;
}

Point farthest_point(const std::vector<NormalPiece>& ps, Point x, double& best) {
    best = -1.0;
    Point arg;
    auto offer = [&](Point p) {
        const double d = dist(p, x);
        if (d > best) {
            best = d;
            arg = p;
        }
    };
    for (const auto& p : ps) {
        if (p.radius == 0.0) {
            offer(p.center);
            continue;
        }
        offer(p.center + p.radius * polar(p.t0));
        offer(p.center + p.radius * polar(p.t1));
        const Point v = p.center - x;
        if (norm(v) > 0.0) {
            const double rel = wrap_angle(angle_of(v) - p.t0);
            if (rel <= p.t1 - p.t0) offer(p.center + p.radius * (v * (1.0 / norm(v))));
        }
    }
    return arg;
}

// min over u in the piece of (c - x).u + radius, and the minimizing angle.
double piece_inner(const NormalPiece& p, Point x, double* arg = nullptr) {
    const Point v = p.center - x;
    double best = dot(v, polar(p.t0));
    double t_best = p.t0;
    const double v1 = dot(v, polar(p.t1));
    if (v1 < best) {
        best = v1;
        t_best = p.t1;
    }
    if (norm(v) > 0.0) {
        const double rel = wrap_angle(angle_of(v) + kPi - p.t0);
        if (rel < p.t1 - p.t0) {
            best = -norm(v);
            t_best = p.t0 + rel;
        }
    }
    if (arg) *arg = t_best;
    return best + p.radius;
}

double inner_distance_pieces(const std::vector<NormalPiece>& ps, Point x) {
    double s = kInf;
    for (const auto& p : ps) s = std::min(s, piece_inner(p, x));
    return s;
}

template <class F>
double golden_max(F&& f, double a, double b, double* best_value) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    const double stop = 1e-15 * (1.0 + std::abs(a) + std::abs(b));
    for (int it = 0; it < 200 && b - a > stop; ++it) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        }
    }
    if (fc >= fd) {
        if (best_value) *best_value = fc;
        return c;
    }
    if (best_value) *best_value = fd;
    return d;
}

double segment_distance(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + t * ab);
}

std::vector<Point> small_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    if (pts.size() < 3) return pts;
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 1e-15) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 1e-15) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

InCertificate in_certificate(const std::vector<NormalPiece>& ps, Point x, double r) {
    constexpr double kActive = 1e-7;
    constexpr double kFlat = 1e-10;
    std::vector<double> cand;
    auto add_range = [&](double lo, double hi) {
        cand.push_back(lo);
        cand.push_back(hi);
        cand.push_back(0.5 * (lo + hi));
        if (hi - lo > 1.0) {
            cand.push_back(lo + 0.25 * (hi - lo));
            cand.push_back(lo + 0.75 * (hi - lo));
        }
    };
    for (const auto& p : ps) {
        double t_min = 0.0;
        if (piece_inner(p, x, &t_min) <= r + kActive) cand.push_back(t_min);
        // Directions that stay nearly active form an arc around the minimiser.
        const Point v = p.center - x;
        const double nv = norm(v);
        const double k = nv > 1e-15 ? (r + kFlat - p.radius) / nv : (p.radius <= r + kFlat ? 1.0 : -2.0);
        if (k < -1.0) continue;
        if (k >= 1.0) {
            add_range(p.t0, p.t1);
            continue;
        }
        const double centre = p.t0 + wrap_angle(angle_of(v) + kPi - p.t0);
        const double half = kPi - std::acos(k);
        for (int m = -1; m <= 0; ++m) {
            const double lo = std::max(p.t0, centre - half + m * kTwoPi);
            const double hi = std::min(p.t1, centre + half + m * kTwoPi);
            if (hi >= lo) add_range(lo, hi);
        }
    }
    for (auto& t : cand) t = wrap_angle(t);
    std::sort(cand.begin(), cand.end());
    std::vector<double> uniq;
    for (double t : cand) {
        if (uniq.empty() || t - uniq.back() > 1e-9) uniq.push_back(t);
    }
    if (uniq.size() > 1 && uniq.front() + kTwoPi - uniq.back() <= 1e-9) uniq.pop_back();

    InCertificate best;
    best.hull_margin = -kInf;
    auto consider = [&](const std::vector<double>& ts) {
        std::vector<Point> us;
        for (double t : ts) us.push_back(polar(t));
        const double m = hull_margin({0.0, 0.0}, us);
        if (m > best.hull_margin + 1e-12) {
            best.hull_margin = m;
            best.normals.clear();
            for (double t : ts) best.normals.emplace_back(t);
        }
    };
    const std::size_t n = uniq.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) consider({uniq[i], uniq[j]});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) consider({uniq[i], uniq[j], uniq[k]});
        }
    }
    for (const auto& u : best.normals) best.touch_points.push_back(x + r * u.vec());
    if (best.normals.empty()) best.hull_margin = -kInf;
    return best;
}

}  // namespace

double hull_margin(Point p, const std::vector<Point>& pts) {
    if (pts.empty()) return -kInf;
    const auto h = small_hull(pts);
    if (h.size() == 1) return -dist(p, h[0]);
    if (h.size() == 2) return -segment_distance(p, h[0], h[1]);
    bool inside = true;
    double inner = kInf, outer = kInf;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Point a = h[i], b = h[(i + 1) % h.size()];
        const double side = cross(b - a, p - a) / dist(a, b);
        if (side < 0.0) inside = false;
        inner = std::min(inner, side);
        outer = std::min(outer, segment_distance(p, a, b));
    }
    return inside ? inner : -outer;
}

WidthResult width(const ArcPolygon& body) {
    const auto ps = normal_pieces(body);
    WidthResult best{kInf, UnitDir()};
    for (const auto& ap : antipodal_pieces(ps)) {
        for (double t : ap.candidates()) {
            const double b = ap.breadth(t);
            if (b < best.w) best = {b, UnitDir(t)};
        }
    }
    best.w = std::max(best.w, 0.0);
    return best;
}

DiameterResult diameter(const ArcPolygon& body) {
    const auto ps = normal_pieces(body);
    DiameterResult best;
    best.D = -kInf;
    for (const auto& ap : antipodal_pieces(ps)) {
        for (double t : ap.candidates()) {
            const double b = ap.breadth(t);
            if (b > best.D) {
                const Point u = polar(t);
                best.D = b;
                best.dir = UnitDir(t);
                best.pair = {ap.a->center + ap.a->radius * u, ap.b->center - ap.b->radius * u};
            }
        }
    }
    return best;
}

double inner_distance(const ArcPolygon& body, Point x) { return inner_distance_pieces(normal_pieces(body), x); }

double farthest_distance(const ArcPolygon& body, Point x) {
    double best = 0.0;
    farthest_point(normal_pieces(body), x, best);
    return best;
}

CircumResult circumball(const ArcPolygon& body) {
    const auto ps = normal_pieces(body);
    Ball b = mtf_ball(piece_samples(ps));
    double scale = 1.0;
    for (const auto& p : ps) scale = std::max(scale, norm(p.center) + p.radius);
    double far = 0.0;
    for (int it = 0; it < 500; ++it) {
        const Point y = farthest_point(ps, b.c, far);
        if (far - b.r <= 1e-13 * scale) break;
        std::vector<Point> pts = b.supp;
        pts.insert(pts.begin(), y);
        b = mtf_ball(pts);
    }
    farthest_point(ps, b.c, far);
    if (b.supp.size() == 3 && hull_margin(b.c, b.supp) < 0.0) {
        double best = std::numeric_limits<double>::infinity();
        Ball pick = b;
        for (std::size_t i = 0; i < 3; ++i) {
            const Point p = b.supp[i], q = b.supp[(i + 1) % 3];
            Ball pair{0.5 * (p + q), 0.5 * dist(p, q), {p, q}};
            double f = 0.0;
            farthest_point(ps, pair.c, f);
            if (f < best) {
                best = f;
                pick = pair;
            }
        }
        if (best <= std::max(far, b.r) + 1e-9 * scale) {
            b = pick;
            far = best;
        }
    }
    CircumResult out;
    out.center = b.c;
    out.R = std::max(far, b.r);
    out.cert.touching = b.supp;
    out.cert.hull_margin = hull_margin(b.c, b.supp);
    return out;
}

InResult inball(const ArcPolygon& body) {
    InResult out;
    if (body.degenerate) {
        const Point a = element_start(body.elements.at(0)), b = element_end(body.elements.at(0));
        out.center = 0.5 * (a + b);
        out.r = 0.0;
        out.cert.hull_margin = 0.0;
        return out;
    }
    const auto ps = normal_pieces(body);
    const double xmax = support(body, UnitDir(0.0)).h, xmin = -support(body, UnitDir(kPi)).h;
    const double ymax = support(body, UnitDir(0.5 * kPi)).h, ymin = -support(body, UnitDir(1.5 * kPi)).h;
    auto column = [&](double x1, double* val) {
        return golden_max([&](double x2) { return inner_distance_pieces(ps, {x1, x2}); }, ymin, ymax, val);
    };
    double rbest = 0.0;
    const double x1 = golden_max(
        [&](double x) {
            double v = 0.0;
            column(x, &v);
            return v;
        },
        xmin, xmax, &rbest);
    const double x2 = column(x1, &rbest);
    out.center = {x1, x2};
    out.r = inner_distance_pieces(ps, out.center);
    out.cert = in_certificate(ps, out.center, out.r);
    return out;
}

RadiiTuple compute_radii(const ArcPolygon& body) {
    RadiiTuple t;
    const auto wr = width(body);
    const auto dr = diameter(body);
    const auto cb = circumball(body);
    const auto ib = inball(body);
    t.w = wr.w;
    t.width_dir = wr.dir;
    t.D = dr.D;
    t.diam_pair = dr.pair;
    t.R = cb.R;
    t.circumcenter = cb.center;
    t.circum_cert = cb.cert;
    t.r = ib.r;
    t.incenter = ib.center;
    t.in_cert = ib.cert;
    return t;
}

CertificateReport verify_certificates(const ArcPolygon& body, const RadiiTuple& t, double tol) {
    CertificateReport rep;
    auto fail = [&](const std::string& msg) {
        rep.valid = false;
        rep.failures.push_back(msg);
    };
    const auto ps = normal_pieces(body);

    double far = 0.0;
    farthest_point(ps, t.circumcenter, far);
    if (far > t.R + tol) fail("circumball does not contain the body");
    const auto& tp = t.circum_cert.touching;
    if (tp.size() < 2 || tp.size() > 3) fail("circumball certificate needs 2 or 3 touching points");
    for (const auto& p : tp) {
        if (std::abs(dist(p, t.circumcenter) - t.R) > tol) fail("touching point off the circumsphere");
        const Point u = p - t.circumcenter;
        if (norm(u) > 0.0) {
            const UnitDir dir(angle_of(u));
            if (std::abs(support(body, dir).h - dot(p, dir.vec())) > tol) fail("touching point not on the body boundary");
        }
    }
    if (hull_margin(t.circumcenter, tp) < -tol) fail("circumcenter outside the hull of touching points");

    if (!body.degenerate) {
        const double s = inner_distance_pieces(ps, t.incenter);
        if (s < t.r - tol) fail("inball not contained in the body");
        if (std::abs(s - t.r) > tol) fail("inball radius not attained at incenter");
        const auto& ns = t.in_cert.normals;
        if (ns.size() < 2 || ns.size() > 3) fail("inball certificate needs 2 or 3 normals");
        std::vector<Point> us;
        for (std::size_t i = 0; i < ns.size(); ++i) {
            us.push_back(ns[i].vec());
            const double gap = support(body, ns[i]).h - dot(t.incenter, ns[i].vec()) - t.r;
            if (std::abs(gap) > tol) fail("inball normal is not a touching direction");
            if (i < t.in_cert.touch_points.size() &&
                dist(t.in_cert.touch_points[i], t.incenter + t.r * ns[i].vec()) > tol)
                fail("inball touch point inconsistent with its normal");
        }
        if (hull_margin({0.0, 0.0}, us) < -tol) fail("origin outside the hull of inball normals");
    }

    if (std::abs(breadth(body, t.width_dir.theta) - t.w) > tol) fail("width direction does not realise the width");
    if (std::abs(dist(t.diam_pair[0], t.diam_pair[1]) - t.D) > tol) fail("diameter pair does not realise the diameter");
    return rep;
}

}  // namespace radii_atlas
