#include "radii_atlas/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <variant>

namespace radii_atlas::oracle {

namespace {

constexpr double kPiO = 3.14159265358979323846;

struct Circle {
    Point c;
    double r2 = -1.0;
    bool contains(Point p) const {
        const double dx = p.x - c.x, dy = p.y - c.y;
        return dx * dx + dy * dy <= r2 * (1 + 1e-14) + 1e-28;
    }
};

Circle circle2(Point a, Point b) {
    const Point c{(a.x + b.x) / 2, (a.y + b.y) / 2};
    const double dx = a.x - c.x, dy = a.y - c.y;
    return {c, dx * dx + dy * dy};
}

Circle circle3(Point a, Point b, Point c) {
    const double bx = b.x - a.x, by = b.y - a.y, cx = c.x - a.x, cy = c.y - a.y;
    const double d = 2 * (bx * cy - by * cx);
    if (std::abs(d) < 1e-300) {
        Circle best = circle2(a, b);
        for (const Circle& k : {circle2(a, c), circle2(b, c)}) {
            if (k.r2 > best.r2) best = k;
        }
        return best;
    }
    const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    const double ux = (cy * b2 - by * c2) / d, uy = (bx * c2 - cx * b2) / d;
    return {{a.x + ux, a.y + uy}, ux * ux + uy * uy};
}

Circle min_enclosing(std::vector<Point> pts, unsigned seed) {
    std::mt19937 rng(seed);
    std::shuffle(pts.begin(), pts.end(), rng);
    Circle c{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (c.contains(pts[i])) continue;
        c = {pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (c.contains(pts[j])) continue;
            c = circle2(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (!c.contains(pts[k])) c = circle3(pts[i], pts[j], pts[k]);
            }
        }
    }
    return c;
}

struct Edge {
    Point a;
    Point n;  // unit outward normal
};

std::vector<Edge> cloud_edges(const std::vector<Point>& pts) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point a = pts[i], b = pts[(i + 1) % pts.size()];
        const double dx = b.x - a.x, dy = b.y - a.y, len = std::hypot(dx, dy);
        if (len < 1e-13) continue;
        const Point n{dy / len, -dx / len};
        if (!out.empty() && std::abs(out.back().n.x - n.x) + std::abs(out.back().n.y - n.y) < 1e-12) continue;
        out.push_back({a, n});
    }
    while (out.size() > 1 && std::abs(out.back().n.x - out.front().n.x) + std::abs(out.back().n.y - out.front().n.y) < 1e-12) {
        out.front().a = out.back().a;
        out.pop_back();
    }
    return out;
}

double depth(const std::vector<Edge>& edges, Point x) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& e : edges) m = std::min(m, (e.a.x - x.x) * e.n.x + (e.a.y - x.y) * e.n.y);
    return m;
}

}  // namespace

PointCloudBody sample_boundary_points(const ArcPolygon& body, int n) {
    if (n < 8) throw DomainError("sample_boundary_points: need at least 8 points");
    if (body.elements.empty()) throw DomainError("sample_boundary_points: empty body");
    const std::size_t fixed = body.elements.size();
    if (static_cast<std::size_t>(n) < fixed) throw DomainError("sample_boundary_points: fewer points than boundary elements");
    double total_sweep = 0.0, total_len = 0.0;
    for (const auto& e : body.elements) {
        if (const auto* a = std::get_if<Arc>(&e)) total_sweep += a->normal_end - a->normal_start;
        if (const auto* s = std::get_if<Segment>(&e)) total_len += std::hypot(s->b.x - s->a.x, s->b.y - s->a.y);
    }
    const int spare = n - static_cast<int>(fixed);
    PointCloudBody cloud;
    cloud.source_resolution = n;
    std::vector<int> extra(fixed, 0);
    int assigned = 0;
    for (std::size_t i = 0; i < fixed; ++i) {
        const auto& e = body.elements[i];
        double share = 0.0;
        if (total_sweep > 0.0) {
            if (const auto* a = std::get_if<Arc>(&e)) share = (a->normal_end - a->normal_start) / total_sweep;
        } else if (const auto* s = std::get_if<Segment>(&e)) {
            share = std::hypot(s->b.x - s->a.x, s->b.y - s->a.y) / total_len;
        }
        extra[i] = static_cast<int>(std::floor(share * spare));
        assigned += extra[i];
    }
    for (std::size_t i = 0; assigned < spare; i = (i + 1) % fixed) {
        const bool eligible = total_sweep > 0.0 ? std::holds_alternative<Arc>(body.elements[i]) : true;
        if (eligible) {
            ++extra[i];
            ++assigned;
        }
    }
    for (std::size_t i = 0; i < fixed; ++i) {
        const auto& e = body.elements[i];
        if (const auto* s = std::get_if<Segment>(&e)) {
            for (int k = 0; k <= extra[i]; ++k) {
                const double t = static_cast<double>(k) / (extra[i] + 1);
                cloud.points.push_back({s->a.x + t * (s->b.x - s->a.x), s->a.y + t * (s->b.y - s->a.y)});
            }
        } else {
            const auto& a = std::get<Arc>(e);
            const double step = (a.normal_end - a.normal_start) / (extra[i] + 1);
            for (int k = 0; k <= extra[i]; ++k) {
                const double t = a.normal_start + k * step;
                cloud.points.push_back({a.center.x + a.radius * std::cos(t), a.center.y + a.radius * std::sin(t)});
            }
            cloud.sagitta_bound = std::max(cloud.sagitta_bound, a.radius * (1 - std::cos(step / 2)));
        }
    }
    return cloud;
}

RadiiTuple brute_radii(const PointCloudBody& cloud, unsigned seed) {
    const auto& pts = cloud.points;
    if (pts.size() < 2) throw DomainError("brute_radii: degenerate cloud");
    RadiiTuple t;

    double best = -1.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double dx = pts[i].x - pts[j].x, dy = pts[i].y - pts[j].y, d2 = dx * dx + dy * dy;
            if (d2 > best) {
                best = d2;
                t.diam_pair = {pts[i], pts[j]};
            }
        }
    }
    t.D = std::sqrt(best);
    if (!(t.D > 0.0)) throw DomainError("brute_radii: degenerate cloud");

    const Circle mec = min_enclosing(pts, seed);
    t.circumcenter = mec.c;
    t.R = std::sqrt(mec.r2);

    const std::vector<Edge> edges = cloud_edges(pts);
    std::vector<double> dirs;
    const std::size_t m = 4 * pts.size();
    for (std::size_t k = 0; k < m; ++k) dirs.push_back(kPiO * k / m);
    for (const auto& e : edges) dirs.push_back(std::atan2(e.n.y, e.n.x));
    t.w = std::numeric_limits<double>::infinity();
    // Support index moves monotonically with the direction, so each sweep is linear.
    std::sort(dirs.begin(), dirs.end(), [](double a, double b) {
        auto w = [](double x) { return std::fmod(std::fmod(x, 2 * kPiO) + 2 * kPiO, 2 * kPiO); };
        return w(a) < w(b);
    });
    const std::size_t np = pts.size();
    auto proj = [&](std::size_t i, double c, double s) { return pts[i % np].x * c + pts[i % np].y * s; };
    std::size_t hi = 0, lo = 0;
    {
        const double c = std::cos(dirs[0]), s = std::sin(dirs[0]);
        for (std::size_t i = 0; i < np; ++i) {
            if (proj(i, c, s) > proj(hi, c, s)) hi = i;
            if (proj(i, c, s) < proj(lo, c, s)) lo = i;
        }
    }
    for (double th : dirs) {
        const double c = std::cos(th), s = std::sin(th);
        for (std::size_t k = 0; k < np && proj(hi + 1, c, s) >= proj(hi, c, s); ++k) hi = (hi + 1) % np;
        for (std::size_t k = 0; k < np && proj(lo + 1, c, s) <= proj(lo, c, s); ++k) lo = (lo + 1) % np;
        const double b = proj(hi, c, s) - proj(lo, c, s);
        if (b < t.w) {
            t.w = b;
            t.width_dir = UnitDir(th);
        }
    }

    if (edges.size() < 3 || t.w < 1e-12) {
        t.r = 0.0;
        t.w = std::max(0.0, t.w);
        t.incenter = {(t.diam_pair[0].x + t.diam_pair[1].x) / 2, (t.diam_pair[0].y + t.diam_pair[1].y) / 2};
        return t;
    }
    double x0 = pts[0].x, x1 = x0, y0 = pts[0].y, y1 = y0;
    for (auto p : pts) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    Point c{(x0 + x1) / 2, (y0 + y1) / 2};
    double val = depth(edges, c);
    const int grid = 64;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const Point q{x0 + (x1 - x0) * (i + 0.5) / grid, y0 + (y1 - y0) * (j + 0.5) / grid};
            const double v = depth(edges, q);
            if (v > val) {
                val = v;
                c = q;
            }
        }
    }
    double step = std::max(x1 - x0, y1 - y0) / grid;
    for (int it = 0; it < 100; ++it) {
        bool moved = false;
        for (Point d : {Point{step, 0}, Point{-step, 0}, Point{0, step}, Point{0, -step}}) {
            const Point q{c.x + d.x, c.y + d.y};
            const double v = depth(edges, q);
            if (v > val) {
                val = v;
                c = q;
                moved = true;
            }
        }
        if (!moved) step /= 2;
    }
    // Nested golden-section polish.
    auto golden = [](double lo, double hi, const auto& f, double& arg) {
        const double g = (std::sqrt(5.0) - 1) / 2;
        double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
        double fa = f(a), fb = f(b);
        for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
            if (fa < fb) {
                lo = a;
                a = b;
                fa = fb;
                b = lo + g * (hi - lo);
                fb = f(b);
            } else {
                hi = b;
                b = a;
                fb = fa;
                a = hi - g * (hi - lo);
                fa = f(a);
            }
        }
        arg = fa > fb ? a : b;
        return std::max(fa, fb);
    };
    double best_y = c.y;
    auto column = [&](double x) {
        double y = 0.0;
        return golden(y0, y1, [&](double yy) { return depth(edges, {x, yy}); }, y);
    };
    double best_x = c.x;
    const double polished = golden(x0, x1, column, best_x);
    golden(y0, y1, [&](double yy) { return depth(edges, {best_x, yy}); }, best_y);
    if (polished > val) {
        val = depth(edges, {best_x, best_y});
        c = {best_x, best_y};
    }
    t.r = val;
    t.incenter = c;
    return t;
}

}  // namespace radii_atlas::oracle
