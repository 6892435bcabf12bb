#include "radii_atlas/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace radii_atlas {

namespace {

void arc_to(std::ostringstream& out, const Arc& a) {
    const double sweep = a.sweep();
    if (sweep > kPi + 1e-12) {
        Arc half = a;
        half.normal_end = a.normal_start + 0.5 * sweep;
        arc_to(out, half);
        half.normal_start = half.normal_end;
        half.normal_end = a.normal_end;
        arc_to(out, half);
        return;
    }
    const Point e = a.end();
    out << " A " << a.radius << ' ' << a.radius << " 0 0 1 " << e.x << ' ' << e.y;
}

// Chord of length w across the body between the two supporting lines with normal u.
std::array<Point, 2> width_chord(const ArcPolygon& body, UnitDir u, double w) {
    const Point n = u.vec(), tg{-n.y, n.x};
    auto face = [&](double theta) {
        const double a = dot(support(body, UnitDir(theta - 1e-9)).point, tg);
        const double b = dot(support(body, UnitDir(theta + 1e-9)).point, tg);
        return std::pair{std::min(a, b), std::max(a, b)};
    };
    const auto [a0, a1] = face(u.theta);
    const auto [b0, b1] = face(u.theta + kPi);
    const double lo = std::max(a0, b0), hi = std::min(a1, b1);
    const double s = lo <= hi ? 0.5 * (lo + hi) : 0.5 * (std::max(a0, b0) + std::min(a1, b1));
    const double h = support(body, u).h;
    const Point p = h * n + s * tg;
    return {p, p - w * n};
}

}  // namespace

std::string render_svg(const ArcPolygon& body, const RadiiTuple& t, const RenderStyle& style) {
    std::ostringstream out;
    out.precision(12);
    const double pad = 0.08 * std::max(t.R, 1e-9);
    const double half = t.R + pad;
    const Point c = t.circumcenter;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.pixels << "\" height=\"" << style.pixels << "\" viewBox=\""
        << c.x - half << ' ' << -c.y - half << ' ' << 2 * half << ' ' << 2 * half << "\">\n";
    out << "<style>\n"
        << "  path, circle, line { stroke-width: " << 0.006 * half << "; fill: none; }\n"
        << "  .body { stroke: " << style.body << "; fill: " << style.fill << "; }\n"
        << "  .inball { stroke: " << style.inball << "; }\n"
        << "  .circumball { stroke: " << style.circumball << "; }\n"
        << "  .width { stroke: " << style.width << "; }\n"
        << "  .diameter { stroke: " << style.diameter << "; stroke-dasharray: " << 0.03 * half << ' ' << 0.02 * half << "; }\n"
        << "</style>\n";
    out << "<g transform=\"scale(1,-1)\">\n";
    if (!body.elements.empty()) {
        const Point s = element_start(body.elements.front());
        out << "<path class=\"body\" d=\"M " << s.x << ' ' << s.y;
        for (const auto& e : body.elements) {
            if (const auto* seg = std::get_if<Segment>(&e)) out << " L " << seg->b.x << ' ' << seg->b.y;
            else arc_to(out, std::get<Arc>(e));
        }
        out << " Z\"/>\n";
    }
    out << "<circle class=\"circumball\" cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\"" << t.R << "\"/>\n";
    if (t.r > 0.0) {
        out << "<circle class=\"inball\" cx=\"" << t.incenter.x << "\" cy=\"" << t.incenter.y << "\" r=\"" << t.r << "\"/>\n";
    }
    const auto [p, q] = width_chord(body, t.width_dir, t.w);
    out << "<line class=\"width\" x1=\"" << p.x << "\" y1=\"" << p.y << "\" x2=\"" << q.x << "\" y2=\"" << q.y << "\"/>\n";
    out << "<line class=\"diameter\" x1=\"" << t.diam_pair[0].x << "\" y1=\"" << t.diam_pair[0].y << "\" x2=\"" << t.diam_pair[1].x
        << "\" y2=\"" << t.diam_pair[1].y << "\"/>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace radii_atlas
