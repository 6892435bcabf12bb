#include "radii_atlas/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "radii_atlas/radii.hpp"

namespace radii_atlas {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
constexpr double kParamTol = 1e-12;

struct FamilyInfo {
    FamilyId id;
    const char* name;
    std::vector<std::string> params;
};

const std::vector<FamilyInfo>& family_infos() {
    static const std::vector<FamilyInfo> infos = {
        {FamilyId::Ball, "ball", {}},
        {FamilyId::Segment, "segment", {}},
        {FamilyId::EqT, "eqt", {}},
        {FamilyId::ReT, "ret", {}},
        {FamilyId::RAT, "rat", {}},
        {FamilyId::SB, "sb", {}},
        {FamilyId::SRT, "srt", {}},
        {FamilyId::FRT, "frt", {}},
        {FamilyId::BT, "bt", {}},
        {FamilyId::HoodVertex, "hood_vertex", {}},
        {FamilyId::Iso, "iso", {"gamma"}},
        {FamilyId::RecT, "rect", {"r"}},
        {FamilyId::ReB, "reb", {"r"}},
        {FamilyId::Yamanouti, "yamanouti", {"r"}},
        {FamilyId::CSB, "csb", {"gamma"}},
        {FamilyId::RSB, "rsb", {"r"}},
        {FamilyId::SBoat, "sboat", {"r", "gamma"}},
        {FamilyId::BEq, "beq", {"r"}},
        {FamilyId::SliRT, "slirt", {"r"}},
        {FamilyId::CSRT, "csrt", {"gamma"}},
        {FamilyId::BTrap, "btrap", {"gamma"}},
        {FamilyId::Hood, "hood", {"gamma"}},
        {FamilyId::BPen, "bpen", {"r", "gamma"}},
        {FamilyId::BIso, "biso", {"r", "gamma"}},
        {FamilyId::Triangle, "triangle", {"r", "D"}},
        {FamilyId::Rounded, "rounded", {"lambda"}},
        {FamilyId::CompletionMix, "completion_mix", {"lambda"}},
        {FamilyId::NonConcentricReB, "nonconcentric_reb", {"r", "shift"}},
        {FamilyId::GeneralSliced, "general_sliced", {"r", "rotation"}},
    };
    return infos;
}

const FamilyInfo& info(FamilyId id) {
    for (const auto& i : family_infos()) {
        if (i.id == id) return i;
    }
    throw DomainError("unknown family id");
}

double param(const FamilySpec& s, std::size_t k) {
    if (k >= s.params.size()) throw DomainError(family_name(s.id) + ": missing parameter " + param_names(s.id).at(k));
    return s.params[k];
}

void require_range(const std::string& what, double v, double lo, double hi) {
    if (!std::isfinite(v) || v < lo - kParamTol || v > hi + kParamTol) {
        std::ostringstream os;
        os.precision(12);
        os << what << " = " << v << " outside [" << lo << ", " << hi << "]";
        throw DomainError(os.str());
    }
}

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

// Bisection for a sign change of f on [lo, hi].
double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
    double flo = f(lo);
    for (int i = 0; i < iters && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::array<Point, 3> iso_vertices(double gamma) {
    return {Point{0.0, 1.0}, polar(-kPi / 2 - gamma), polar(-kPi / 2 + gamma)};
}

std::vector<Point> eqt_vertices() {
    const auto v = iso_vertices(kPi / 3);
    return {v.begin(), v.end()};
}

ArcPolygon eqt() { return make_polygon(eqt_vertices()); }

ArcPolygon ret() {
    std::vector<Disk> ds;
    for (auto p : eqt_vertices()) ds.push_back({p, kSqrt3});
    return intersect_disks(ds);
}

// Clips only when the halfplane removes more than a sliver.
ArcPolygon clip_if_cuts(const ArcPolygon& body, Point n, double offset) {
    const UnitDir u(angle_of(n));
    const double nn = norm(n);
    if (offset / nn >= support(body, u).h - kTauGeom) return body;
    return clip_halfplane(body, u, offset / nn);
}

// Halfplane {x : n.x <= n.q} through q whose boundary is tangent to the circle (c, rho)
// and which contains c; the tangent is picked by score(direction).
std::pair<Point, double> tangent_halfplane(Point q, Point c, double rho, const std::function<double(Point)>& score) {
    const Point d = c - q;
    const double len = norm(d);
    if (len <= rho) throw DomainError("tangent line: point inside the circle");
    const double a = std::asin(rho / len), phi = angle_of(d);
    Point best_n;
    double best = -1e300;
    for (double s : {-1.0, 1.0}) {
        const Point dir = polar(phi + s * a);
        Point n{dir.y, -dir.x};
        if (dot(n, d) > 0.0) n = -n;
        const double sc = score(dir);
        if (sc > best) {
            best = sc;
            best_n = n;
        }
    }
    return {best_n, dot(best_n, q)};
}

struct Incircle {
    Point center;
    double radius;
};

Incircle incircle(Point a, Point b, Point c) {
    const double la = dist(b, c), lb = dist(a, c), lc = dist(a, b);
    const double p = la + lb + lc;
    return {(1.0 / p) * (la * a + lb * b + lc * c), std::abs(cross(b - a, c - a)) / p};
}

ArcPolygon iso_body(double gamma) {
    if (gamma <= 0.0) return make_segment_body({0.0, 1.0}, {0.0, -1.0});
    const auto v = iso_vertices(gamma);
    return make_polygon({v[0], v[1], v[2]});
}

ArcPolygon truncate_to_ball(const ArcPolygon& body) { return clip_disk(body, {0.0, 0.0}, 1.0); }

ArcPolygon scaled_about(const std::vector<Point>& pts, Point center, double s) {
    std::vector<Point> out;
    for (auto p : pts) out.push_back(center + s * (p - center));
    return make_polygon(out);
}

// Bent trapezoid frame: [p1, p2] horizontal at the bottom.
std::array<Point, 4> btrap_vertices(double gamma) {
    return {polar(kPi + gamma / 2), polar(-gamma / 2), polar(1.5 * gamma), polar(kPi - 1.5 * gamma)};
}

ArcPolygon btrap_body(double gamma) {
    if (gamma <= 0.0) return make_segment_body({-1.0, 0.0}, {1.0, 0.0});
    const auto p = btrap_vertices(gamma);
    const double D = closed::iso_diameter(gamma);
    ArcPolygon b = intersect_disks({{p[0], D}, {p[1], D}});
    b = clip_if_cuts(b, {0.0, 1.0}, p[2].y);
    b = clip_if_cuts(b, {0.0, -1.0}, -p[0].y);
    return b;
}

Point btrap_incenter(double gamma) {
    const auto p = btrap_vertices(gamma);
    return {0.0, p[0].y + closed::btrap_inradius(gamma)};
}

struct PentagonFrame {
    std::array<Point, 3> p;
    double D;
    Point c;
    Point n1;
    double o1;
    Point n2;
    double o2;
};

PentagonFrame pentagon_frame(double r, double gamma) {
    PentagonFrame f;
    f.p = iso_vertices(gamma);
    f.D = closed::iso_diameter(gamma);
    const double rho = f.D - r;
    const Point mid = 0.5 * (f.p[0] + f.p[1]);
    const double half = 0.5 * f.D;
    if (rho < half) throw DomainError("bent pentagon: inball center does not exist for these parameters");
    Point axis = f.p[1] - f.p[0];
    Point perp{-axis.y, axis.x};
    perp = (1.0 / norm(perp)) * perp;
    if (dot(perp, f.p[2] - mid) < 0.0) perp = -perp;
    f.c = mid + std::sqrt(rho * rho - half * half) * perp;
    const Point e12 = (1.0 / f.D) * (f.p[0] - f.p[1]);
    auto [n1, o1] = tangent_halfplane(f.p[1], f.c, r, [&](Point dir) { return std::abs(dot(dir, e12)); });
    f.n1 = n1;
    f.o1 = o1;
    f.n2 = -n1;
    f.o2 = dot(f.n2, f.p[2]);
    return f;
}

ArcPolygon bpen_body(double r, double gamma) {
    const auto f = pentagon_frame(r, gamma);
    ArcPolygon b = intersect_disks({{f.p[0], f.D}, {f.p[1], f.D}, {f.p[2], f.D}});
    b = clip_if_cuts(b, f.n1, f.o1);
    b = clip_if_cuts(b, f.n2, f.o2);
    return b;
}

// Ball moved linearly from the triangle's inball towards the bent trapezoid's inball.
Incircle lb2_ball(double rho, double gamma) {
    const auto p = iso_vertices(gamma);
    const Incircle in = incircle(p[0], p[1], p[2]);
    const double rb = closed::btrap_inradius(gamma);
    const Point mid = 0.5 * (p[0] + p[1]);
    Point perp{-(p[1] - p[0]).y, (p[1] - p[0]).x};
    perp = (1.0 / norm(perp)) * perp;
    if (dot(perp, p[2] - mid) < 0.0) perp = -perp;
    const Point cb = mid + rb * perp;
    const double s = rb > in.radius ? std::clamp((rho - in.radius) / (rb - in.radius), 0.0, 1.0) : 0.0;
    return {in.center + s * (cb - in.center), rho};
}

ArcPolygon lb2_hull(double rho, double gamma) {
    const auto p = iso_vertices(gamma);
    const Incircle b = lb2_ball(rho, gamma);
    return hull_points_disks({p[0], p[1], p[2]}, {{b.center, b.radius}});
}

ArcPolygon biso_body(double r, double gamma) {
    const auto p = iso_vertices(gamma);
    const double D = closed::iso_diameter(gamma);
    if (8.0 * r >= 3.0 * D) return hull_points_disks({p[0], p[1], p[2]}, {{pentagon_frame(r, gamma).c, r}});
    const double ri = incircle(p[0], p[1], p[2]).radius;
    if (r <= ri) return iso_body(gamma);
    double lo = ri, hi = r;
    for (int i = 0; i < 60 && hi - lo > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        (inball(lb2_hull(mid, gamma)).r < r ? lo : hi) = mid;
    }
    return lb2_hull(hi, gamma);
}

Point blossom_center(double r, double shift) { return {0.0, shift * closed::blossom_shift(r)}; }

ArcPolygon reb_about(double r, Point v) {
    ArcPolygon b = ret();
    for (double a : {-kPi / 2, kPi / 6, 5 * kPi / 6}) {
        const Point n = polar(a);
        b = clip_if_cuts(b, n, r + dot(n, v));
    }
    return b;
}

ArcPolygon filled_blossom(double r) {
    const Point c = blossom_center(r, 1.0);
    return clip_if_cuts(ret(), {0.0, -1.0}, -(c.y - r));
}

// Line through the lower-left vertex at distance rho from the top vertex.
std::pair<Point, double> sliced_halfplane(double rho) {
    const auto v = eqt_vertices();
    const double delta = kPi / 3 - std::asin(std::min(1.0, rho / kSqrt3));
    const Point n = polar(delta - kPi / 2);
    return {n, dot(n, v[1])};
}

ArcPolygon general_sliced_body(double r, double rotation) {
    const double rho0 = closed::filled_blossom_width(r), rho1 = closed::slirt_width(r);
    const double rho = (1.0 - rotation) * rho0 + rotation * rho1;
    auto [n, o] = sliced_halfplane(rho);
    if (rotation >= 1.0) return clip_if_cuts(ret(), n, o);
    return clip_if_cuts(filled_blossom(r), n, o);
}

double triangle_alpha(double r, double D) {
    const double g = std::asin(std::min(1.0, D / 2));
    auto rr = [&](double a) {
        const double b = kPi - g - a;
        return 4.0 * std::sin(a / 2) * std::sin(b / 2) * std::sin(g / 2);
    };
    const double lo = (kPi - g) / 2, hi = g;
    if (hi - lo < 1e-15 || r >= rr(lo)) return lo;
    if (r <= rr(hi)) return hi;
    return bisect([&](double a) { return rr(a) - r; }, lo, hi);
}

ArcPolygon triangle_body(double r, double D) {
    const double g = std::asin(std::min(1.0, D / 2));
    const double a = triangle_alpha(r, D);
    return make_polygon({polar(-kPi / 2 + g), polar(-kPi / 2 + g + 2 * a), polar(-kPi / 2 - g)});
}

std::vector<Point> polygon_corners(const ArcPolygon& b) { return corners(b); }

void validate_params(const FamilySpec& s) {
    using namespace closed;
    switch (s.id) {
        case FamilyId::Iso:
            require_range("iso gamma", param(s, 0), 0.0, kPi / 2);
            break;
        case FamilyId::RecT:
            require_range("rect r", param(s, 0), 0.0, kSqrt2 - 1);
            break;
        case FamilyId::ReB:
        case FamilyId::Yamanouti:
            require_range(family_name(s.id) + " r", param(s, 0), 0.5, kSqrt3 - 1);
            break;
        case FamilyId::CSB:
            require_range("csb gamma", param(s, 0), kPi / 3, kPi / 2);
            break;
        case FamilyId::RSB:
            require_range("rsb r", param(s, 0), kSqrt2 - 1, 1 / kSqrt2);
            break;
        case FamilyId::SBoat: {
            const double g = param(s, 1);
            require_range("sboat gamma", g, kPi / 3, kPi / 2);
            require_range("sboat r", param(s, 0), iso_inradius(g), std::sin(g / 2));
            break;
        }
        case FamilyId::BEq:
            require_range("beq r", param(s, 0), 0.5, frt_inradius());
            break;
        case FamilyId::SliRT:
            require_range("slirt r", param(s, 0), frt_inradius(), srt_inradius());
            break;
        case FamilyId::CSRT:
            require_range("csrt gamma", param(s, 0), csrt_gamma_min(), kPi / 6);
            break;
        case FamilyId::BTrap:
            require_range("btrap gamma", param(s, 0), 0.0, kPi / 3);
            break;
        case FamilyId::Hood:
            require_range("hood gamma", param(s, 0), hood_gamma(), kPi / 3);
            break;
        case FamilyId::BPen: {
            const double r = param(s, 0), g = param(s, 1);
            require_range("bpen gamma", g, 0.0, kPi / 3);
            const double D = iso_diameter(g);
            if (!(8.0 * r >= 3.0 * D - 1e-12)) {
                std::ostringstream os;
                os.precision(12);
                os << "bpen: 8r >= 3D violated (r = " << r << ", D = " << D << ")";
                throw DomainError(os.str());
            }
            require_range("bpen r", r, 0.0, D / 2);
            break;
        }
        case FamilyId::BIso: {
            const double r = param(s, 0), g = param(s, 1);
            require_range("biso gamma", g, 0.0, kPi / 3);
            const double D = iso_diameter(g);
            if (8.0 * r < 3.0 * D) {
                require_range("biso r", r, iso_inradius(g), btrap_inradius(g));
            } else {
                require_range("biso r", r, 0.0, D / 2);
            }
            break;
        }
        case FamilyId::Triangle: {
            const double r = param(s, 0), D = param(s, 1);
            require_range("triangle D", D, kSqrt3, 2.0);
            const double g = std::asin(std::min(1.0, D / 2));
            require_range("triangle r", r, iso_inradius(kPi - 2 * g), iso_inradius(g));
            break;
        }
        case FamilyId::Rounded:
            require_range("rounded lambda", param(s, 0), 0.0, 1.0);
            if (!s.inner) throw DomainError("rounded: missing inner family");
            break;
        case FamilyId::CompletionMix:
            require_range("completion_mix lambda", param(s, 0), 0.0, 1.0);
            break;
        case FamilyId::NonConcentricReB:
            require_range("nonconcentric_reb r", param(s, 0), 0.5, srt_inradius());
            require_range("nonconcentric_reb shift", s.params.size() > 1 ? s.params[1] : 1.0, 0.0, 1.0);
            break;
        case FamilyId::GeneralSliced:
            require_range("general_sliced r", param(s, 0), frt_inradius(), srt_inradius());
            require_range("general_sliced rotation", param(s, 1), 0.0, 1.0);
            break;
        default:
            break;
    }
}

double clamped(const FamilySpec& s, std::size_t k, double lo, double hi) { return std::clamp(param(s, k), lo, hi); }

}  // namespace

namespace closed {

double hood_inradius() {
    static const double r = bisect([](double x) { return x * x + 2 * x - 1 - 2 * std::sqrt(1 - x * x); }, 0.5, 1.0);
    return r;
}

double hood_inradius_radicals() {
    const double s = std::cbrt(864.0 - 96.0 * std::sqrt(69.0)) / 3.0;
    const double x = 2.0 * std::pow(2.0 / 3.0, 2.0 / 3.0) * std::cbrt(9.0 + std::sqrt(69.0));
    const double q = std::sqrt(s + x);
    return 0.5 * (q + std::sqrt(16.0 / q - s - x)) - 1.0;
}

double hood_gamma() { return 2.0 * std::acos((1.0 + hood_inradius()) / 2.0); }
double bt_gamma() { return std::asin(0.75); }
double frt_inradius() { return 3.0 * kSqrt3 / 8.0; }
double srt_inradius() { return kSqrt3 - 1.0; }
double srt_width() { return kSqrt3 * std::cos(kPi / 3 - std::asin(kSqrt3 - 1.0)); }
double csrt_gamma_min() { return std::asin(kSqrt3 - 1.0) - kPi / 6; }

double iso_diameter(double g) { return g <= kPi / 3 ? 2.0 * std::cos(g / 2) : 2.0 * std::sin(g); }

double iso_width(double g) {
    if (g <= kPi / 3) {
        const double D = iso_diameter(g);
        return 0.5 * D * D * std::sqrt(std::max(0.0, 4.0 - D * D));
    }
    return iso_inradius(g) * (1.0 + 1.0 / std::sin(g / 2));
}

double iso_inradius(double g) {
    if (g <= kPi / 3) {
        const double D = iso_diameter(g);
        return iso_width(g) / (2.0 + std::sqrt(std::max(0.0, 4.0 - D * D)));
    }
    const double D = iso_diameter(g);
    return 0.5 * D * (1.0 / std::cos(g / 2) - std::tan(g / 2));
}

double btrap_inradius(double g) {
    if (g <= bt_gamma()) return 0.5 * iso_diameter(g) * std::sin(g);
    return 3.0 * iso_diameter(g) / 8.0;
}

double bent_pentagon_width(double r, double D, double R) {
    const double q = D / (2 * R);
    return 2.0 * D * std::sqrt(std::max(0.0, 1.0 - q * q)) *
           std::cos(std::acos(clamp_unit(D / (2 * (D - r)))) + std::acos(clamp_unit(q)) - std::asin(clamp_unit(r / (D - r))));
}

double bent_pentagon_gamma_r(double r) {
    const double lo = 2.0 * std::acos(std::min(1.0, 4.0 * r / 3.0));
    const double hi = 2.0 * std::acos(std::min(1.0, (r + 1.0) / 2.0));
    return bisect([r](double g) { return bent_pentagon_width(r, iso_diameter(g)) - 2.0 * r; }, lo, std::max(lo, hi));
}

double bent_pentagon_gamma_min(double r) {
    const double rbt = btrap_inradius(bt_gamma());
    if (r <= rbt) return 2.0 * std::acos(std::min(1.0, 4.0 * r / 3.0));
    return bent_pentagon_gamma_r(r);
}

double bent_pentagon_gamma_max(double r) {
    if (r <= srt_inradius()) return kPi / 3;
    return 2.0 * std::acos(std::min(1.0, (r + 1.0) / 2.0));
}

double slirt_width(double r) {
    const double D = kSqrt3;
    return D * std::cos(kPi / 6 - std::asin(r / (D - r)) + std::acos(clamp_unit(D / (2 * (D - r)))));
}

double blossom_shift(double r) {
    if (r <= frt_inradius()) return r - 0.5;
    const double a = kSqrt3 - r;
    return std::sqrt(a * a - 0.75) - 0.5;
}

double filled_blossom_width(double r) { return 1.0 - blossom_shift(r) + r; }

}  // namespace closed

FamilySpec make_spec(FamilyId id, std::vector<double> params) {
    FamilySpec s;
    s.id = id;
    s.params = std::move(params);
    return s;
}

FamilySpec make_rounded(const FamilySpec& inner, double lambda) {
    FamilySpec s = make_spec(FamilyId::Rounded, {lambda});
    s.inner = std::make_shared<const FamilySpec>(inner);
    return s;
}

std::string family_name(FamilyId id) { return info(id).name; }
std::vector<std::string> param_names(FamilyId id) { return info(id).params; }

FamilySpec parse_family(const std::string& text) {
    const auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    if (name == "h" || name == "hood_vertex") name = "hood_vertex";
    const FamilyInfo* fi = nullptr;
    for (const auto& i : family_infos()) {
        if (name == i.name) fi = &i;
    }
    if (!fi) throw DomainError("unknown family: " + name);
    FamilySpec s = make_spec(fi->id);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    std::map<std::string, double> kv;
    auto parse_number = [&](const std::string& key, const std::string& v) {
        try {
            std::size_t used = 0;
            const double x = std::stod(v, &used);
            if (used != v.size()) throw std::invalid_argument(v);
            kv[key] = x;
        } catch (const std::exception&) {
            throw DomainError(fi->name + std::string(": bad value for ") + key + ": " + v);
        }
    };
    if (fi->id == FamilyId::Rounded) {
        const auto lam = rest.rfind("lambda=");
        const auto inner_pos = rest.find("inner=");
        if (lam == std::string::npos || inner_pos == std::string::npos) throw DomainError("rounded: expected inner=SPEC,lambda=X");
        std::string inner_text = lam > inner_pos ? rest.substr(inner_pos + 6, lam - inner_pos - 6) : rest.substr(inner_pos + 6);
        std::string lam_text = rest.substr(lam + 7);
        if (lam < inner_pos) lam_text = lam_text.substr(0, lam_text.find(','));
        if (!inner_text.empty() && inner_text.back() == ',') inner_text.pop_back();
        parse_number("lambda", lam_text);
        return make_rounded(parse_family(inner_text), kv["lambda"]);
    }
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw DomainError(fi->name + std::string(": expected key=value, got ") + item);
        parse_number(item.substr(0, eq), item.substr(eq + 1));
    }
    for (const auto& [k, v] : kv) {
        if (std::find(fi->params.begin(), fi->params.end(), k) == fi->params.end()) {
            throw DomainError(fi->name + std::string(": unknown parameter ") + k);
        }
    }
    for (const auto& p : fi->params) {
        auto it = kv.find(p);
        if (it == kv.end()) {
            if (fi->id == FamilyId::NonConcentricReB && p == "shift") {
                s.params.push_back(1.0);
                continue;
            }
            throw DomainError(fi->name + std::string(": missing parameter ") + p);
        }
        s.params.push_back(it->second);
    }
    return s;
}

std::string to_string(const FamilySpec& spec) {
    std::ostringstream os;
    os.precision(12);
    os << family_name(spec.id);
    const auto names = param_names(spec.id);
    if (spec.id == FamilyId::Rounded) {
        os << ":inner=" << (spec.inner ? to_string(*spec.inner) : std::string("?")) << ",lambda=" << param(spec, 0);
        return os.str();
    }
    for (std::size_t k = 0; k < names.size() && k < spec.params.size(); ++k) os << (k == 0 ? ":" : ",") << names[k] << "=" << spec.params[k];
    return os.str();
}

ArcPolygon construct(const FamilySpec& s) {
    using namespace closed;
    validate_params(s);
    switch (s.id) {
        case FamilyId::Ball:
            return make_disk({0.0, 0.0}, 1.0);
        case FamilyId::Segment:
            return iso_body(0.0);
        case FamilyId::EqT:
            return eqt();
        case FamilyId::ReT:
            return ret();
        case FamilyId::RAT:
            return iso_body(kPi / 2);
        case FamilyId::SB:
            return construct(make_spec(FamilyId::CSB, {kPi / 2}));
        case FamilyId::SRT:
            return construct(make_spec(FamilyId::CSRT, {csrt_gamma_min()}));
        case FamilyId::FRT:
            return clip_halfplane(ret(), UnitDir(-kPi / 2), 0.5);
        case FamilyId::BT:
            return btrap_body(bt_gamma());
        case FamilyId::HoodVertex:
            return construct(make_spec(FamilyId::Hood, {hood_gamma()}));
        case FamilyId::Iso:
            return iso_body(clamped(s, 0, 0.0, kPi / 2));
        case FamilyId::RecT: {
            const double r = clamped(s, 0, 0.0, kSqrt2 - 1);
            if (r <= 0.0) return make_segment_body({-1.0, 0.0}, {1.0, 0.0});
            const double theta = 2.0 * (std::asin(std::min(1.0, (1.0 + r) / kSqrt2)) - kPi / 4);
            return make_polygon({{1.0, 0.0}, polar(theta), {-1.0, 0.0}});
        }
        case FamilyId::ReB:
            return reb_about(clamped(s, 0, 0.5, kSqrt3 - 1), {0.0, 0.0});
        case FamilyId::Yamanouti: {
            const double rho = clamped(s, 0, 0.5, kSqrt3 - 1) + 1.0;
            std::vector<Disk> ds;
            for (auto p : eqt_vertices()) ds.push_back({p, rho});
            return hull_bodies({eqt(), intersect_disks(ds)});
        }
        case FamilyId::CSB: {
            const double g = clamped(s, 0, kPi / 3, kPi / 2);
            const auto p = iso_vertices(g);
            const Incircle in = incircle(p[0], p[1], p[2]);
            const double rho = 1.0 / (1.0 - in.center.y);
            std::vector<Point> q;
            for (auto v : p) q.push_back(rho * (v - in.center));
            return truncate_to_ball(make_polygon(q));
        }
        case FamilyId::RSB: {
            const double r = clamped(s, 0, kSqrt2 - 1, 1 / kSqrt2);
            const auto p = iso_vertices(kPi / 2);
            return truncate_to_ball(scaled_about({p[0], p[1], p[2]}, p[0], r / (kSqrt2 - 1)));
        }
        case FamilyId::SBoat: {
            const double g = clamped(s, 1, kPi / 3, kPi / 2);
            const double r = std::clamp(param(s, 0), iso_inradius(g), std::sin(g / 2));
            const auto p = iso_vertices(g);
            return truncate_to_ball(scaled_about({p[0], p[1], p[2]}, p[0], r / iso_inradius(g)));
        }
        case FamilyId::BEq: {
            const double r = clamped(s, 0, 0.5, frt_inradius());
            return hull_points_disks(eqt_vertices(), {{{0.0, r - 0.5}, r}});
        }
        case FamilyId::SliRT:
            return general_sliced_body(clamped(s, 0, frt_inradius(), srt_inradius()), 1.0);
        case FamilyId::CSRT: {
            const double g = clamped(s, 0, csrt_gamma_min(), kPi / 6);
            return clip_if_cuts(ret(), polar(kPi / 6 + g), std::sin(kPi / 6 + g));
        }
        case FamilyId::BTrap:
            return btrap_body(clamped(s, 0, 0.0, kPi / 3));
        case FamilyId::Hood: {
            const double g = clamped(s, 0, hood_gamma(), kPi / 3);
            return bpen_body(iso_diameter(g) - 1.0, g);
        }
        case FamilyId::BPen:
            return bpen_body(param(s, 0), clamped(s, 1, 0.0, kPi / 3));
        case FamilyId::BIso:
            return biso_body(param(s, 0), clamped(s, 1, 0.0, kPi / 3));
        case FamilyId::Triangle:
            return triangle_body(param(s, 0), std::clamp(param(s, 1), kSqrt3, 2.0));
        case FamilyId::Rounded:
            return minkowski_combination(construct(*s.inner), make_disk({0.0, 0.0}, 1.0), clamped(s, 0, 0.0, 1.0));
        case FamilyId::CompletionMix:
            return minkowski_combination(ret(), eqt(), clamped(s, 0, 0.0, 1.0));
        case FamilyId::NonConcentricReB: {
            const double r = clamped(s, 0, 0.5, srt_inradius());
            const double shift = s.params.size() > 1 ? std::clamp(s.params[1], 0.0, 1.0) : 1.0;
            return reb_about(r, blossom_center(r, shift));
        }
        case FamilyId::GeneralSliced:
            return general_sliced_body(clamped(s, 0, frt_inradius(), srt_inradius()), clamped(s, 1, 0.0, 1.0));
    }
    throw DomainError("construct: unhandled family");
}

ExpectedRadii expected_radii(const FamilySpec& s) {
    using namespace closed;
    validate_params(s);
    ExpectedRadii e;
    e.R = 1.0;
    auto set = [&](double r, double w, double D) {
        e.r = r;
        e.w = w;
        e.D = D;
    };
    switch (s.id) {
        case FamilyId::Ball:
            set(1.0, 2.0, 2.0);
            break;
        case FamilyId::Segment:
            set(0.0, 0.0, 2.0);
            break;
        case FamilyId::EqT:
            set(0.5, 1.5, kSqrt3);
            break;
        case FamilyId::ReT:
            set(kSqrt3 - 1, kSqrt3, kSqrt3);
            break;
        case FamilyId::RAT:
            set(kSqrt2 - 1, 1.0, 2.0);
            break;
        case FamilyId::SB:
            set(1 / kSqrt2, 1 / kSqrt2 + 1, 2.0);
            break;
        case FamilyId::SRT:
            set(kSqrt3 - 1, srt_width(), kSqrt3);
            break;
        case FamilyId::FRT:
            set(frt_inradius(), 1.5, kSqrt3);
            break;
        case FamilyId::BT: {
            const double q = std::sqrt(2.0 + std::sqrt(7.0) / 2.0);
            set(3.0 * q / 8.0, 3.0 * q / 4.0, q);
            break;
        }
        case FamilyId::HoodVertex: {
            const double r = hood_inradius();
            set(r, 2 * r, r + 1);
            break;
        }
        case FamilyId::Iso: {
            const double g = param(s, 0);
            set(iso_inradius(g), iso_width(g), g <= 0.0 ? 2.0 : iso_diameter(g));
            break;
        }
        case FamilyId::RecT: {
            const double r = param(s, 0);
            set(r, r * (r + 2.0), 2.0);
            break;
        }
        case FamilyId::ReB:
        case FamilyId::Yamanouti: {
            const double r = param(s, 0);
            set(r, r + 1.0, kSqrt3);
            break;
        }
        case FamilyId::CSB: {
            const double g = param(s, 0);
            const double r = std::sin(g / 2);
            set(r, r + 1.0, 2.0 * std::sin(g));
            break;
        }
        case FamilyId::RSB: {
            const double r = param(s, 0);
            set(r, (kSqrt2 + 1) * r, 2.0);
            break;
        }
        case FamilyId::SBoat: {
            const double r = param(s, 0), g = param(s, 1);
            set(r, r * (1.0 + 1.0 / std::sin(g / 2)), 2.0 * std::sin(g));
            break;
        }
        case FamilyId::BEq:
            set(param(s, 0), 1.5, kSqrt3);
            break;
        case FamilyId::SliRT: {
            const double r = param(s, 0);
            set(r, slirt_width(r), kSqrt3);
            break;
        }
        case FamilyId::CSRT:
            set(kSqrt3 - 1, kSqrt3 * std::sin(kPi / 3 + param(s, 0)), kSqrt3);
            break;
        case FamilyId::BTrap: {
            const double g = param(s, 0);
            const double D = g <= 0.0 ? 2.0 : iso_diameter(g);
            set(btrap_inradius(g), D * std::sin(g), D);
            break;
        }
        case FamilyId::Hood: {
            const double g = param(s, 0);
            const double D = iso_diameter(g), r = D - 1.0;
            set(r, 2.0 * D * std::sin(g / 2) * std::cos(g - std::asin(r)), D);
            break;
        }
        case FamilyId::BPen:
        case FamilyId::BIso: {
            const double r = param(s, 0), g = param(s, 1);
            const double D = iso_diameter(g);
            if (8.0 * r < 3.0 * D) {
                set(r, iso_width(g), D);
                break;
            }
            const double lo = bent_pentagon_gamma_min(r) - 1e-12, hi = bent_pentagon_gamma_max(r) + 1e-12;
            const bool bent = r >= frt_inradius() - 1e-12 && r <= hood_inradius() + 1e-12 && g >= lo && g <= hi;
            e.D = D;
            if (bent) {
                e.r = r;
                e.w = bent_pentagon_width(r, D);
            }
            break;
        }
        case FamilyId::Triangle: {
            const double r = param(s, 0), D = param(s, 1);
            const double g = std::asin(std::min(1.0, D / 2));
            set(r, 2.0 * r * (r / std::tan(g / 2) + D) / D, D);
            break;
        }
        case FamilyId::Rounded: {
            const double lam = param(s, 0);
            const ExpectedRadii in = expected_radii(*s.inner);
            auto mix = [lam](std::optional<double> v, double b) -> std::optional<double> {
                if (!v) return std::nullopt;
                return (1.0 - lam) * *v + lam * b;
            };
            e.r = mix(in.r, 1.0);
            e.w = mix(in.w, 2.0);
            e.D = mix(in.D, 2.0);
            e.R = mix(in.R, 1.0);
            break;
        }
        case FamilyId::CompletionMix: {
            const double lam = param(s, 0);
            set(lam * 0.5 + (1.0 - lam) * (kSqrt3 - 1), lam * 1.5 + (1.0 - lam) * kSqrt3, kSqrt3);
            break;
        }
        case FamilyId::NonConcentricReB: {
            const double r = param(s, 0);
            const double shift = s.params.size() > 1 ? s.params[1] : 1.0;
            set(r, r + 1.0 - shift * blossom_shift(r), kSqrt3);
            break;
        }
        case FamilyId::GeneralSliced: {
            const double r = param(s, 0), rot = param(s, 1);
            set(r, (1.0 - rot) * filled_blossom_width(r) + rot * slirt_width(r), kSqrt3);
            break;
        }
    }
    return e;
}

std::string pattern_string(const std::array<Sign, 9>& pattern) {
    std::string out;
    for (std::size_t k = 0; k < pattern.size(); ++k) {
        if (k) out += ' ';
        out += pattern[k] == Sign::Tight ? "+" : pattern[k] == Sign::Strict ? "-" : "±";
    }
    return out;
}

std::vector<VertexRow> vertex_table() {
    using namespace closed;
    auto pat = [](const char* s) {
        std::array<Sign, 9> p{};
        std::size_t k = 0;
        for (const char* c = s; *c && k < 9; ++c) {
            if (*c == '+') p[k++] = Sign::Tight;
            if (*c == '-') p[k++] = Sign::Strict;
            if (*c == '*') p[k++] = Sign::Artefact;
        }
        return p;
    };
    auto row = [&](const char* name, FamilyId id, const char* p, std::array<double, 3> printed) {
        VertexRow v;
        v.name = name;
        v.spec = make_spec(id);
        const ExpectedRadii e = expected_radii(v.spec);
        v.point = {*e.r / *e.R, *e.w / (2 * *e.R), *e.D / (2 * *e.R)};
        v.pattern = pat(p);
        v.printed = printed;
        return v;
    };
    return {
        row("Ball", FamilyId::Ball, "+--++-+--", {1.0, 1.0, 1.0}),
        row("EquilateralTriangle", FamilyId::EqT, "-+---++++", {0.5, 0.75, 0.8660}),
        row("LineSegment", FamilyId::Segment, "++-+---*+", {0.0, 0.0, 1.0}),
        row("ReuleauxTriangle", FamilyId::ReT, "----+++--", {0.7321, 0.8660, 0.8660}),
        row("RightAngledTriangle", FamilyId::RAT, "---+---++", {0.4142, 0.5, 1.0}),
        row("SailingBoat", FamilyId::SB, "---+--++-", {0.7071, 0.8536, 1.0}),
        row("SlicedReuleauxTriangle", FamilyId::SRT, "--+-++---", {0.7321, 0.8440, 0.8660}),
        row("FlattenedReuleauxTriangle", FamilyId::FRT, "-++--+---", {0.6495, 0.75, 0.8660}),
        row("BentTrapezoid", FamilyId::BT, "+++------", {0.6836, 0.6836, 0.9114}),
        row("Hood", FamilyId::HoodVertex, "+-+-+----", {0.7935, 0.7935, 0.8967}),
    };
}

Companions min_max_companions(const FamilySpec& s) {
    using namespace closed;
    validate_params(s);
    Companions c;
    auto with_max = [&](ArcPolygon min_body, const std::string& note) {
        c.min_body = std::move(min_body);
        c.max_body = construct(s);
        c.note = note;
        return c;
    };
    switch (s.id) {
        case FamilyId::SRT:
            return with_max(hull_points_disks(eqt_vertices(), {{{0.0, 0.0}, srt_inradius()}}), "hull of the triangle vertices and the inball");
        case FamilyId::FRT:
            return with_max(hull_points_disks(eqt_vertices(), {{{0.0, frt_inradius() - 0.5}, frt_inradius()}}), "hull of the triangle and the inball");
        case FamilyId::HoodVertex:
        case FamilyId::Hood: {
            const double g = s.id == FamilyId::Hood ? param(s, 0) : hood_gamma();
            const auto p = iso_vertices(g);
            return with_max(hull_points_disks({p[0], p[1], p[2]}, {{{0.0, 0.0}, iso_diameter(g) - 1.0}}), "bent isosceles");
        }
        case FamilyId::BT:
        case FamilyId::BTrap: {
            const double g = s.id == FamilyId::BTrap ? param(s, 0) : bt_gamma();
            if (g <= 0.0) break;
            const auto p = btrap_vertices(g);
            return with_max(hull_points_disks({p[0], p[1], p[2]}, {{btrap_incenter(g), btrap_inradius(g)}}), "hull of the isosceles triangle and an inball");
        }
        case FamilyId::SB:
        case FamilyId::CSB: {
            ArcPolygon mx = construct(s);
            c.min_body = make_polygon(polygon_corners(mx));
            c.max_body = mx;
            c.note = "circumspherical pentagon on the vertices";
            return c;
        }
        case FamilyId::RSB: {
            const double r = param(s, 0);
            const double sc = r / (kSqrt2 - 1);
            const double w = (kSqrt2 + 1) * r;
            ArcPolygon mx = construct(s);
            const auto p = iso_vertices(kPi / 2);
            if (w <= kSqrt2) {
                c.min_body = hull_bodies({iso_body(kPi / 2), clip_disk(mx, p[0], w)});
            } else {
                const double yl = 1.0 - sc;
                const double x4 = yl - 1.0 + w * kSqrt2;
                c.min_body = hull_points_disks({p[0], p[1], p[2], {x4, yl}, {-x4, yl}}, {});
            }
            c.max_body = mx;
            c.note = "minimal right-angled sailing boat";
            return c;
        }
        case FamilyId::SBoat: {
            const double r = param(s, 0), g = param(s, 1);
            const double w = r * (1.0 + 1.0 / std::sin(g / 2));
            const auto p = iso_vertices(g);
            ArcPolygon mx = construct(s);
            if (w > dist(p[0], p[1])) {
                c.max_body = mx;
                c.note = "no unique minimal set";
                return c;
            }
            c.min_body = hull_bodies({iso_body(g), clip_disk(mx, p[0], w)});
            c.max_body = mx;
            c.note = "minimal sailing boat";
            return c;
        }
        case FamilyId::ReB:
        case FamilyId::Yamanouti: {
            const double r = param(s, 0);
            c.min_body = construct(make_spec(FamilyId::Yamanouti, {r}));
            c.max_body = construct(make_spec(FamilyId::ReB, {r}));
            c.note = "Yamanouti set and Reuleaux blossom";
            return c;
        }
        case FamilyId::BEq: {
            const double r = param(s, 0);
            const Point cc{0.0, r - 0.5};
            const Point top{0.0, 1.0};
            ArcPolygon mx = construct(make_spec(FamilyId::FRT));
            for (double sgn : {-1.0, 1.0}) {
                auto [n, o] = tangent_halfplane(top, cc, r, [sgn](Point dir) { return sgn * dir.x * (dir.y < 0 ? 1.0 : -1.0); });
                mx = clip_if_cuts(mx, n, o);
            }
            c.min_body = construct(s);
            c.max_body = mx;
            c.note = "bent equilateral and a sliced flattened Reuleaux triangle";
            return c;
        }
        case FamilyId::SliRT: {
            const double r = param(s, 0);
            return with_max(hull_points_disks(eqt_vertices(), {{blossom_center(r, 1.0), r}}), "bent equilateral");
        }
        case FamilyId::CSRT: {
            const double w = *expected_radii(s).w;
            std::vector<Disk> ds;
            for (auto p : eqt_vertices()) ds.push_back({p, w});
            const ArcPolygon yam = hull_bodies({eqt(), intersect_disks(ds)});
            return with_max(hull_bodies({yam, make_disk({0.0, 0.0}, srt_inradius())}), "hull of the inball and a Yamanouti set");
        }
        case FamilyId::BPen: {
            const double r = param(s, 0), g = param(s, 1);
            return with_max(biso_body(r, g), "bent isosceles");
        }
        case FamilyId::NonConcentricReB:
        case FamilyId::GeneralSliced: {
            ArcPolygon mx = construct(s);
            const RadiiTuple t = compute_radii(mx);
            std::vector<Disk> ds;
            for (auto p : eqt_vertices()) ds.push_back({p, t.w});
            ArcPolygon mn = hull_bodies({hull_points_disks(eqt_vertices(), {{t.incenter, t.r}}), intersect_disks(ds)});
            c.min_body = mn;
            c.max_body = mx;
            c.note = "hull of the bent equilateral and the disks of radius w around the vertices";
            return c;
        }
        case FamilyId::Rounded: {
            const Companions in = min_max_companions(*s.inner);
            const double lam = param(s, 0);
            const ArcPolygon ball = make_disk({0.0, 0.0}, 1.0);
            if (in.min_body) c.min_body = minkowski_combination(*in.min_body, ball, lam);
            if (in.max_body) c.max_body = minkowski_combination(*in.max_body, ball, lam);
            c.note = in.note.empty() ? "" : "rounded " + in.note;
            return c;
        }
        default:
            break;
    }
    c.note = "no companion sets defined for " + family_name(s.id);
    return c;
}

}  // namespace radii_atlas
