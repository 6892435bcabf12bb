#include "radii_atlas/diagram.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace radii_atlas {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

double sqrt0(double v) { return std::sqrt(std::max(0.0, v)); }
double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }
std::size_t idx(Ineq i) { return static_cast<std::size_t>(i); }

std::set<Ineq> pattern_set(const std::array<Sign, 9>& p, Sign which) {
    std::set<Ineq> out;
    for (std::size_t k = 0; k < 9; ++k) {
        if (p[k] == which) out.insert(kAllIneqs[k]);
    }
    return out;
}

}  // namespace

std::string ineq_name(Ineq i) {
    static const std::array<const char*, 9> names = {"lb1", "lb2", "lb3", "ib1", "ib2", "ib3", "ub1", "ub2", "ub3"};
    return names[idx(i)];
}

Ineq parse_ineq(const std::string& name) {
    for (Ineq i : kAllIneqs) {
        if (ineq_name(i) == name) return i;
    }
    throw DomainError("unknown inequality: " + name);
}

double SlackVector::min() const { return *std::min_element(s.begin(), s.end()); }

DiagramPoint f_map(const RadiiTuple& t) { return {t.r / t.R, t.w / (2 * t.R), t.D / (2 * t.R)}; }
DiagramPoint f_map(const ArcPolygon& body) { return f_map(compute_radii(body)); }

double lb2_bound(double D, double R) { return D * D * sqrt0(4 * R * R - D * D) / (2 * R * R); }

double lb3_bound(double r, double D, double R) {
    const double q = D / (2 * R);
    return 2 * D * sqrt0(1 - q * q) *
           std::cos(std::acos(clamp_unit(D / (2 * (D - r)))) + std::acos(clamp_unit(q)) - std::asin(clamp_unit(r / (D - r))));
}

double lb3_bound_algebraic(double r, double D, double R) {
    const double q = D / (2 * R);
    const double a = r / (D - r);
    const double b = D / (2 * (D - r));
    const double sq = sqrt0(1 - q * q), sb = sqrt0(1 - b * b);
    return 2 * D * sq * (sqrt0(1 - a * a) * (D * D / (4 * R * (D - r)) - sb * sq) + a * (q * sb + b * sq));
}

double steinhagen_coefficient(double D, double R) {
    const double q = D / (2 * R);
    return 1 + (2 * kSqrt2 * R / D) * std::sqrt(1 + sqrt0(1 - q * q));
}

double ub2_bound(double r, double D, double R) { return r * steinhagen_coefficient(D, R); }

double ub3_bound(double r, double D, double R) {
    const double q = D / (2 * R);
    return 2 * r * (1 + (2 * r * R / (D * D)) * (1 + sqrt0(1 - q * q)));
}

SlackVector eval_slacks(double r, double w, double D, double R) {
    SlackVector v;
    std::ostringstream note;
    if (!(R > 0.0) || !(D > 0.0) || r < 0.0 || w < 0.0) {
        v.domain_ok = false;
        note << "nonpositive radii; ";
    }
    if (2 * r > w + 1e-9 || w > D + 1e-9 || D > 2 * R + 1e-9) {
        v.domain_ok = false;
        note << "chain 2r <= w <= D <= 2R violated; ";
    }
    v.domain_note = note.str();
    v.s[idx(Ineq::lb1)] = (w - 2 * r) / R;
    v.s[idx(Ineq::ib1)] = (2 * R - D) / R;
    v.s[idx(Ineq::ub1)] = (R + r - w) / R;
    v.s[idx(Ineq::ib2)] = (D - R - r) / R;
    v.s[idx(Ineq::ib3)] = (D - kSqrt3 * R) / R;
    v.s[idx(Ineq::lb2)] = (w - lb2_bound(D, R)) / R;
    const double lb3 = lb3_bound(r, D, R);
    v.s[idx(Ineq::lb3)] = (w - lb3) / R;
    v.s[idx(Ineq::ub2)] = (ub2_bound(r, D, R) - w) / R;
    v.s[idx(Ineq::ub3)] = (ub3_bound(r, D, R) - w) / R;
    v.lb2_polynomial = (4 * w * w * std::pow(R, 4) - (4 * R * R - D * D) * std::pow(D, 4)) / std::pow(R, 6);
    v.lb3_form_gap = (lb3 - lb3_bound_algebraic(r, D, R)) / R;
    return v;
}

SlackVector eval_slacks(const DiagramPoint& p) { return eval_slacks(p.x, 2 * p.y, 2 * p.z, 1.0); }

bool lb3_attainable(double r, double D, double tol) { return 8 * r >= 3 * D - 8 * tol; }

std::vector<Ineq> tight_set(const SlackVector& s, double r, double D, double tol) {
    std::vector<Ineq> out;
    for (Ineq i : kAllIneqs) {
        if (std::abs(s[i]) > tol) continue;
        if (i == Ineq::lb3 && !lb3_attainable(r, D, tol)) continue;
        out.push_back(i);
    }
    return out;
}

WEnvelope w_envelopes(double r, double D, double R) {
    const auto proj = check_2d_projection(r, D, R);
    for (double p : proj) {
        if (!(p >= -1e-9)) throw DomainError("w_envelopes: (r, D) outside the r-D-R diagram");
    }
    WEnvelope e;
    e.w_upper = std::min({D, R + r, ub2_bound(r, D, R), ub3_bound(r, D, R)});
    e.w_lower = std::max({2 * r, lb2_bound(D, R), lb3_bound(r, D, R)});
    return e;
}

std::array<double, 4> check_2d_projection(double r, double D, double R) {
    const double s = sqrt0(4 * R * R - D * D);
    return {(2 * R - D) / R, (D - r - R) / R, (D - kSqrt3 * R) / R, (r - D * D * s / (2 * R * (2 * R + s))) / R};
}

std::string to_string(const SkeletonLabel& label) {
    static const std::array<const char*, 5> kinds = {"interior", "facet", "edge", "vertex", "outside"};
    std::string out = kinds[static_cast<std::size_t>(label.kind)];
    if (!label.name.empty()) out += ":" + label.name;
    return out;
}

double default_tolerance() {
    if (const char* env = std::getenv("RADII_ATLAS_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-6;
}

SkeletonLabel classify(const DiagramPoint& p, double tol) {
    const double r = p.x, D = 2 * p.z;
    const SlackVector s = eval_slacks(p);
    SkeletonLabel label;
    for (Ineq i : kAllIneqs) {
        if (!(s[i] >= -tol)) label.violated.push_back(i);
    }
    label.tight = tight_set(s, r, D, tol);
    if (!label.violated.empty()) {
        label.kind = SkeletonKind::Outside;
        for (Ineq i : label.violated) label.name += (label.name.empty() ? "" : "+") + ineq_name(i);
        return label;
    }
    const std::set<Ineq> t(label.tight.begin(), label.tight.end());
    if (t.empty()) return label;
    for (const auto& row : vertex_table()) {
        const auto need = pattern_set(row.pattern, Sign::Tight);
        const auto extra = pattern_set(row.pattern, Sign::Artefact);
        const bool covers = std::includes(t.begin(), t.end(), need.begin(), need.end());
        const bool within = std::all_of(t.begin(), t.end(), [&](Ineq i) { return need.count(i) || extra.count(i); });
        if (covers && within) {
            label.kind = SkeletonKind::Vertex;
            label.name = row.name;
            return label;
        }
    }
    if (t.size() == 1) {
        label.kind = SkeletonKind::Facet;
        label.name = ineq_name(*t.begin());
        return label;
    }
    std::vector<const EdgeFamily*> edges;
    for (const auto& e : edge_catalog()) {
        if (t.count(e.tight[0]) && t.count(e.tight[1])) edges.push_back(&e);
    }
    if (edges.size() == 1 && t.size() == 2) {
        label.kind = SkeletonKind::Edge;
        label.name = edges[0]->name;
        return label;
    }
    // Three or more tight without an exact vertex pattern: report the vertex sharing most tight constraints.
    label.kind = t.size() == 2 ? SkeletonKind::Edge : SkeletonKind::Vertex;
    std::size_t best = 0;
    for (const auto& row : vertex_table()) {
        const auto need = pattern_set(row.pattern, Sign::Tight);
        std::size_t common = 0;
        for (Ineq i : t) common += need.count(i);
        if (t.size() > 2 && common > best) {
            best = common;
            label.name = row.name;
        }
    }
    if (label.name.empty()) {
        for (Ineq i : t) label.name += (label.name.empty() ? "" : "+") + ineq_name(i);
    }
    return label;
}

const std::vector<EdgeFamily>& edge_catalog() {
    using namespace closed;
    static const std::vector<EdgeFamily> edges = [] {
        auto rounded = [](FamilyId id) { return [id](double t) { return make_rounded(make_spec(id), t); }; };
        auto lerp = [](double a, double b, double t) { return a + (b - a) * t; };
        std::vector<EdgeFamily> e;
        e.push_back({"ReT-B", "ReuleauxTriangle", "Ball", {Ineq::ib2, Ineq::ub1}, rounded(FamilyId::ReT)});
        e.push_back({"L-B", "LineSegment", "Ball", {Ineq::lb1, Ineq::ib1}, rounded(FamilyId::Segment)});
        e.push_back({"SB-B", "SailingBoat", "Ball", {Ineq::ib1, Ineq::ub1}, rounded(FamilyId::SB)});
        e.push_back({"H-B", "Hood", "Ball", {Ineq::lb1, Ineq::ib2}, rounded(FamilyId::HoodVertex)});
        e.push_back({"L-EqT", "LineSegment", "EquilateralTriangle", {Ineq::lb2, Ineq::ub3},
                     [](double t) { return make_spec(FamilyId::Iso, {t * kPi / 3}); }});
        e.push_back({"RAT-EqT", "RightAngledTriangle", "EquilateralTriangle", {Ineq::ub2, Ineq::ub3},
                     [](double t) { return make_spec(FamilyId::Iso, {kPi / 2 - t * kPi / 6}); }});
        e.push_back({"L-RAT", "LineSegment", "RightAngledTriangle", {Ineq::ib1, Ineq::ub3},
                     [](double t) { return make_spec(FamilyId::RecT, {t * (kSqrt2 - 1)}); }});
        e.push_back({"EqT-ReT", "EquilateralTriangle", "ReuleauxTriangle", {Ineq::ib3, Ineq::ub1},
                     [lerp](double t) { return make_spec(FamilyId::ReB, {lerp(0.5, kSqrt3 - 1, t)}); }});
        e.push_back({"EqT-SB", "EquilateralTriangle", "SailingBoat", {Ineq::ub1, Ineq::ub2},
                     [lerp](double t) { return make_spec(FamilyId::CSB, {lerp(kPi / 3, kPi / 2, t)}); }});
        e.push_back({"RAT-SB", "RightAngledTriangle", "SailingBoat", {Ineq::ib1, Ineq::ub2},
                     [lerp](double t) { return make_spec(FamilyId::RSB, {lerp(kSqrt2 - 1, 1 / kSqrt2, t)}); }});
        e.push_back({"EqT-FRT", "EquilateralTriangle", "FlattenedReuleauxTriangle", {Ineq::lb2, Ineq::ib3},
                     [lerp](double t) { return make_spec(FamilyId::BEq, {lerp(0.5, frt_inradius(), t)}); }});
        e.push_back({"FRT-SRT", "FlattenedReuleauxTriangle", "SlicedReuleauxTriangle", {Ineq::lb3, Ineq::ib3},
                     [lerp](double t) { return make_spec(FamilyId::SliRT, {lerp(frt_inradius(), srt_inradius(), t)}); }});
        e.push_back({"SRT-ReT", "SlicedReuleauxTriangle", "ReuleauxTriangle", {Ineq::ib2, Ineq::ib3},
                     [lerp](double t) { return make_spec(FamilyId::CSRT, {lerp(csrt_gamma_min(), kPi / 6, t)}); }});
        e.push_back({"L-BT", "LineSegment", "BentTrapezoid", {Ineq::lb1, Ineq::lb2},
                     [](double t) { return make_spec(FamilyId::BTrap, {t * bt_gamma()}); }});
        e.push_back({"BT-FRT", "BentTrapezoid", "FlattenedReuleauxTriangle", {Ineq::lb2, Ineq::lb3},
                     [lerp](double t) { return make_spec(FamilyId::BTrap, {lerp(bt_gamma(), kPi / 3, t)}); }});
        e.push_back({"SRT-H", "SlicedReuleauxTriangle", "Hood", {Ineq::lb3, Ineq::ib2},
                     [lerp](double t) { return make_spec(FamilyId::Hood, {lerp(kPi / 3, hood_gamma(), t)}); }});
        e.push_back({"BT-H", "BentTrapezoid", "Hood", {Ineq::lb1, Ineq::lb3}, [lerp](double t) {
                         const double r = lerp(btrap_inradius(bt_gamma()), hood_inradius(), t);
                         const double g = t <= 0.0 ? bt_gamma() : t >= 1.0 ? hood_gamma() : bent_pentagon_gamma_r(r);
                         return make_spec(FamilyId::BPen, {r, g});
                     }});
        return e;
    }();
    return edges;
}

const std::vector<FacetPatch>& facet_catalog() {
    using namespace closed;
    static const std::vector<FacetPatch> patches = [] {
        auto lerp = [](double a, double b, double t) { return a + (b - a) * t; };
        const double lam_max = 0.9;
        std::vector<FacetPatch> p;
        const auto& edges = edge_catalog();
        auto edge_at = [&edges](const std::string& name) {
            for (const auto& e : edges) {
                if (e.name == name) return e.at;
            }
            throw DomainError("no edge " + name);
        };
        auto rounded_edge = [&](Ineq f, const std::string& edge) {
            auto at = edge_at(edge);
            p.push_back({f, "rounded " + edge, [at, lam_max](double u, double v) { return make_rounded(at(u), v * lam_max); }});
        };
        rounded_edge(Ineq::lb1, "L-BT");
        rounded_edge(Ineq::lb1, "BT-H");
        rounded_edge(Ineq::ib1, "L-RAT");
        rounded_edge(Ineq::ib1, "RAT-SB");
        rounded_edge(Ineq::ub1, "EqT-ReT");
        rounded_edge(Ineq::ub1, "EqT-SB");
        rounded_edge(Ineq::ib2, "SRT-H");
        rounded_edge(Ineq::ib2, "SRT-ReT");
        p.push_back({Ineq::ib3, "non-concentric Reuleaux blossoms", [lerp](double u, double v) {
                         return make_spec(FamilyId::NonConcentricReB, {lerp(0.5, srt_inradius(), u), v});
                     }});
        p.push_back({Ineq::ib3, "general sliced Reuleaux triangles", [lerp](double u, double v) {
                         return make_spec(FamilyId::GeneralSliced, {lerp(frt_inradius(), srt_inradius(), u), v});
                     }});
        p.push_back({Ineq::lb2, "bent isosceles over isosceles triangles", [lerp](double u, double v) {
                         const double g = u * kPi / 3;
                         return make_spec(FamilyId::BIso, {lerp(iso_inradius(g), btrap_inradius(g), v), g});
                     }});
        p.push_back({Ineq::lb3, "bent pentagons", [lerp](double u, double v) {
                         const double r = lerp(frt_inradius(), hood_inradius(), u);
                         return make_spec(FamilyId::BPen, {r, lerp(bent_pentagon_gamma_min(r), bent_pentagon_gamma_max(r), v)});
                     }});
        p.push_back({Ineq::ub2, "general sailing boats", [lerp](double u, double v) {
                         const double g = lerp(kPi / 3, kPi / 2, u);
                         return make_spec(FamilyId::SBoat, {lerp(iso_inradius(g), std::sin(g / 2), v), g});
                     }});
        p.push_back({Ineq::ub3, "acute triangles", [lerp](double u, double v) {
                         const double D = lerp(kSqrt3, 2.0, u);
                         const double g = std::asin(std::min(1.0, D / 2));
                         return make_spec(FamilyId::Triangle, {lerp(iso_inradius(kPi - 2 * g), iso_inradius(g), v), D});
                     }});
        return p;
    }();
    return patches;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f) {
    std::size_t n = jobs > 0 ? static_cast<std::size_t>(jobs) : std::max(1u, std::thread::hardware_concurrency());
    n = std::min(n, std::max<std::size_t>(count, 1));
    if (n <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t t = 0; t < n; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::vector<MeshSample> sample_boundary(int resolution, int jobs, double tol) {
    if (resolution < 2) throw DomainError("sample_boundary: resolution must be at least 2");
    struct Task {
        const FacetPatch* patch;
        double u, v;
    };
    std::vector<Task> tasks;
    for (const auto& patch : facet_catalog()) {
        for (int i = 0; i < resolution; ++i) {
            for (int j = 0; j < resolution; ++j) {
                tasks.push_back({&patch, static_cast<double>(i) / (resolution - 1), static_cast<double>(j) / (resolution - 1)});
            }
        }
    }
    std::vector<MeshSample> out(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t k) {
        const Task& t = tasks[k];
        MeshSample& m = out[k];
        m.spec = t.patch->at(t.u, t.v);
        m.facet = t.patch->facet;
        m.point = f_map(construct(m.spec));
        m.label = classify(m.point, tol);
    });
    return out;
}

void write_mesh_csv(const std::vector<MeshSample>& mesh, std::ostream& out) {
    const auto old = out.precision(12);
    out << "x,y,z,label,family,params\n";
    for (const auto& m : mesh) {
        std::string params = to_string(m.spec);
        const auto colon = params.find(':');
        params = colon == std::string::npos ? "" : params.substr(colon + 1);
        out << m.point.x << ',' << m.point.y << ',' << m.point.z << ',' << to_string(m.label) << ','
            << family_name(m.spec.id) << ",\"" << params << "\"\n";
    }
    out.precision(old);
}

namespace {

// Snaps v into [lo, hi] when it misses by at most slack.
std::optional<double> snap(double v, double lo, double hi, double slack = 1e-7) {
    if (!std::isfinite(v) || v < lo - slack || v > hi + slack) return std::nullopt;
    return std::clamp(v, lo, hi);
}

std::optional<FamilySpec> facet_chart(Ineq facet, const DiagramPoint& p) {
    using namespace closed;
    const double r = p.x, w = 2 * p.y, D = 2 * p.z;
    switch (facet) {
        case Ineq::lb3: {
            const auto rr = snap(r, frt_inradius(), hood_inradius());
            if (!rr) return std::nullopt;
            const auto g = snap(2 * std::acos(clamp_unit(p.z)), bent_pentagon_gamma_min(*rr), bent_pentagon_gamma_max(*rr));
            if (!g) return std::nullopt;
            const double Dg = iso_diameter(*g);
            return make_spec(FamilyId::BPen, {std::max(*rr, 3 * Dg / 8), *g});
        }
        case Ineq::ub2: {
            const auto g = snap(std::asin(clamp_unit(p.z)), kPi / 3, kPi / 2);
            if (!g) return std::nullopt;
            const auto rr = snap(r, iso_inradius(*g), std::sin(*g / 2));
            if (!rr) return std::nullopt;
            return make_spec(FamilyId::SBoat, {*rr, *g});
        }
        case Ineq::ub3: {
            const auto d = snap(D, kSqrt3, 2.0);
            if (!d) return std::nullopt;
            const double g = std::asin(std::min(1.0, *d / 2));
            const auto rr = snap(r, iso_inradius(kPi - 2 * g), iso_inradius(g));
            if (!rr) return std::nullopt;
            return make_spec(FamilyId::Triangle, {*rr, *d});
        }
        case Ineq::lb2: {
            const auto g = snap(2 * std::acos(clamp_unit(p.z)), 0.0, kPi / 3);
            if (!g) return std::nullopt;
            const auto rr = snap(r, iso_inradius(*g), btrap_inradius(*g));
            if (!rr) return std::nullopt;
            return make_spec(FamilyId::BIso, {*rr, *g});
        }
        case Ineq::ib3: {
            const auto rr = snap(r, 0.5, srt_inradius());
            if (!rr) return std::nullopt;
            const double t = blossom_shift(*rr);
            const double rho0 = *rr + 1 - t;
            if (w >= rho0 - 1e-12 || *rr <= frt_inradius()) {
                const auto shift = snap(t > 0 ? (*rr + 1 - w) / t : 0.0, 0.0, 1.0);
                if (!shift) return std::nullopt;
                return make_spec(FamilyId::NonConcentricReB, {*rr, *shift});
            }
            const double rho1 = slirt_width(*rr);
            const auto rot = snap((rho0 - w) / (rho0 - rho1), 0.0, 1.0);
            if (!rot) return std::nullopt;
            return make_spec(FamilyId::GeneralSliced, {*rr, *rot});
        }
        default:
            return std::nullopt;
    }
}

double cube_dist(const DiagramPoint& a, const DiagramPoint& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace

Witness synthesize_witness(const DiagramPoint& target, double tol) {
    const SlackVector st = eval_slacks(target);
    if (!(st.min() >= -1e-9)) throw DomainError("synthesize_witness: target is not a member of the diagram");
    const DiagramPoint ball{1.0, 1.0, 1.0};
    if (cube_dist(target, ball) <= 1e-14) {
        Witness w{construct(make_spec(FamilyId::Ball)), make_spec(FamilyId::Ball), ball, 0.0};
        return w;
    }
    auto point_at = [&](double t) {
        return DiagramPoint{1 + t * (target.x - 1), 1 + t * (target.y - 1), 1 + t * (target.z - 1)};
    };
    auto feasible = [&](double t) {
        const DiagramPoint p = point_at(t);
        if (p.x < 0 || p.y < 0 || p.z < 0) return false;
        const double m = eval_slacks(p).min();
        return std::isfinite(m) && m >= -1e-12;
    };
    double lo = 1.0, hi = 2.0;
    while (feasible(hi) && hi < 1e6) {
        lo = hi;
        hi *= 2;
    }
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    const double t = lo;
    const DiagramPoint p = point_at(t);
    const SlackVector sp = eval_slacks(p);
    std::vector<Ineq> order = {Ineq::lb2, Ineq::lb3, Ineq::ib3, Ineq::ub2, Ineq::ub3};
    std::stable_sort(order.begin(), order.end(), [&](Ineq a, Ineq b) { return std::abs(sp[a]) < std::abs(sp[b]); });
    const double lambda = std::clamp(1.0 - 1.0 / t, 0.0, 1.0);
    std::string attempts;
    Witness best;
    best.error = std::numeric_limits<double>::infinity();
    for (Ineq facet : order) {
        if (std::abs(sp[facet]) > 1e-6) break;
        const auto chart = facet_chart(facet, p);
        if (!chart) {
            attempts += ineq_name(facet) + ": outside chart; ";
            continue;
        }
        try {
            const FamilySpec spec = lambda > 0.0 ? make_rounded(*chart, lambda) : *chart;
            ArcPolygon body = construct(spec);
            const DiagramPoint got = f_map(body);
            const double err = cube_dist(got, target);
            if (err < best.error) best = Witness{std::move(body), spec, got, err};
            if (err <= tol) return best;
            std::ostringstream os;
            os << ineq_name(facet) << ": error " << err << "; ";
            attempts += os.str();
        } catch (const DomainError& e) {
            attempts += ineq_name(facet) + ": " + e.what() + "; ";
        }
    }
    throw Unsupported("synthesize_witness: no facet chart reaches the target (" + attempts + ")");
}

}  // namespace radii_atlas
