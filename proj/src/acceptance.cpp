#include "radii_atlas/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>

#include "radii_atlas/diagram.hpp"
#include "radii_atlas/families.hpp"
#include "radii_atlas/oracle.hpp"
#include "radii_atlas/radii.hpp"
#include "radii_atlas/random_bodies.hpp"

namespace radii_atlas {

namespace {

constexpr double kPrintedTol = 5e-4;
constexpr double kExactTol = 1e-9;
constexpr double kPatternTol = 1e-7;
constexpr double kFacetTightTol = 1e-7;
constexpr double kSlackFloor = -1e-9;
constexpr double kClosedFormTol = 1e-6;
constexpr int kFacetResolution = 5;
constexpr int kMinFacetSamples = 20;
constexpr double kEdgeTol = 1e-7;
constexpr double kProjectionFloor = -1e-7;
constexpr int kOracleN = 10000;
constexpr double kOracleArcTol = 1e-4;
constexpr double kOraclePolyTol = 1e-10;
constexpr double kStarTol = 1e-6;
constexpr double kCompletionTol = 1e-9;
constexpr double kLb3FormTol = 1e-9;
constexpr double kSteinhagenMax = 3.0;
constexpr double kSteinhagenSlack = 1e-12;
constexpr double kWitnessTol = 1e-6;
constexpr double kCertTol = 1e-7;

struct Counts {
    std::size_t fuzz, oracle, star, grid, witness;
};

Counts counts_for(VerifyLevel level) {
    if (level == VerifyLevel::Smoke) return {100, 20, 10, 40, 20};
    return {1000, 200, 100, 200, 200};
}

class CertLog {
public:
    void record(const ArcPolygon& body, const RadiiTuple& t) {
        const CertificateReport rep = verify_certificates(body, t, kCertTol);
        std::lock_guard<std::mutex> lock(mu_);
        ++checked_;
        if (!rep.valid) {
            ++failed_;
            if (first_failure_.empty() && !rep.failures.empty()) first_failure_ = rep.failures.front();
        }
    }
    std::size_t checked() const { return checked_; }
    std::size_t failed() const { return failed_; }
    const std::string& first_failure() const { return first_failure_; }

private:
    std::mutex mu_;
    std::size_t checked_ = 0;
    std::size_t failed_ = 0;
    std::string first_failure_;
};

struct MaxTracker {
    void update(double v) {
        std::lock_guard<std::mutex> lock(mu);
        if (std::isnan(v)) nan = true;
        else value = std::max(value, v);
    }
    std::mutex mu;
    double value = 0.0;
    bool nan = false;
};

struct MinTracker {
    void update(double v) {
        std::lock_guard<std::mutex> lock(mu);
        if (std::isnan(v)) nan = true;
        else value = std::min(value, v);
    }
    std::mutex mu;
    double value = 0.0;
    bool nan = false;
};

std::string sci(double v) {
    std::ostringstream s;
    s << std::setprecision(3) << std::scientific << v;
    return s.str();
}

double linf(const DiagramPoint& a, const DiagramPoint& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

RadiiTuple radii_logged(const ArcPolygon& body, CertLog& log) {
    RadiiTuple t = compute_radii(body);
    log.record(body, t);
    return t;
}

ArcPolygon find_vertex(const std::vector<VertexRow>& rows, const std::string& name) {
    for (const auto& row : rows) {
        if (row.name == name) return construct(row.spec);
    }
    throw DomainError("unknown vertex " + name);
}

std::vector<ArcPolygon> seeded_bodies(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<ArcPolygon> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_body(rng, i));
    return out;
}

bool is_polygon(const ArcPolygon& body) {
    return std::all_of(body.elements.begin(), body.elements.end(),
                       [](const BoundaryElement& e) { return std::holds_alternative<Segment>(e); });
}

struct Context {
    VerifyOptions opt;
    Counts n;
    CertLog certs;
};

CriterionResult table_reproduction(Context& ctx) {
    CriterionResult res{1, "vertex coordinates", false, "", 0.0, 1.0};
    double printed = 0.0, exact = 0.0;
    for (const auto& row : vertex_table()) {
        const ArcPolygon body = construct(row.spec);
        const DiagramPoint f = f_map(radii_logged(body, ctx.certs));
        printed = std::max(printed, linf(f, {row.printed[0], row.printed[1], row.printed[2]}));
        exact = std::max(exact, linf(f, row.point));
    }
    res.pass = printed <= kPrintedTol && exact <= kExactTol;
    res.detail = "max |f - printed| = " + sci(printed) + ", max |f - exact| = " + sci(exact);
    return res;
}

CriterionResult sign_patterns(Context& ctx) {
    CriterionResult res{2, "sign-pattern matrix", true, "", 0.0, 1.0};
    int matched = 0, artefacts = 0;
    std::string bad;
    const auto rows = vertex_table();
    for (const auto& row : rows) {
        const ArcPolygon body = construct(row.spec);
        const DiagramPoint f = f_map(radii_logged(body, ctx.certs));
        const SlackVector s = eval_slacks(f);
        const auto tight = tight_set(s, f.x, 2 * f.z, kPatternTol);
        bool ok = true;
        for (std::size_t k = 0; k < 9; ++k) {
            const Ineq i = kAllIneqs[k];
            const bool is_tight = std::find(tight.begin(), tight.end(), i) != tight.end();
            switch (row.pattern[k]) {
                case Sign::Tight: ok = ok && is_tight; break;
                case Sign::Strict: ok = ok && !is_tight; break;
                case Sign::Artefact:
                    ++artefacts;
                    ok = ok && s[i] == 0.0;
                    break;
            }
        }
        if (ok) ++matched;
        else bad += (bad.empty() ? "" : ",") + row.name;
    }
    res.pass = matched == static_cast<int>(rows.size());
    res.detail = std::to_string(matched) + "/" + std::to_string(rows.size()) + " patterns match, " +
                 std::to_string(artefacts) + " exact-zero artefact" + (bad.empty() ? "" : "; mismatched: " + bad);
    return res;
}

CriterionResult facet_attainment(Context& ctx) {
    CriterionResult res{3, "facet attainment", false, "", 0.0, 10.0};
    struct Task {
        const FacetPatch* patch;
        double u, v;
    };
    std::vector<Task> tasks;
    for (const auto& patch : facet_catalog()) {
        for (int i = 0; i < kFacetResolution; ++i) {
            for (int j = 0; j < kFacetResolution; ++j) {
                tasks.push_back({&patch, double(i) / (kFacetResolution - 1), double(j) / (kFacetResolution - 1)});
            }
        }
    }
    std::vector<int> good(tasks.size(), 0);
    MaxTracker named, closed_form;
    MinTracker others;
    std::atomic<int> missing_closed{0};
    parallel_for(tasks.size(), ctx.opt.jobs, [&](std::size_t k) {
        const Task& t = tasks[k];
        const FamilySpec spec = t.patch->at(t.u, t.v);
        const ArcPolygon body = construct(spec);
        const RadiiTuple rt = radii_logged(body, ctx.certs);
        const DiagramPoint f = f_map(rt);
        const SlackVector s = eval_slacks(f);
        double other = 0.0;
        for (Ineq i : kAllIneqs) {
            if (i != t.patch->facet) other = std::min(other, s[i]);
        }
        const double tight = std::abs(s[t.patch->facet]);
        const ExpectedRadii e = expected_radii(spec);
        double cf = 0.0;
        bool have = true;
        for (auto [want, got] : {std::pair{e.r, rt.r}, {e.w, rt.w}, {e.D, rt.D}, {e.R, rt.R}}) {
            if (want) cf = std::max(cf, std::abs(*want - got));
            else have = false;
        }
        if (!have) ++missing_closed;
        named.update(tight);
        others.update(other);
        closed_form.update(cf);
        good[k] = have && tight <= kFacetTightTol && other >= kSlackFloor && cf <= kClosedFormTol;
    });
    std::array<int, 9> per_facet{};
    for (std::size_t k = 0; k < tasks.size(); ++k) per_facet[static_cast<std::size_t>(tasks[k].patch->facet)] += good[k];
    const int fewest = *std::min_element(per_facet.begin(), per_facet.end());
    const auto failing = std::count(good.begin(), good.end(), 0);
    res.pass = fewest >= kMinFacetSamples && !named.nan && !others.nan && !closed_form.nan && missing_closed == 0;
    res.detail = std::to_string(tasks.size()) + " samples, " + std::to_string(failing) + " failing, min passing per facet = " +
                 std::to_string(fewest) + ", max |named slack| = " + sci(named.value) +
                 ", min other slack = " + sci(others.value) + ", max closed-form gap = " + sci(closed_form.value);
    if (missing_closed > 0) res.detail += ", " + std::to_string(missing_closed.load()) + " samples without closed form";
    return res;
}

CriterionResult edge_endpoints(Context& ctx) {
    CriterionResult res{4, "edge endpoints", false, "", 0.0, 5.0};
    const auto rows = vertex_table();
    const auto& edges = edge_catalog();
    struct Task {
        const EdgeFamily* edge;
        bool end;
    };
    std::vector<Task> tasks;
    for (const auto& e : edges) {
        tasks.push_back({&e, false});
        tasks.push_back({&e, true});
    }
    MaxTracker worst;
    std::atomic<int> substituted{0};
    parallel_for(tasks.size(), ctx.opt.jobs, [&](std::size_t k) {
        const Task& t = tasks[k];
        const ArcPolygon body = construct(t.edge->at(t.end ? 1.0 : 0.0));
        radii_logged(body, ctx.certs);
        const std::string& name = t.end ? t.edge->to : t.edge->from;
        ArcPolygon vertex = find_vertex(rows, name);
        double d = congruence_support_distance(body, vertex);
        if (d > kEdgeTol && name == "FlattenedReuleauxTriangle") {
            const Companions c = min_max_companions(make_spec(FamilyId::FRT));
            if (c.min_body) {
                const double dmin = congruence_support_distance(body, *c.min_body);
                if (dmin < d) {
                    d = dmin;
                    ++substituted;
                }
            }
        }
        worst.update(d);
    });
    res.pass = !worst.nan && worst.value <= kEdgeTol;
    res.detail = std::to_string(edges.size()) + " edges, max endpoint support distance = " + sci(worst.value);
    if (substituted > 0) res.detail += " (" + std::to_string(substituted.load()) + " endpoint matched the minimal flattened Reuleaux companion)";
    return res;
}

CriterionResult universality(Context& ctx) {
    CriterionResult res{5, "universality fuzz", false, "", 0.0, 60.0};
    const auto bodies = seeded_bodies(ctx.opt.seed + 5, ctx.n.fuzz);
    MinTracker slack, proj;
    parallel_for(bodies.size(), ctx.opt.jobs, [&](std::size_t k) {
        const RadiiTuple t = radii_logged(bodies[k], ctx.certs);
        slack.update(eval_slacks(t.r, t.w, t.D, t.R).min());
        const auto p = check_2d_projection(t.r, t.D, t.R);
        proj.update(*std::min_element(p.begin(), p.end()));
    });
    res.pass = !slack.nan && !proj.nan && slack.value >= kSlackFloor && proj.value >= kProjectionFloor;
    res.detail = std::to_string(bodies.size()) + " bodies, min slack = " + sci(slack.value) + ", min projection slack = " + sci(proj.value);
    return res;
}

CriterionResult oracle_equivalence(Context& ctx) {
    CriterionResult res{6, "oracle equivalence", false, "", 0.0, 120.0};
    const auto bodies = seeded_bodies(ctx.opt.seed + 6, ctx.n.oracle);
    MaxTracker arc_gap, poly_gap;
    std::atomic<int> polys{0};
    parallel_for(bodies.size(), ctx.opt.jobs, [&](std::size_t k) {
        const RadiiTuple t = radii_logged(bodies[k], ctx.certs);
        const RadiiTuple o = oracle::brute_radii(oracle::sample_boundary_points(bodies[k], kOracleN), static_cast<unsigned>(k + 1));
        const double gap = std::max({std::abs(t.r - o.r), std::abs(t.w - o.w), std::abs(t.D - o.D), std::abs(t.R - o.R)});
        if (is_polygon(bodies[k])) {
            ++polys;
            poly_gap.update(gap);
        } else {
            arc_gap.update(gap);
        }
    });
    res.pass = !arc_gap.nan && !poly_gap.nan && arc_gap.value <= kOracleArcTol && poly_gap.value <= kOraclePolyTol;
    res.detail = std::to_string(bodies.size()) + " bodies (" + std::to_string(polys.load()) + " polygons), max gap arcs = " +
                 sci(arc_gap.value) + ", polygons = " + sci(poly_gap.value);
    return res;
}

CriterionResult starshapedness(Context& ctx) {
    CriterionResult res{7, "starshapedness", false, "", 0.0, 30.0};
    const auto bodies = seeded_bodies(ctx.opt.seed + 7, ctx.n.star);
    const ArcPolygon ball = make_disk({0.0, 0.0}, 1.0);
    MaxTracker worst;
    parallel_for(bodies.size(), ctx.opt.jobs, [&](std::size_t k) {
        const RadiiTuple t0 = compute_radii(bodies[k]);
        const ArcPolygon body = scale(translate(bodies[k], -t0.circumcenter), 1.0 / t0.R);
        const DiagramPoint f = f_map(radii_logged(body, ctx.certs));
        for (int j = 1; j <= 9; ++j) {
            const double lambda = 0.1 * j;
            const ArcPolygon mix = minkowski_combination(body, ball, lambda);
            const DiagramPoint g = f_map(radii_logged(mix, ctx.certs));
            const DiagramPoint want{(1 - lambda) * f.x + lambda, (1 - lambda) * f.y + lambda, (1 - lambda) * f.z + lambda};
            worst.update(linf(g, want));
        }
    });
    res.pass = !worst.nan && worst.value <= kStarTol;
    res.detail = std::to_string(bodies.size()) + " bodies x 9 lambdas, max deviation = " + sci(worst.value);
    return res;
}

CriterionResult completion(Context& ctx) {
    CriterionResult res{8, "completion mixtures", false, "", 0.0, 1.0};
    const ArcPolygon eq = construct(make_spec(FamilyId::EqT));
    const ArcPolygon re = construct(make_spec(FamilyId::ReT));
    double dgap = 0.0, wgap = 0.0;
    std::vector<double> ws;
    for (int j = 0; j <= 10; ++j) {
        const double lambda = 0.1 * j;
        const RadiiTuple t = radii_logged(minkowski_combination(re, eq, lambda), ctx.certs);
        dgap = std::max(dgap, std::abs(t.D - std::sqrt(3.0)));
        ws.push_back(t.w);
    }
    for (int j = 0; j <= 10; ++j) {
        const double affine = 0.1 * j * 1.5 + (1 - 0.1 * j) * std::sqrt(3.0);
        wgap = std::max(wgap, std::abs(ws[j] - affine));
    }
    res.pass = dgap <= kCompletionTol && wgap <= kCompletionTol;
    res.detail = "max |D - sqrt3| = " + sci(dgap) + ", max affine w deviation = " + sci(wgap);
    return res;
}

double lb3_printed_sign(double r, double D) {
    const double q = D / 2, a = r / (D - r), b = D / (2 * (D - r));
    const double sq = std::sqrt(std::max(0.0, 1 - q * q)), sb = std::sqrt(std::max(0.0, 1 - b * b));
    return 2 * D * sq * (std::sqrt(std::max(0.0, 1 - a * a)) * (D * D / (4 * (D - r)) - sb * sq) + a * (q * sb - b * sq));
}

CriterionResult lb3_forms(Context& ctx) {
    CriterionResult res{9, "lb3 dual forms", false, "", 0.0, 5.0};
    const std::size_t n = ctx.n.grid;
    const double s3 = std::sqrt(3.0);
    double gap = 0.0, printed_gap = 0.0, coef = 0.0;
    bool nan = false;
    for (std::size_t i = 0; i < n; ++i) {
        const double D = s3 + (2.0 - s3) * double(i) / double(n - 1);
        const double s = std::sqrt(std::max(0.0, 4 - D * D));
        const double rlo = D * D * s / (2 * (2 + s)), rhi = D - 1;
        const double c = steinhagen_coefficient(D);
        nan = nan || std::isnan(c);
        coef = std::max(coef, c);
        for (std::size_t j = 0; j < n; ++j) {
            const double r = rlo + (rhi - rlo) * double(j) / double(n - 1);
            const double trig = lb3_bound(r, D), alg = lb3_bound_algebraic(r, D);
            nan = nan || std::isnan(trig) || std::isnan(alg);
            gap = std::max(gap, std::abs(trig - alg));
            printed_gap = std::max(printed_gap, std::abs(trig - lb3_printed_sign(r, D)));
        }
    }
    res.pass = !nan && gap <= kLb3FormTol && coef <= kSteinhagenMax + kSteinhagenSlack;
    res.detail = std::to_string(n) + "x" + std::to_string(n) + " grid, max |trig - algebraic| = " + sci(gap) +
                 " (last sign flipped: " + sci(printed_gap) + "), max Steinhagen coefficient = " + sci(coef);
    return res;
}

CriterionResult witnesses(Context& ctx) {
    CriterionResult res{10, "witness synthesis", false, "", 0.0, 120.0};
    std::mt19937_64 rng(ctx.opt.seed + 10);
    const auto& patches = facet_catalog();
    std::uniform_int_distribution<std::size_t> pick(0, patches.size() - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    struct Task {
        const FacetPatch* patch;
        double u, v, mu;
    };
    std::vector<Task> tasks;
    for (std::size_t k = 0; k < ctx.n.witness; ++k) {
        const FacetPatch* p = &patches[pick(rng)];
        const double u = unit(rng), v = unit(rng), mu = 0.95 * unit(rng);
        tasks.push_back({p, u, v, mu});
    }
    MaxTracker worst;
    std::atomic<int> unsupported{0}, undocumented{0}, failed{0};
    std::mutex mu;
    std::string first_error;
    parallel_for(tasks.size(), ctx.opt.jobs, [&](std::size_t k) {
        const Task& t = tasks[k];
        const DiagramPoint p = f_map(construct(t.patch->at(t.u, t.v)));
        const DiagramPoint target{(1 - t.mu) * p.x + t.mu, (1 - t.mu) * p.y + t.mu, (1 - t.mu) * p.z + t.mu};
        try {
            const Witness w = synthesize_witness(target, kWitnessTol);
            const DiagramPoint got = f_map(radii_logged(w.body, ctx.certs));
            const double err = linf(got, target);
            worst.update(err);
            if (!(err <= kWitnessTol)) ++failed;
        } catch (const Unsupported&) {
            ++unsupported;
            if (t.patch->facet != Ineq::ub1 && t.patch->facet != Ineq::ib2) ++undocumented;
        } catch (const std::exception& e) {
            ++failed;
            std::lock_guard<std::mutex> lock(mu);
            if (first_error.empty()) first_error = e.what();
        }
    });
    res.pass = !worst.nan && failed == 0 && undocumented == 0;
    res.detail = std::to_string(tasks.size()) + " targets, max error = " + sci(worst.value) + ", unsupported = " +
                 std::to_string(unsupported.load()) + ", failures = " + std::to_string(failed.load());
    if (!first_error.empty()) res.detail += " (" + first_error + ")";
    return res;
}

CriterionResult certificates(Context& ctx) {
    CriterionResult res{11, "certificates", false, "", 0.0, 0.0};
    res.pass = ctx.certs.checked() > 0 && ctx.certs.failed() == 0;
    res.detail = std::to_string(ctx.certs.checked()) + " kernel evaluations checked at margin " + sci(kCertTol) + ", " +
                 std::to_string(ctx.certs.failed()) + " failed";
    if (!ctx.certs.first_failure().empty()) res.detail += " (" + ctx.certs.first_failure() + ")";
    return res;
}

void print(const CriterionResult& r, std::ostream& out) {
    out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail << " | " << std::fixed
        << std::setprecision(2) << r.seconds << " s";
    if (r.budget_seconds > 0.0) out << " (budget " << r.budget_seconds << " s)";
    out << std::defaultfloat << std::setprecision(6) << '\n';
    out.flush();
}

}  // namespace

VerifyLevel parse_verify_level(const std::string& text) {
    if (text == "smoke") return VerifyLevel::Smoke;
    if (text == "full") return VerifyLevel::Full;
    throw DomainError("unknown verify level '" + text + "'");
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options, std::ostream& out) {
    Context ctx{options, counts_for(options.level), {}};
    const std::vector<std::function<CriterionResult(Context&)>> criteria = {
        table_reproduction, sign_patterns, facet_attainment, edge_endpoints, universality, oracle_equivalence,
        starshapedness,     completion,    lb3_forms,        witnesses,      certificates};
    std::vector<CriterionResult> results;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = criteria[k](ctx);
        } catch (const std::exception& e) {
            r.id = static_cast<int>(k + 1);
            r.title = "criterion " + std::to_string(k + 1);
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.budget_seconds > 0.0 && r.seconds > r.budget_seconds) {
            r.pass = false;
            r.detail += ", over the time budget";
        }
        print(r, out);
        results.push_back(r);
    }
    return results;
}

}  // namespace radii_atlas
