#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "radii_atlas/acceptance.hpp"
#include "radii_atlas/body_io.hpp"
#include "radii_atlas/diagram.hpp"
#include "radii_atlas/families.hpp"
#include "radii_atlas/oracle.hpp"
#include "radii_atlas/radii.hpp"
#include "radii_atlas/render.hpp"

namespace ra = radii_atlas;
using nlohmann::json;

namespace {

constexpr int kDigits = 12;

double round12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", kDigits, v);
    return std::strtod(buf, nullptr);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", kDigits, v);
    return buf;
}

json point_json(ra::Point p) { return json::array({round12(p.x), round12(p.y)}); }

json radii_json(const ra::ArcPolygon& body, const ra::RadiiTuple& t) {
    const ra::DiagramPoint f = ra::f_map(t);
    json j;
    j["r"] = round12(t.r);
    j["w"] = round12(t.w);
    j["D"] = round12(t.D);
    j["R"] = round12(t.R);
    j["f"] = json::array({round12(f.x), round12(f.y), round12(f.z)});
    j["incenter"] = point_json(t.incenter);
    j["circumcenter"] = point_json(t.circumcenter);
    j["width_direction"] = round12(t.width_dir.theta);
    j["diameter_pair"] = json::array({point_json(t.diam_pair[0]), point_json(t.diam_pair[1])});
    json circum;
    circum["touching"] = json::array();
    for (auto p : t.circum_cert.touching) circum["touching"].push_back(point_json(p));
    circum["hull_margin"] = round12(t.circum_cert.hull_margin);
    json in;
    in["normals"] = json::array();
    for (auto u : t.in_cert.normals) in["normals"].push_back(round12(u.theta));
    in["touch_points"] = json::array();
    for (auto p : t.in_cert.touch_points) in["touch_points"].push_back(point_json(p));
    in["hull_margin"] = round12(t.in_cert.hull_margin);
    const ra::CertificateReport rep = ra::verify_certificates(body, t);
    j["certificates"] = {{"circumball", circum}, {"inball", in}, {"valid", rep.valid}, {"failures", rep.failures}};
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ra::IoError("cannot write " + path);
    out << text;
    if (!out) throw ra::IoError("write failed for " + path);
}

std::string point_string(const ra::DiagramPoint& p) { return "(" + fmt(p.x) + ", " + fmt(p.y) + ", " + fmt(p.z) + ")"; }

void print_radii_table(const ra::ExpectedRadii& e, const ra::RadiiTuple& t) {
    std::printf("%-4s %-20s %-20s %s\n", "", "expected", "computed", "difference");
    const std::pair<const char*, std::pair<std::optional<double>, double>> rows[] = {
        {"r", {e.r, t.r}}, {"w", {e.w, t.w}}, {"D", {e.D, t.D}}, {"R", {e.R, t.R}}};
    for (const auto& [name, v] : rows) {
        const auto& [want, got] = v;
        std::printf("%-4s %-20s %-20s %s\n", name, want ? fmt(*want).c_str() : "-", fmt(got).c_str(),
                    want ? fmt(got - *want).c_str() : "-");
    }
}

struct Options {
    std::string body;
    int oracle_n = 0;
    std::string spec;
    std::string out;
    std::string render;
    bool companions = false;
    std::vector<double> xyz;
    double tol = 0.0;
    int resolution = 8;
    int jobs = 0;
    double r = 0.0, D = 0.0, R = 1.0;
    std::string level = "full";
    std::uint64_t seed = 20240601;
};

int cmd_radii(const Options& o) {
    const ra::ArcPolygon body = ra::load_body(o.body);
    const ra::RadiiTuple t = ra::compute_radii(body);
    json j = radii_json(body, t);
    if (o.oracle_n > 0) {
        const ra::RadiiTuple b = ra::oracle::brute_radii(ra::oracle::sample_boundary_points(body, o.oracle_n));
        const double gap = std::max({std::abs(t.r - b.r), std::abs(t.w - b.w), std::abs(t.D - b.D), std::abs(t.R - b.R)});
        j["oracle"] = {{"samples", o.oracle_n}, {"r", round12(b.r)}, {"w", round12(b.w)}, {"D", round12(b.D)},
                       {"R", round12(b.R)}, {"max_gap", round12(gap)}};
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_family(const Options& o) {
    const ra::FamilySpec spec = ra::parse_family(o.spec);
    const ra::ArcPolygon body = ra::construct(spec);
    const ra::RadiiTuple t = ra::compute_radii(body);
    const ra::DiagramPoint f = ra::f_map(t);
    std::cout << "family " << ra::to_string(spec) << '\n';
    print_radii_table(ra::expected_radii(spec), t);
    std::cout << "f = " << point_string(f) << "  " << ra::to_string(ra::classify(f)) << '\n';
    if (!o.out.empty()) ra::save_body(body, o.out);
    if (!o.render.empty()) write_text(o.render, ra::render_svg(body, t));
    if (o.companions) {
        const ra::Companions c = ra::min_max_companions(spec);
        std::cout << "companions: " << (c.note.empty() ? "none" : c.note) << '\n';
        const std::pair<const char*, const std::optional<ra::ArcPolygon>*> items[] = {{"min", &c.min_body}, {"max", &c.max_body}};
        for (const auto& [name, b] : items) {
            if (!*b) {
                std::cout << "  " << name << ": none\n";
                continue;
            }
            std::cout << "  " << name << ": f = " << point_string(ra::f_map(**b)) << '\n';
            if (!o.out.empty()) ra::save_body(**b, o.out + "." + name + ".json");
        }
    }
    return 0;
}

ra::DiagramPoint target(const Options& o) { return {o.xyz.at(0), o.xyz.at(1), o.xyz.at(2)}; }

int cmd_map(const Options& o) {
    const ra::DiagramPoint f = ra::f_map(ra::load_body(o.body));
    std::cout << fmt(f.x) << ' ' << fmt(f.y) << ' ' << fmt(f.z) << ' ' << ra::to_string(ra::classify(f, o.tol)) << '\n';
    return 0;
}

int cmd_check(const Options& o) {
    const ra::SlackVector s = ra::eval_slacks(target(o));
    bool member = s.domain_ok;
    for (ra::Ineq i : ra::kAllIneqs) {
        const bool ok = s[i] >= -o.tol;
        member = member && ok;
        std::cout << ra::ineq_name(i) << ' ' << fmt(s[i]) << (ok ? "" : "  violated") << '\n';
    }
    if (!s.domain_ok) std::cout << "domain: " << s.domain_note << '\n';
    std::cout << (member ? "member" : "non-member") << '\n';
    return member ? 0 : 1;
}

int cmd_classify(const Options& o) {
    const ra::SkeletonLabel label = ra::classify(target(o), o.tol);
    std::cout << ra::to_string(label) << '\n';
    std::string tight;
    for (ra::Ineq i : label.tight) tight += (tight.empty() ? "" : ",") + ra::ineq_name(i);
    std::cout << "tight: " << (tight.empty() ? "none" : tight) << '\n';
    return label.kind == ra::SkeletonKind::Outside ? 1 : 0;
}

int cmd_sample(const Options& o) {
    const auto mesh = ra::sample_boundary(o.resolution, o.jobs, o.tol);
    std::ofstream out(o.out);
    if (!out) throw ra::IoError("cannot write " + o.out);
    out.imbue(std::locale::classic());
    ra::write_mesh_csv(mesh, out);
    if (!out) throw ra::IoError("write failed for " + o.out);
    std::cout << mesh.size() << " samples written to " << o.out << '\n';
    return 0;
}

int cmd_witness(const Options& o) {
    const ra::Witness w = ra::synthesize_witness(target(o), o.tol);
    ra::save_body(w.body, o.out);
    if (!o.render.empty()) write_text(o.render, ra::render_svg(w.body, ra::compute_radii(w.body)));
    std::cout << "family " << ra::to_string(w.spec) << '\n';
    std::cout << "achieved " << point_string(w.achieved) << "  error " << fmt(w.error) << '\n';
    return 0;
}

int cmd_project2d(const Options& o) {
    if (!(o.R > 0.0) || o.r < 0.0 || o.D <= 0.0) throw ra::DomainError("project2d needs r >= 0, D > 0 and R > 0");
    const auto p = ra::check_2d_projection(o.r, o.D, o.R);
    static const char* names[] = {"2R - D", "D - r - R", "D - sqrt3 R", "r - D^2 sqrt(4R^2 - D^2) / (2R (2R + sqrt(4R^2 - D^2)))"};
    bool member = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        member = member && p[k] >= -1e-12;
        std::cout << names[k] << " = " << fmt(p[k]) << '\n';
    }
    if (!member) {
        std::cout << "outside the 2D projection\n";
        return 1;
    }
    const ra::WEnvelope e = ra::w_envelopes(o.r, o.D, o.R);
    std::cout << "w in [" << fmt(e.w_lower) << ", " << fmt(e.w_upper) << "]\n";
    return 0;
}

int cmd_verify(const Options& o) {
    ra::VerifyOptions v;
    v.level = ra::parse_verify_level(o.level);
    v.seed = o.seed;
    v.jobs = o.jobs;
    bool ok = true;
    for (const auto& r : ra::run_acceptance(v, std::cout)) ok = ok && r.pass;
    std::cout << (ok ? "all criteria passed" : "some criteria failed") << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radii atlas: inradius, width, diameter and circumradius of planar convex bodies"};
    app.require_subcommand(1);
    Options o;
    o.tol = ra::default_tolerance();
    int (*action)(const Options&) = nullptr;

    auto* radii = app.add_subcommand("radii", "radii and certificates of a body");
    radii->add_option("--body", o.body, "body JSON file")->required();
    radii->add_option("--oracle", o.oracle_n, "also run the brute-force oracle with N boundary samples")->check(CLI::Range(8, 10000000));
    radii->callback([&] { action = cmd_radii; });

    auto* family = app.add_subcommand("family", "construct a named family member");
    family->add_option("spec", o.spec, "family spec, e.g. bpen:r=0.70,gamma=1.00")->required();
    family->add_option("--out", o.out, "write the body JSON");
    family->add_option("--render", o.render, "write an SVG figure");
    family->add_flag("--companions", o.companions, "report the minimal and maximal companions");
    family->callback([&] { action = cmd_family; });

    auto* diagram = app.add_subcommand("diagram", "diagram queries");
    diagram->require_subcommand(1);
    auto* map = diagram->add_subcommand("map", "diagram coordinates of a body");
    map->add_option("--body", o.body, "body JSON file")->required();
    map->add_option("--tol", o.tol, "classification tolerance")->check(CLI::PositiveNumber);
    map->callback([&] { action = cmd_map; });
    auto* check = diagram->add_subcommand("check", "slacks of the nine inequalities at a point");
    check->add_option("xyz", o.xyz, "X Y Z")->expected(3)->required();
    check->add_option("--tol", o.tol, "membership tolerance")->check(CLI::PositiveNumber);
    check->callback([&] { action = cmd_check; });
    auto* classify = diagram->add_subcommand("classify", "skeleton label of a point");
    classify->add_option("xyz", o.xyz, "X Y Z")->expected(3)->required();
    classify->add_option("--tol", o.tol, "classification tolerance")->check(CLI::PositiveNumber);
    classify->callback([&] { action = cmd_classify; });
    auto* sample = diagram->add_subcommand("sample", "sample the boundary into a CSV mesh");
    sample->add_option("--resolution", o.resolution, "samples per parameter axis")->required()->check(CLI::Range(2, 1000));
    sample->add_option("--out", o.out, "CSV output")->required();
    sample->add_option("--jobs", o.jobs, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
    sample->add_option("--tol", o.tol, "classification tolerance")->check(CLI::PositiveNumber);
    sample->callback([&] { action = cmd_sample; });
    auto* witness = diagram->add_subcommand("witness", "construct a body with the given diagram point");
    witness->add_option("xyz", o.xyz, "X Y Z")->expected(3)->required();
    witness->add_option("--out", o.out, "body JSON output")->required();
    witness->add_option("--render", o.render, "write an SVG figure");
    witness->add_option("--tol", o.tol, "target accuracy")->check(CLI::PositiveNumber);
    witness->callback([&] { action = cmd_witness; });

    auto* project = app.add_subcommand("project2d", "check the (r, D) projection and bound w");
    project->add_option("r", o.r, "inradius")->required();
    project->add_option("D", o.D, "diameter")->required();
    project->add_option("--R", o.R, "circumradius");
    project->callback([&] { action = cmd_project2d; });

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--level", o.level, "smoke or full")->check(CLI::IsMember({"smoke", "full"}));
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--jobs", o.jobs, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
    verify->callback([&] { action = cmd_verify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action(o);
    } catch (const ra::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ra::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
