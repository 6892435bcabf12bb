#include "radii_atlas/body_io.hpp"

#include <fstream>

namespace radii_atlas {

namespace {

nlohmann::json pt(Point p) { return nlohmann::json::array({p.x, p.y}); }

Point read_pt(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw DomainError("expected a point [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

double read_num(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) throw DomainError(std::string("missing numeric field '") + key + "'");
    return j[key].get<double>();
}

}  // namespace

nlohmann::json body_to_json(const ArcPolygon& body) {
    nlohmann::json els = nlohmann::json::array();
    for (const auto& e : body.elements) {
        if (const auto* s = std::get_if<Segment>(&e)) {
            els.push_back({{"type", "segment"}, {"a", pt(s->a)}, {"b", pt(s->b)}});
        } else {
            const auto& a = std::get<Arc>(e);
            els.push_back({{"type", "arc"},
                           {"center", pt(a.center)},
                           {"radius", a.radius},
                           {"normal_start", a.normal_start},
                           {"normal_end", a.normal_end}});
        }
    }
    return {{"degenerate", body.degenerate}, {"elements", els}};
}

ArcPolygon body_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        throw DomainError("body JSON needs an 'elements' array");
    ArcPolygon body;
    if (j.contains("degenerate")) {
        if (!j["degenerate"].is_boolean()) throw DomainError("'degenerate' must be a boolean");
        body.degenerate = j["degenerate"].get<bool>();
    }
    for (const auto& e : j["elements"]) {
        if (!e.is_object() || !e.contains("type") || !e["type"].is_string()) throw DomainError("element needs a 'type'");
        const std::string type = e["type"].get<std::string>();
        if (type == "segment") {
            if (!e.contains("a") || !e.contains("b")) throw DomainError("segment needs 'a' and 'b'");
            body.elements.emplace_back(Segment{read_pt(e["a"]), read_pt(e["b"])});
        } else if (type == "arc") {
            if (!e.contains("center")) throw DomainError("arc needs 'center'");
            Arc a{read_pt(e["center"]), read_num(e, "radius"), read_num(e, "normal_start"), read_num(e, "normal_end")};
            if (a.normal_end <= a.normal_start) a.normal_end += kTwoPi;
            body.elements.emplace_back(a);
        } else {
            throw DomainError("unknown element type '" + type + "'");
        }
    }
    return body;
}

ArcPolygon load_body(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return body_from_json(j);
}

void save_body(const ArcPolygon& body, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << body_to_json(body).dump(2) << "\n";
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace radii_atlas
