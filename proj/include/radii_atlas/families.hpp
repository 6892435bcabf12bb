#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radii_atlas/diagram_point.hpp"
#include "radii_atlas/geometry.hpp"

namespace radii_atlas {

enum class FamilyId {
    Ball,
    Segment,
    EqT,
    ReT,
    RAT,
    SB,
    SRT,
    FRT,
    BT,
    HoodVertex,
    Iso,               // gamma
    RecT,              // r
    ReB,               // r
    Yamanouti,         // r
    CSB,               // gamma
    RSB,               // r
    SBoat,             // r, gamma
    BEq,               // r
    SliRT,             // r
    CSRT,              // gamma
    BTrap,             // gamma
    Hood,              // gamma
    BPen,              // r, gamma
    BIso,              // r, gamma
    Triangle,          // r, D
    Rounded,           // lambda, inner
    CompletionMix,     // lambda
    NonConcentricReB,  // r, shift
    GeneralSliced,     // r, rotation
};

struct FamilySpec {
    FamilyId id = FamilyId::Ball;
    std::vector<double> params;
    std::shared_ptr<const FamilySpec> inner;
};

FamilySpec make_spec(FamilyId id, std::vector<double> params = {});
FamilySpec make_rounded(const FamilySpec& inner, double lambda);

std::string family_name(FamilyId id);
std::vector<std::string> param_names(FamilyId id);
// Accepts e.g. "iso:gamma=0.9", "bpen:r=0.7,gamma=1.0", "rounded:inner=reb:r=0.6,lambda=0.3".
FamilySpec parse_family(const std::string& text);
std::string to_string(const FamilySpec& spec);

// Every constructed body has the unit circle as circumcircle, centered at the origin.
ArcPolygon construct(const FamilySpec& spec);

// Unset fields have no closed form.
struct ExpectedRadii {
    std::optional<double> r;
    std::optional<double> w;
    std::optional<double> D;
    std::optional<double> R;
};

ExpectedRadii expected_radii(const FamilySpec& spec);

enum class Sign { Tight, Strict, Artefact };

struct VertexRow {
    std::string name;
    FamilySpec spec;
    DiagramPoint point;
    std::array<Sign, 9> pattern{};
    std::array<double, 3> printed{};
};

std::vector<VertexRow> vertex_table();
std::string pattern_string(const std::array<Sign, 9>& pattern);

struct Companions {
    std::optional<ArcPolygon> min_body;
    std::optional<ArcPolygon> max_body;
    std::string note;
};

Companions min_max_companions(const FamilySpec& spec);

// Named constants and closed forms, all for circumradius 1.
namespace closed {

double hood_inradius();
// Radical expression for the hood inradius, read as (sqrt(s + x) + sqrt(16 / sqrt(s + x) - s - x)) / 2 - 1.
double hood_inradius_radicals();
double hood_gamma();
double bt_gamma();
double frt_inradius();
double srt_inradius();
double srt_width();
double csrt_gamma_min();

double iso_inradius(double gamma);
double iso_width(double gamma);
double iso_diameter(double gamma);
double btrap_inradius(double gamma);

// Width of the bent pentagon with inradius r and diameter D.
double bent_pentagon_width(double r, double D, double R = 1.0);
// Largest gamma for which both parallels of the bent pentagon support the inball.
double bent_pentagon_gamma_r(double r);
double bent_pentagon_gamma_min(double r);
double bent_pentagon_gamma_max(double r);

double slirt_width(double r);
// Shift of the non-concentric blossom center towards the top vertex.
double blossom_shift(double r);
// Width of the filled non-concentric blossom.
double filled_blossom_width(double r);

}  // namespace closed

}  // namespace radii_atlas
