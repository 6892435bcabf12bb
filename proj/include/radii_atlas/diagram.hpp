#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "radii_atlas/diagram_point.hpp"
#include "radii_atlas/families.hpp"
#include "radii_atlas/geometry.hpp"
#include "radii_atlas/radii.hpp"

namespace radii_atlas {

enum class Ineq { lb1, lb2, lb3, ib1, ib2, ib3, ub1, ub2, ub3 };

constexpr std::array<Ineq, 9> kAllIneqs = {Ineq::lb1, Ineq::lb2, Ineq::lb3, Ineq::ib1, Ineq::ib2,
                                           Ineq::ib3, Ineq::ub1, Ineq::ub2, Ineq::ub3};

std::string ineq_name(Ineq i);
Ineq parse_ineq(const std::string& name);

// Residuals in length units divided by R; nonnegative means satisfied.
struct SlackVector {
    std::array<double, 9> s{};
    // (4R^2 - D^2) D^4 <= 4 w^2 R^4 as 4 w^2 R^4 - (4R^2 - D^2) D^4, divided by R^6.
    double lb2_polynomial = 0.0;
    // Trigonometric minus algebraic right-hand side of lb3, divided by R.
    double lb3_form_gap = 0.0;
    bool domain_ok = true;
    std::string domain_note;

    double operator[](Ineq i) const { return s[static_cast<std::size_t>(i)]; }
    double min() const;
};

DiagramPoint f_map(const ArcPolygon& body);
DiagramPoint f_map(const RadiiTuple& t);

SlackVector eval_slacks(double r, double w, double D, double R);
SlackVector eval_slacks(const DiagramPoint& p);

// Right-hand sides of the nonlinear bounds on w.
double lb2_bound(double D, double R = 1.0);
double lb3_bound(double r, double D, double R = 1.0);
double lb3_bound_algebraic(double r, double D, double R = 1.0);
double ub2_bound(double r, double D, double R = 1.0);
double ub3_bound(double r, double D, double R = 1.0);
double steinhagen_coefficient(double D, double R = 1.0);

// lb3 equality is attained only where 8r >= 3D; elsewhere it degenerates to 0 = 0.
bool lb3_attainable(double r, double D, double tol);

// Tight set at tolerance tol, with lb3 dropped outside its attainable region.
std::vector<Ineq> tight_set(const SlackVector& s, double r, double D, double tol);

struct WEnvelope {
    double w_lower = 0.0;
    double w_upper = 0.0;
};

WEnvelope w_envelopes(double r, double D, double R = 1.0);

// Residuals of 2R - D >= 0, D - r - R >= 0, D - sqrt(3) R >= 0 and the r-D-R bound, each divided by R.
std::array<double, 4> check_2d_projection(double r, double D, double R = 1.0);

enum class SkeletonKind { Interior, Facet, Edge, Vertex, Outside };

struct SkeletonLabel {
    SkeletonKind kind = SkeletonKind::Interior;
    std::string name;
    std::vector<Ineq> tight;
    std::vector<Ineq> violated;
};

std::string to_string(const SkeletonLabel& label);

// Default 1e-6, overridden by RADII_ATLAS_TOL.
double default_tolerance();
SkeletonLabel classify(const DiagramPoint& p, double tol = default_tolerance());

struct EdgeFamily {
    std::string name;
    std::string from;
    std::string to;
    std::array<Ineq, 2> tight;
    // t in [0, 1] from the first vertex to the second.
    std::function<FamilySpec(double)> at;
};

const std::vector<EdgeFamily>& edge_catalog();

struct FacetPatch {
    Ineq facet;
    std::string description;
    std::function<FamilySpec(double, double)> at;
};

const std::vector<FacetPatch>& facet_catalog();

struct MeshSample {
    DiagramPoint point;
    SkeletonLabel label;
    FamilySpec spec;
    Ineq facet;
};

// resolution x resolution parameter samples per facet patch.
std::vector<MeshSample> sample_boundary(int resolution, int jobs = 0, double tol = default_tolerance());
void write_mesh_csv(const std::vector<MeshSample>& mesh, std::ostream& out);

class Unsupported : public DomainError {
public:
    using DomainError::DomainError;
};

struct Witness {
    ArcPolygon body;
    FamilySpec spec;
    DiagramPoint achieved;
    double error = 0.0;
};

// Throws DomainError for non-member targets and Unsupported when no chart reaches the target.
Witness synthesize_witness(const DiagramPoint& target, double tol = 1e-6);

// Runs f over items on up to jobs threads (0 means hardware concurrency).
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f);

}  // namespace radii_atlas
