#pragma once

#include "qalg/groebner.hpp"
#include "qalg/linescheme.hpp"
#include "qalg/pointscheme.hpp"

namespace qalg {

struct MembershipFailure : std::runtime_error {
    std::string component;
    std::string witness;
    MembershipFailure(std::string comp, std::string w)
        : std::runtime_error("component " + comp + " fails on " + w),
          component(std::move(comp)),
          witness(std::move(w)) {}
};
struct UnknownPoint : std::domain_error {
    using std::domain_error::domain_error;
};
struct SolveFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One irreducible component of the zero locus of the 46-polynomial system:
// its ideal in the Plücker coordinates, the degree of the curve, and the
// family of lines in P^3 it parametrizes, given as two spanning rows over
// the parameters s, t, u with an optional polynomial constraint.
struct LineComponent {
    std::string name;
    std::vector<MPoly<RatFunc>> defining;  // over m_varset()
    int degree = 0;
    VarSetPtr params;
    std::array<std::array<MPoly<RatFunc>, 4>, 2> family;
    MPoly<RatFunc> constraint;  // zero polynomial when the family is free
};

// The eight components, in the fixed order L1, L2, L3, L4, L5a, L5b, L6a,
// L6b, with degrees 4, 4, 3, 3, 1, 2, 1, 2.
const std::vector<LineComponent>& line_components();

struct ComponentCheck {
    std::string name;
    bool family_in_scheme = false;  // symbolic: the parametrized lines kill all 46
    bool system_in_ideal = false;   // all 46 reduce to zero mod the component ideal
    int dimension = -1;                // Hilbert data of the component ideal
    int degree = 0;
};
struct ComponentReport {
    std::vector<ComponentCheck> checks;
    int total_degree = 0;
    bool ok = false;
};

// Per-component verification at the specializations alpha = 3 and 5 plus the
// symbolic family check; throws MembershipFailure with the witness
// polynomial when a reduction is nonzero.
ComponentReport verify_components(const QuadAlgebra& alg);

struct PairIntersection {
    int a = 0, b = 0;  // indices into line_components()
    std::vector<std::array<TElem<RatFunc>, 6>> points;
};
struct IntersectionTable {
    TowerPtr<RatFunc> ring;  // i^2 = -1, a^2 = alpha, b^2 = 2, d^2 = 1 - alpha^2
    std::vector<PairIntersection> pairs;  // all 28 unordered pairs
    std::vector<std::array<TElem<RatFunc>, 6>> distinct_points;
};

// Closed-form intersection of every pair of components.  Setting the
// monomial generators of both ideals to zero leaves at most a binary form
// system, which is solved exactly in the quadratic tower; every returned
// point is re-checked against both ideals.
IntersectionTable pairwise_intersections();

struct IncidentLine {
    std::array<TElem<RatFunc>, 4> row1, row2;  // spanning points of the line
    std::array<TElem<RatFunc>, 6> pluecker;
    std::vector<std::string> components;  // every component containing the image
};
struct IncidenceReport {
    std::string label;
    bool infinite = false;           // coordinate points lie on a full family
    std::vector<IncidentLine> lines;  // empty when infinite
};

// The lines of the scheme through one of the twenty points.  Coordinate
// points get the infinite-family certificate; the root-family points get
// their finite list (six lines for families 1 and 2, four for 3 and 4),
// with every line verified to contain the point, to kill all 46 system
// polynomials, and to be pairwise distinct by a unit cross product.
IncidenceReport lines_through_point(const QuadAlgebra& alg, const SchemePoint& p);

struct JacobianReport {
    bool j1_rank_locus_empty = false;  // rank <= 1 locus misses V(f1, g1)
    int j1_samples = 0;                // sampled points with a certified 2x2 unit minor
    bool j2_singular_only_at_e2 = false;
    int j2_rank_at_e2 = -1;
    bool l3_curve_smooth = false;  // the planar cubic of L3 has nowhere-zero gradient
    bool l4_curve_smooth = false;  // same for the planar cubic of L4
    bool quadric_ranks_ok = false;  // the three rank-three quadrics
    bool ok = false;
};

// Singularity bookkeeping for the component curves: emptiness certificates
// are Groebner-based (symbolic in alpha, re-checked at 3 and 5), the rank
// samples run over explicit square-root extensions of Q.
JacobianReport jacobian_checks();

struct BirationalReport {
    bool chi_after_delta = false;  // composition is the identity parameter
    bool delta_after_chi_x = false;  // both coordinates return, modulo the curve
    bool delta_after_chi_z = false;
    bool sample_defined = false;  // denominators are units at t = 2, alpha = 3
    bool ok = false;
};

// The rational parametrization of the localized rank-three-quadric curve
// x^2 + 2x^2z^2 + alpha z^2 = 0 and its inverse compose to the identity;
// verified exactly over the tower with i, a, b adjoined.
BirationalReport birational_check();

} // namespace qalg
