#pragma once

#include "qalg/canonical.hpp"
#include "qalg/ncalg.hpp"

namespace qalg {

struct VerificationFailure : std::runtime_error {
    int generator_index;
    VerificationFailure(const std::string& what, int gen)
        : std::runtime_error(what), generator_index(gen) {}
};
struct NonUniqueImage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The 4x4 minors of the relation matrix, content-stripped, monic under
// grevlex, and sorted by their text form.  A 6x4 matrix gives 15 of them.
std::vector<MPoly<RatFunc>> point_ideal(const QuadAlgebra& alg);

// Quadratic extensions of Q(alpha) housing all twenty points of the zero
// locus: i^2=-1, a^2=alpha, b^2=2, d^2=1-alpha^2, r1^2=-2(1+alpha),
// r2^2=-2(1-alpha).  The full ring is not a field (r1 r2 and d(1+alpha)
// agree up to sign once all three are present), but every coordinate
// computation below stays inside a subtower that is one.
TowerPtr<RatFunc> master_tower();

struct SchemePoint {
    std::string label;
    int family = -1;  // 0 for the coordinate points, 1..4 for the root families
    std::array<TElem<RatFunc>, 4> coords;
};

// The twenty solutions of the minor system, in closed form, each verified to
// kill all 15 generators exactly.  Families: coordinate points e1..e4;
// (l1, 1, l3, 1) with l1^2=-2(1+alpha), l3^2=2; (l1, -1, l3, 1) with
// l1^2=-2(1-alpha), l3^2=-2; (l1, l2, 0, 1) with l1^2=-2, l2^2=-1; and
// (0, l2, l3, 1) with alpha l2^2 + 2 l2 + alpha = 0, alpha l3^2 = -2 l2^2.
std::vector<SchemePoint> enumerate_points(const QuadAlgebra& alg);

// The second projective coordinate q' of the unique incidence pair (q, q'):
// fixing q in the first slot of each bilinear relation leaves a 6x4 linear
// system whose null space must be one-dimensional.
SchemePoint sigma(const QuadAlgebra& alg, const SchemePoint& q);

// Orbit pairs {i, j} of sigma on the point list, sorted; verifies that the
// image of every point is again on the list and that sigma is an involution.
std::vector<std::array<int, 2>> sigma_orbits(const QuadAlgebra& alg,
                                             const std::vector<SchemePoint>& pts);

template <class K>
bool coords_projectively_equal(const std::array<TElem<K>, 4>& p, const std::array<TElem<K>, 4>& q) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!(p[static_cast<size_t>(i)] * q[static_cast<size_t>(j)] -
                  p[static_cast<size_t>(j)] * q[static_cast<size_t>(i)])
                     .is_zero())
                return false;
    return true;
}

// Distinctness certificate: some cross product of the two coordinate vectors
// is a verified unit, which rules out proportionality in every residue field
// of the (possibly non-field) coefficient ring.
template <class K>
bool coords_distinct_certified(const std::array<TElem<K>, 4>& p, const std::array<TElem<K>, 4>& q) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (is_unit(p[static_cast<size_t>(i)] * q[static_cast<size_t>(j)] -
                        p[static_cast<size_t>(j)] * q[static_cast<size_t>(i)]))
                return true;
    return false;
}

template <class K>
bool points_pairwise_distinct(const std::vector<std::array<TElem<K>, 4>>& pts) {
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (!coords_distinct_certified(pts[i], pts[j])) return false;
    return true;
}

// Images of the point coordinates under alpha -> value.
std::vector<std::array<TElem<Rat>, 4>> specialize_points(const std::vector<SchemePoint>& pts,
                                                         const Rat& value);

} // namespace qalg
