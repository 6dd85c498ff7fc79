#pragma once

#include "qalg/matrix.hpp"

#include <array>
#include <utility>

namespace qalg {

struct NotOnPluecker : std::domain_error {
    using std::domain_error::domain_error;
};

// Coordinate order for points of the Grassmannian G(2,4): the six pairs
// (1,2) (1,3) (1,4) (2,3) (2,4) (3,4) of projective coordinate indices.
inline constexpr std::array<std::pair<int, int>, 6> pluecker_pairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// p12 p34 - p13 p24 + p14 p23; zero exactly on decomposable tensors.
template <class T>
T pluecker_relation(const std::array<T, 6>& p) {
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

template <class T>
std::array<T, 6> pluecker_of_span(const std::array<T, 4>& u, const std::array<T, 4>& v) {
    std::array<T, 6> p = {T(), T(), T(), T(), T(), T()};
    for (size_t k = 0; k < 6; ++k) {
        auto [i, j] = pluecker_pairs[k];
        p[k] = u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)] -
               u[static_cast<size_t>(j)] * v[static_cast<size_t>(i)];
    }
    return p;
}

// Recovers a spanning pair of points for the line with the given Plücker
// coordinates.  Uses rows k and l of the antisymmetric matrix m (m[i][j] =
// p_{ij}), where m[k][l] is a unit; those rows lie in the span of the
// original pair and are independent.  Throws NotOnPluecker off the quadric
// and RankError when no coordinate is a verified unit.
template <class T>
std::pair<std::array<T, 4>, std::array<T, 4>> line_from_pluecker(const std::array<T, 6>& p,
                                                                 const T& zero) {
    if (!is_zero(pluecker_relation(p))) throw NotOnPluecker("point violates the Plücker relation");
    std::array<std::array<T, 4>, 4> m = {
        {{zero, zero, zero, zero},
         {zero, zero, zero, zero},
         {zero, zero, zero, zero},
         {zero, zero, zero, zero}}};
    for (size_t k = 0; k < 6; ++k) {
        auto [i, j] = pluecker_pairs[k];
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = p[k];
        m[static_cast<size_t>(j)][static_cast<size_t>(i)] = zero - p[k];
    }
    for (size_t k = 0; k < 6; ++k) {
        auto [i, j] = pluecker_pairs[k];
        if (is_zero(p[k]) || !try_inverse(p[k])) continue;
        return {m[static_cast<size_t>(i)], m[static_cast<size_t>(j)]};
    }
    bool any = false;
    for (const auto& c : p)
        if (!is_zero(c)) any = true;
    if (!any) throw NotOnPluecker("zero Plücker vector");
    throw RankError("no unit Plücker coordinate to pivot on");
}

} // namespace qalg
