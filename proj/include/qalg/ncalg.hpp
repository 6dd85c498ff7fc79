#pragma once

#include "qalg/matrix.hpp"
#include "qalg/parse.hpp"
#include "qalg/pluecker.hpp"

#include <array>
#include <string>
#include <vector>

namespace qalg {

struct NotQuadratic : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankDeficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient tensor of a quadratic element: entry 4*i+j is the coefficient
// of x_{i+1} x_{j+1} (left factor first).
using RelTensor = std::array<RatFunc, 16>;

struct QuadAlgebra {
    VarSetPtr gens;
    bool over_alpha = false;
    std::vector<RelTensor> relations;
    int gen_count() const { return gens ? gens->count() : 0; }
};

// Line-oriented presentation text: `gens: x1 x2 x3 x4`, `field: Q` or
// `field: Q(alpha)`, then one `rel: lhs = rhs` per relation.  `#` starts a
// comment.  Exactly four generators; every relation must be purely quadratic.
QuadAlgebra parse_algebra(std::string_view text);
QuadAlgebra load_algebra(const std::string& path);

// Dot product of coefficient tensors; this is the bilinear pairing
// <z_i z_j, x_k x_l> = delta_ik delta_jl extended linearly.
RatFunc pair_tensors(const RelTensor& a, const RelTensor& b);

// The matrix M with linear entries such that M * (x1..x4)^T lists the
// relations: M[k][j] = sum_i c^k_{ij} x_i.
Mat<MPoly<RatFunc>> build_relation_matrix(const QuadAlgebra& alg);

struct KoszulDual {
    VarSetPtr zvars;
    std::vector<RelTensor> dual_relations;
    Mat<MPoly<RatFunc>> matrix_hat;
};

// Annihilator of the relation span under pair_tensors, echelonized; the dual
// of a 6-relation algebra on four generators has 10 relations.
KoszulDual koszul_dual(const QuadAlgebra& alg);

// Quotient of the 16-dimensional span of words x_i x_j by the relation span.
// The basis is the set of non-pivot words after row reduction with words
// ordered x1x1 > x1x2 > ... > x4x4; rewrite maps any word to the basis.
struct DegreeTwo {
    std::vector<int> basis;  // flat indices 4*i+j, ascending
    Mat<RatFunc> rewrite;    // basis.size() x 16
};
DegreeTwo degree_two_quotient(const QuadAlgebra& alg);

// Same construction one degree up: words x_i x_j x_k (flat index
// 16*i+4*j+k) modulo r*x_k and x_i*r for every relation r.
struct DegreeThree {
    std::vector<int> basis;
    Mat<RatFunc> rewrite;  // basis.size() x 64
};
DegreeThree degree_three_quotient(const QuadAlgebra& alg);

// The candidate normalizing sequence x2^2, x3^2, x3x4 + delta*x4x3,
// x1x2 + eps*x2x1 as coefficient tensors.
std::array<RelTensor, 4> normalizing_sequence_elements(const RatFunc& delta, const RatFunc& eps);

struct NormalizingReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Degree-wise normality of the sequence: in degree 3, x*n_m and n_m*x land
// in n_m*V + (earlier elements), resp. V*n_m + (earlier elements).
NormalizingReport check_normalizing_degreewise(const QuadAlgebra& alg, const RatFunc& delta,
                                               const RatFunc& eps);

// dim of the intersection, inside the degree-two quotient, of the span of
// the four normalizing-sequence images with the degree-two part of the right
// ideal of the line with Plücker coordinates p.  The line's right ideal is
// generated by the two linear forms vanishing on it.
template <class T, class Conv>
int ideal_intersection_dim(const DegreeTwo& a2, const std::array<RelTensor, 4>& seq,
                           const std::array<T, 6>& p, const T& zero, const T& one, Conv&& conv) {
    (void)one;
    auto [u, v] = line_from_pluecker(p, zero);
    Mat<T> span(2, 4, zero);
    for (int j = 0; j < 4; ++j) {
        span.at(0, j) = u[static_cast<size_t>(j)];
        span.at(1, j) = v[static_cast<size_t>(j)];
    }
    auto forms = ring_null_space(span, zero, one);
    if (forms.size() != 2) throw RankError("line does not have a 2-dimensional annihilator");

    const size_t nb = a2.basis.size();
    auto image_of = [&](const std::array<T, 16>& w) {
        std::vector<T> out(nb, zero);
        for (int m = 0; m < 16; ++m) {
            if (is_zero(w[static_cast<size_t>(m)])) continue;
            for (size_t b = 0; b < nb; ++b) {
                const RatFunc& c = a2.rewrite.at(static_cast<int>(b), m);
                if (!is_zero(c)) out[b] = out[b] + w[static_cast<size_t>(m)] * conv(c);
            }
        }
        return out;
    };

    std::vector<std::vector<T>> jvecs, kvecs;
    for (const auto& n : seq) {
        std::array<T, 16> w;
        for (int m = 0; m < 16; ++m) w[static_cast<size_t>(m)] = conv(n[static_cast<size_t>(m)]);
        jvecs.push_back(image_of(w));
    }
    for (const auto& f : forms)
        for (int j = 0; j < 4; ++j) {
            // (f . x) * x_j has coefficient f_i on the word x_i x_j.
            std::array<T, 16> w;
            for (int m = 0; m < 16; ++m) w[static_cast<size_t>(m)] = zero;
            for (int i = 0; i < 4; ++i) w[static_cast<size_t>(4 * i + j)] = f[static_cast<size_t>(i)];
            kvecs.push_back(image_of(w));
        }

    auto rank_of = [&](const std::vector<std::vector<T>>& rows) {
        Mat<T> m(static_cast<int>(rows.size()), static_cast<int>(nb), zero);
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < nb; ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
        auto ech = ring_echelon(std::move(m));
        if (!ech.certified) throw RankError("rank not certified over this coefficient ring");
        return ech.rank;
    };

    std::vector<std::vector<T>> all = jvecs;
    all.insert(all.end(), kvecs.begin(), kvecs.end());
    return rank_of(jvecs) + rank_of(kvecs) - rank_of(all);
}

} // namespace qalg
