#pragma once

#include "qalg/ncalg.hpp"

namespace qalg {

struct NotInInvariantRing : std::domain_error {
    using std::domain_error::domain_error;
};

// u1..u4, v1..v4 in that order (block mask 0x0F selects the u's).
VarSetPtr uv_varset();
// N12, N13, N14, N23, N24, N34.
VarSetPtr n_varset();
// M12, M13, M14, M23, M24, M34.
VarSetPtr m_varset();

// [M^(u) | M^(v)]: the dual relation matrix with z_i replaced by u_i in the
// left block and by v_i in the right block.
struct DoubledMatrix {
    VarSetPtr uv;
    Mat<MPoly<RatFunc>> m;  // 10 x 8 for a 6-relation algebra
};
DoubledMatrix build_doubled_matrix(const KoszulDual& kd);

// A degree-4 polynomial in the N_ij, reduced modulo the syzygy
// N12*N34 - N13*N24 + N14*N23 (normal form under grevlex N12 > ... > N34).
struct NQuartic {
    MPoly<RatFunc> poly;
};

// N12*N34 - N13*N24 + N14*N23, which expands to zero in k[u,v].
MPoly<RatFunc> n_syzygy();
// P = M12*M34 - M13*M24 + M14*M23.
MPoly<RatFunc> pluecker_poly();

// The 126 degree-4 monomials in the N_ij (grevlex-descending) and the integer
// matrix expanding each into the 1225-dimensional bidegree (4,4) slice of
// k[u,v] under N_ij -> u_i v_j - u_j v_i.
const std::vector<Mono>& n_degree4_monomials();
Mat<Rat> n_expansion_matrix();

// Substitution N_ij -> u_i v_j - u_j v_i.
MPoly<RatFunc> expand_n(const MPoly<RatFunc>& npoly);

// Express a bidegree (4,4) polynomial in the N_ij.  Solves the linear system
// over the 126 N-monomials and returns the normal form modulo the syzygy;
// the round trip through expand_n must reproduce the input exactly.
NQuartic rewrite_in_N(const MPoly<RatFunc>& minor);

// N12 -> M34, N13 -> -M24, N14 -> M23, N23 -> M14, N24 -> -M13, N34 -> M12.
MPoly<RatFunc> orthogonality_map(const NQuartic& q);

// The 45 quartics in the M_ij (one per 8x8 minor of the doubled matrix, in
// row-subset order) together with the Pluecker polynomial.
struct LineSchemeSystem {
    std::vector<MPoly<RatFunc>> quartics;
    MPoly<RatFunc> pluecker;
};
LineSchemeSystem line_scheme_system(const QuadAlgebra& alg);

}  // namespace qalg
