#include "qalg/linescheme.hpp"

#include <algorithm>
#include <map>

namespace qalg {

namespace {

const std::array<std::array<int, 2>, 6> kPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

VarSetPtr shared_uv() {
    static VarSetPtr v = make_varset({"u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"});
    return v;
}
VarSetPtr shared_n() {
    static VarSetPtr v = make_varset({"N12", "N13", "N14", "N23", "N24", "N34"});
    return v;
}
VarSetPtr shared_m() {
    static VarSetPtr v = make_varset({"M12", "M13", "M14", "M23", "M24", "M34"});
    return v;
}

// All degree-d exponent tuples over n variables starting at `base`, in
// descending lexicographic order of the tuple.
void degree_monos(int base, int n, int d, Mono cur, std::vector<Mono>& out) {
    if (n == 1) {
        Mono m = cur;
        m.set_exp(base, static_cast<unsigned>(d));
        out.push_back(m);
        return;
    }
    for (int e = d; e >= 0; --e) {
        Mono m = cur;
        m.set_exp(base, static_cast<unsigned>(e));
        degree_monos(base + 1, n - 1, d - e, m, out);
    }
}

std::vector<Mono> degree_monos(int base, int n, int d) {
    std::vector<Mono> out;
    degree_monos(base, n, d, Mono{}, out);
    return out;
}

// Row reduction with a recorded transform: returns (R, T, pivots) with
// T * m = R and R in reduced row echelon form.
struct RrefTransform {
    Mat<Rat> r, t;
    std::vector<int> pivots;
};

RrefTransform rref_with_transform(Mat<Rat> m) {
    int rows = m.rows(), cols = m.cols();
    Mat<Rat> t(rows, rows, Rat(0));
    for (int i = 0; i < rows; ++i) t.at(i, i) = 1;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m.at(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) {
            for (int j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
            for (int j = 0; j < rows; ++j) std::swap(t.at(p, j), t.at(r, j));
        }
        Rat inv = rat_inverse(m.at(r, c));
        for (int j = 0; j < cols; ++j) m.at(r, j) *= inv;
        for (int j = 0; j < rows; ++j) t.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            Rat f = m.at(i, c);
            for (int j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
            for (int j = 0; j < rows; ++j) t.at(i, j) -= f * t.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(t), std::move(pivots)};
}

// Precomputed data for expressing bidegree (4,4) polynomials in the N_ij:
// the 126 N-monomials, the sparse columns of the 1225 x 126 expansion matrix
// E, and a solver for the normal equations E^T E c = E^T b.
struct NData {
    VarSetPtr uv, nv;
    std::vector<Mono> nmonos;
    std::map<uint64_t, int> row_of;
    size_t row_count = 0;
    std::vector<std::vector<std::pair<int, Rat>>> cols;
    RrefTransform gram;
};

const NData& ndata() {
    static const NData d = [] {
        NData nd;
        nd.uv = shared_uv();
        nd.nv = shared_n();

        std::vector<Mono> umonos = degree_monos(0, 4, 4);
        std::vector<Mono> vmonos = degree_monos(4, 4, 4);
        for (const auto& mu : umonos)
            for (const auto& mv : vmonos) {
                int idx = static_cast<int>(nd.row_of.size());
                nd.row_of.emplace((mu * mv).bits, idx);
            }
        nd.row_count = nd.row_of.size();

        nd.nmonos = degree_monos(0, 6, 4);
        MonomialOrder ord{MonomialOrder::grevlex};
        std::sort(nd.nmonos.begin(), nd.nmonos.end(),
                  [&](Mono a, Mono b) { return ord.greater(a, b); });

        std::array<MPoly<Rat>, 6> nimg;
        for (size_t k = 0; k < 6; ++k)
            nimg[k] = MPoly<Rat>::variable(nd.uv, kPairs[k][0]) *
                          MPoly<Rat>::variable(nd.uv, 4 + kPairs[k][1]) -
                      MPoly<Rat>::variable(nd.uv, kPairs[k][1]) *
                          MPoly<Rat>::variable(nd.uv, 4 + kPairs[k][0]);

        nd.cols.resize(nd.nmonos.size());
        for (size_t j = 0; j < nd.nmonos.size(); ++j) {
            MPoly<Rat> e(nd.uv, Rat(1));
            for (int k = 0; k < 6; ++k) e *= nimg[static_cast<size_t>(k)].pow(nd.nmonos[j].exp(k));
            for (const auto& [m, c] : e.terms())
                nd.cols[j].emplace_back(nd.row_of.at(m.bits), c);
            std::sort(nd.cols[j].begin(), nd.cols[j].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }

        int n = static_cast<int>(nd.nmonos.size());
        Mat<Rat> g(n, n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Rat dot(0);
                auto a = nd.cols[static_cast<size_t>(i)].begin(), ae = nd.cols[static_cast<size_t>(i)].end();
                auto b = nd.cols[static_cast<size_t>(j)].begin(), be = nd.cols[static_cast<size_t>(j)].end();
                while (a != ae && b != be) {
                    if (a->first < b->first)
                        ++a;
                    else if (b->first < a->first)
                        ++b;
                    else {
                        dot += a->second * b->second;
                        ++a;
                        ++b;
                    }
                }
                g.at(i, j) = dot;
                g.at(j, i) = dot;
            }
        nd.gram = rref_with_transform(std::move(g));
        return nd;
    }();
    return d;
}

}  // namespace

VarSetPtr uv_varset() { return shared_uv(); }
VarSetPtr n_varset() { return shared_n(); }
VarSetPtr m_varset() { return shared_m(); }

MPoly<RatFunc> n_syzygy() {
    VarSetPtr nv = shared_n();
    auto var = [&](int k) { return MPoly<RatFunc>::variable(nv, k); };
    return var(0) * var(5) - var(1) * var(4) + var(2) * var(3);
}

MPoly<RatFunc> pluecker_poly() {
    VarSetPtr mv = shared_m();
    auto var = [&](int k) { return MPoly<RatFunc>::variable(mv, k); };
    return var(0) * var(5) - var(1) * var(4) + var(2) * var(3);
}

DoubledMatrix build_doubled_matrix(const KoszulDual& kd) {
    VarSetPtr uv = shared_uv();
    std::vector<std::optional<MPoly<RatFunc>>> to_u, to_v;
    for (int i = 0; i < 4; ++i) {
        to_u.emplace_back(MPoly<RatFunc>::variable(uv, i));
        to_v.emplace_back(MPoly<RatFunc>::variable(uv, 4 + i));
    }
    const Mat<MPoly<RatFunc>>& hat = kd.matrix_hat;
    DoubledMatrix dm;
    dm.uv = uv;
    dm.m = Mat<MPoly<RatFunc>>(hat.rows(), 2 * hat.cols(), MPoly<RatFunc>(uv));
    for (int i = 0; i < hat.rows(); ++i)
        for (int j = 0; j < hat.cols(); ++j) {
            if (hat.at(i, j).is_zero()) continue;
            dm.m.at(i, j) = hat.at(i, j).substitute(to_u);
            dm.m.at(i, hat.cols() + j) = hat.at(i, j).substitute(to_v);
        }
    return dm;
}

const std::vector<Mono>& n_degree4_monomials() { return ndata().nmonos; }

Mat<Rat> n_expansion_matrix() {
    const NData& nd = ndata();
    Mat<Rat> e(static_cast<int>(nd.row_count), static_cast<int>(nd.nmonos.size()), Rat(0));
    for (size_t j = 0; j < nd.cols.size(); ++j)
        for (const auto& [r, c] : nd.cols[j]) e.at(r, static_cast<int>(j)) = c;
    return e;
}

MPoly<RatFunc> expand_n(const MPoly<RatFunc>& npoly) {
    VarSetPtr uv = shared_uv();
    std::vector<std::optional<MPoly<RatFunc>>> images;
    for (size_t k = 0; k < 6; ++k)
        images.emplace_back(MPoly<RatFunc>::variable(uv, kPairs[k][0]) *
                                MPoly<RatFunc>::variable(uv, 4 + kPairs[k][1]) -
                            MPoly<RatFunc>::variable(uv, kPairs[k][1]) *
                                MPoly<RatFunc>::variable(uv, 4 + kPairs[k][0]));
    if (npoly.is_zero()) return MPoly<RatFunc>(uv);
    return npoly.substitute(images);
}

NQuartic rewrite_in_N(const MPoly<RatFunc>& minor) {
    const NData& nd = ndata();
    if (minor.is_zero()) return {MPoly<RatFunc>(nd.nv)};
    if (bidegree_check(minor, 0x0F) != std::make_pair(4, 4))
        throw NotInInvariantRing("expected a bidegree (4,4) polynomial");

    std::map<int, RatFunc> b;
    for (const auto& [m, c] : minor.terms()) b.emplace(nd.row_of.at(m.bits), c);

    int n = static_cast<int>(nd.nmonos.size());
    std::vector<RatFunc> y(static_cast<size_t>(n), RatFunc(0));
    for (int j = 0; j < n; ++j)
        for (const auto& [r, c] : nd.cols[static_cast<size_t>(j)]) {
            auto it = b.find(r);
            if (it != b.end()) y[static_cast<size_t>(j)] = y[static_cast<size_t>(j)] + RatFunc(c) * it->second;
        }

    MPoly<RatFunc> q(nd.nv);
    for (size_t k = 0; k < nd.gram.pivots.size(); ++k) {
        RatFunc z(0);
        for (int j = 0; j < n; ++j) {
            const Rat& t = nd.gram.t.at(static_cast<int>(k), j);
            if (!is_zero(t) && !y[static_cast<size_t>(j)].is_zero())
                z = z + RatFunc(t) * y[static_cast<size_t>(j)];
        }
        if (!z.is_zero())
            q += MPoly<RatFunc>::term(nd.nv, nd.nmonos[static_cast<size_t>(nd.gram.pivots[k])], z);
    }

    MonomialOrder ord{MonomialOrder::grevlex};
    MPoly<RatFunc> nf = normal_form(q, {n_syzygy()}, ord);
    if (!(expand_n(nf) == minor))
        throw NotInInvariantRing("polynomial is not a combination of the N_ij");
    return {nf};
}

MPoly<RatFunc> orthogonality_map(const NQuartic& q) {
    VarSetPtr mv = shared_m();
    if (q.poly.is_zero()) return MPoly<RatFunc>(mv);
    // N12, N13, N14, N23, N24, N34 -> M34, -M24, M23, M14, -M13, M12.
    std::vector<std::optional<MPoly<RatFunc>>> images;
    images.emplace_back(MPoly<RatFunc>::variable(mv, 5));
    images.emplace_back(-MPoly<RatFunc>::variable(mv, 4));
    images.emplace_back(MPoly<RatFunc>::variable(mv, 3));
    images.emplace_back(MPoly<RatFunc>::variable(mv, 2));
    images.emplace_back(-MPoly<RatFunc>::variable(mv, 1));
    images.emplace_back(MPoly<RatFunc>::variable(mv, 0));
    return q.poly.substitute(images);
}

LineSchemeSystem line_scheme_system(const QuadAlgebra& alg) {
    KoszulDual kd = koszul_dual(alg);
    DoubledMatrix dm = build_doubled_matrix(kd);
    LineSchemeSystem sys;
    sys.pluecker = pluecker_poly();
    for (auto& e : enumerate_minors(dm.m, dm.m.cols()))
        sys.quartics.push_back(orthogonality_map(rewrite_in_N(e.minor)));
    return sys;
}

}  // namespace qalg
