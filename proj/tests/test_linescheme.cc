#include "qalg/linescheme.hpp"

#include "qalg/canonical.hpp"
#include "qalg/tower.hpp"
#include "qtest.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace qalg;

namespace {

std::string fixture(const std::string& name) { return std::string(QALG_FIXTURE_DIR "/") + name; }

// Rows as vectors of polynomials, compared projectively.
bool rows_proportional(const std::vector<MPoly<RatFunc>>& a, const std::vector<MPoly<RatFunc>>& b) {
    for (size_t k = 0; k < a.size(); ++k)
        for (size_t l = k + 1; l < a.size(); ++l)
            if (a[k] * b[l] != a[l] * b[k]) return false;
    // Reject the all-zero-versus-nonzero case.
    bool az = true, bz = true;
    for (const auto& p : a) az = az && p.is_zero();
    for (const auto& p : b) bz = bz && p.is_zero();
    return az == bz;
}

MPoly<RatFunc> swap_uv(const MPoly<RatFunc>& p) {
    std::vector<std::optional<MPoly<RatFunc>>> images;
    for (int i = 0; i < 4; ++i) images.emplace_back(MPoly<RatFunc>::variable(p.vars(), 4 + i));
    for (int i = 0; i < 4; ++i) images.emplace_back(MPoly<RatFunc>::variable(p.vars(), i));
    return p.substitute(images);
}

}  // namespace

int main() {
    QuadAlgebra A = load_algebra(fixture("a_alpha.txt"));
    RatFunc al = RatFunc::alpha();
    MonomialOrder ord{MonomialOrder::grevlex};
    VarSetPtr uv = uv_varset(), nv = n_varset(), mv = m_varset();

    KoszulDual kd = koszul_dual(A);
    DoubledMatrix dm = build_doubled_matrix(kd);

    QT_TEST("doubled matrix shape and blocks");
    {
        QT_EQ(dm.m.rows(), 10);
        QT_EQ(dm.m.cols(), 8);
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 4; ++j) {
                const auto& l = dm.m.at(i, j);
                const auto& r = dm.m.at(i, j + 4);
                if (!l.is_zero()) QT_CHECK(bidegree_check(l, 0x0F) == std::make_pair(1, 0));
                if (!r.is_zero()) QT_CHECK(bidegree_check(r, 0x0F) == std::make_pair(0, 1));
                QT_CHECK(swap_uv(l) == r);
            }
    }

    QT_TEST("doubled matrix rows");
    {
        // Expected rows, as the u-block only; the v-block is its relabeling.
        std::vector<std::vector<std::string>> expected = {
            {"alpha*u1", "u4", "u3", "0"},
            {"0", "u1", "0", "0"},
            {"-u3", "0", "u1", "0"},
            {"-u4", "0", "0", "u1"},
            {"u2", "0", "0", "0"},
            {"0", "alpha*u2 - 2*u4", "-2*u3", "alpha*u4"},
            {"0", "u3", "u2", "0"},
            {"0", "-u4", "0", "u2"},
            {"0", "0", "0", "u3"},
            {"0", "0", "u4", "0"},
        };
        std::vector<int> matched(10, -1);
        for (size_t e = 0; e < expected.size(); ++e) {
            std::vector<MPoly<RatFunc>> want;
            for (const auto& s : expected[e]) want.push_back(parse_poly<RatFunc>(s, uv));
            for (const auto& p : expected[e]) {
                std::string vs = p;
                for (auto& ch : vs)
                    if (ch == 'u') ch = 'v';
                want.push_back(parse_poly<RatFunc>(vs, uv));
            }
            for (int r = 0; r < 10; ++r) {
                std::vector<MPoly<RatFunc>> have;
                for (int c = 0; c < 8; ++c) have.push_back(dm.m.at(r, c));
                if (rows_proportional(want, have)) {
                    QT_EQ(matched[e], -1);
                    matched[e] = r;
                }
            }
            QT_CHECK(matched[e] >= 0);
        }
        std::sort(matched.begin(), matched.end());
        for (int r = 0; r < 10; ++r) QT_EQ(matched[static_cast<size_t>(r)], r);
    }

    QT_TEST("expansion matrix kernel");
    {
        QT_EQ(n_degree4_monomials().size(), size_t(126));
        Mat<Rat> e = n_expansion_matrix();
        QT_EQ(e.rows(), 35 * 35);
        QT_EQ(e.cols(), 126);
        // Sparse columns, then the Gram matrix; over the rationals E^T E has
        // the same null space as E.
        std::vector<std::vector<std::pair<int, Rat>>> cols(126);
        for (int j = 0; j < 126; ++j)
            for (int r = 0; r < e.rows(); ++r)
                if (!is_zero(e.at(r, j))) cols[static_cast<size_t>(j)].emplace_back(r, e.at(r, j));
        Mat<Rat> g(126, 126, Rat(0));
        for (int i = 0; i < 126; ++i)
            for (int j = i; j < 126; ++j) {
                Rat dot(0);
                auto a = cols[static_cast<size_t>(i)].begin(), ae = cols[static_cast<size_t>(i)].end();
                auto b = cols[static_cast<size_t>(j)].begin(), be = cols[static_cast<size_t>(j)].end();
                while (a != ae && b != be) {
                    if (a->first < b->first)
                        ++a;
                    else if (b->first < a->first)
                        ++b;
                    else
                        dot += (a++)->second * (b++)->second;
                }
                g.at(i, j) = dot;
                g.at(j, i) = dot;
            }
        QT_EQ(rank(g), 105);

        // The kernel is spanned by the quadratic multiples of the syzygy.
        MPoly<RatFunc> s = n_syzygy();
        int count = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = i; j < 6; ++j) {
                MPoly<RatFunc> q =
                    s * MPoly<RatFunc>::variable(nv, i) * MPoly<RatFunc>::variable(nv, j);
                QT_CHECK(expand_n(q).is_zero());
                ++count;
            }
        QT_EQ(count, 21);
    }

    QT_TEST("rewrite examples");
    {
        QT_CHECK(rewrite_in_N(MPoly<RatFunc>(uv)).poly.is_zero());

        MPoly<RatFunc> n12 = parse_poly<RatFunc>("u1*v2 - u2*v1", uv);
        NQuartic q = rewrite_in_N(n12.pow(4));
        QT_CHECK(q.poly == MPoly<RatFunc>::variable(nv, 0).pow(4));

        // Not bihomogeneous, wrong bidegree, and outside the invariant ring.
        QT_THROWS(rewrite_in_N(parse_poly<RatFunc>("u1^4*v1^4 + u1^3*v1^4", uv)),
                  NotBihomogeneous);
        QT_THROWS(rewrite_in_N(parse_poly<RatFunc>("u1^2*v1^2", uv)), NotInInvariantRing);
        QT_THROWS(rewrite_in_N(parse_poly<RatFunc>("u1^4*v1^4", uv)), NotInInvariantRing);
    }

    QT_TEST("rewrite round trip on random invariants");
    {
        std::mt19937 rng(20240817);
        std::uniform_int_distribution<int> pick(0, 125);
        std::uniform_int_distribution<int> coeff(-4, 4);
        const auto& monos = n_degree4_monomials();
        MPoly<RatFunc> s = n_syzygy();
        for (int trial = 0; trial < 10; ++trial) {
            MPoly<RatFunc> p(nv);
            for (int t = 0; t < 6; ++t) {
                int c = coeff(rng);
                if (c == 0) continue;
                p += MPoly<RatFunc>::term(nv, monos[static_cast<size_t>(pick(rng))],
                                          RatFunc(c) + (t == 0 ? al : RatFunc(0)));
            }
            NQuartic q = rewrite_in_N(expand_n(p));
            QT_CHECK(q.poly == normal_form(p, {s}, ord));
            QT_CHECK(expand_n(q.poly) == expand_n(p));
        }
    }

    QT_TEST("orthogonality map");
    {
        auto nvar = [&](int k) { return MPoly<RatFunc>::variable(nv, k); };
        auto mvar = [&](int k) { return MPoly<RatFunc>::variable(mv, k); };
        QT_CHECK(orthogonality_map({nvar(1) * nvar(4) * nvar(0) * nvar(5)}) ==
                 mvar(4) * mvar(1) * mvar(5) * mvar(0));
        QT_CHECK(orthogonality_map({nvar(4).pow(3) * nvar(1)}) == mvar(1).pow(3) * mvar(4));
        QT_CHECK(orthogonality_map({n_syzygy() * nvar(0) * nvar(5)}) ==
                 pluecker_poly() * mvar(5) * mvar(0));
    }

    QT_TEST("forty-five minors");
    {
        auto minors = enumerate_minors(dm.m, 8);
        QT_EQ(minors.size(), size_t(45));
        for (const auto& e : minors) {
            QT_CHECK(bidegree_check(e.minor, 0x0F) == std::make_pair(4, 4));
            QT_CHECK(swap_uv(e.minor) == e.minor);
        }
    }

    QT_TEST("line scheme golden match");
    {
        LineSchemeSystem sys = line_scheme_system(A);
        QT_EQ(sys.quartics.size(), size_t(45));
        QT_CHECK(sys.pluecker == pluecker_poly());

        auto golden = load_poly_list(fixture("appendix_5_2.txt"), mv);
        QT_EQ(golden.size(), size_t(46));
        QT_CHECK(golden[0] == sys.pluecker);

        auto canon = [&](const MPoly<RatFunc>& p) {
            MPoly<RatFunc> nf = normal_form(p, {sys.pluecker}, ord);
            return nf.is_zero() ? std::string("0") : to_string(monic(nf, ord), ord);
        };
        std::vector<std::string> got, want;
        for (const auto& q : sys.quartics) {
            QT_CHECK(q.is_zero() || q.total_degree() == 4);
            QT_CHECK(q.is_homogeneous());
            // Already reduced: the N-side normal form maps to the M-side one.
            QT_CHECK(normal_form(q, {sys.pluecker}, ord) == q);
            got.push_back(canon(q));
        }
        for (size_t k = 1; k < golden.size(); ++k) want.push_back(canon(golden[k]));
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        QT_CHECK(got == want);
    }

    QT_TEST("sample line on and off the scheme");
    {
        LineSchemeSystem sys = line_scheme_system(A);
        // The span of e1 and e2 has Pluecker coordinates (1,0,0,0,0,0) and
        // does not lie on the scheme.
        {
            std::vector<Rat> pt = {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
            bool nonzero = false;
            for (const auto& q : sys.quartics) {
                Rat v = specialize_alpha(q, Rat(3)).eval<Rat>(std::span<const Rat>(pt),
                                                              [](const Rat& c) { return c; });
                if (!is_zero(v)) nonzero = true;
            }
            QT_CHECK(nonzero);
        }
        // (i*a, 0, 0, 1, 0, 0) satisfies the quadric and every quartic.
        {
            auto r = tower_base<RatFunc>();
            r = tower_adjoin_sqrt(r, RatFunc(-1), "i");
            r = tower_adjoin_sqrt(r, RatFunc::alpha(), "a");
            using TE = TElem<RatFunc>;
            TE zero(r), one(r, RatFunc(1));
            TE ia = TE::generator(r, "i") * TE::generator(r, "a");
            std::vector<TE> pt = {ia, zero, zero, one, zero, zero};
            auto conv = [&](const RatFunc& c) { return TE(r, c); };
            QT_CHECK(sys.pluecker.eval<TE>(std::span<const TE>(pt), conv).is_zero());
            for (const auto& q : sys.quartics)
                QT_CHECK(q.eval<TE>(std::span<const TE>(pt), conv).is_zero());
        }
    }

    return qtest::summary();
}
