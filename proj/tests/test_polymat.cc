#include "qalg/matrix.hpp"
#include "qalg/parse.hpp"
#include "qtest.hpp"

#include <random>

using namespace qalg;

namespace {

std::mt19937_64 rng(20240517);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

MPoly<Rat> random_poly(const VarSetPtr& vars, int max_terms = 3, unsigned max_exp = 2) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<unsigned> ex(0, max_exp);
    MPoly<Rat> p(vars);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Mono m;
        for (int v = 0; v < vars->count(); ++v) m.set_exp(v, ex(rng));
        p += MPoly<Rat>::term(vars, m, random_rat());
    }
    return p;
}

Mat<MPoly<Rat>> random_mat(const VarSetPtr& vars, int n) {
    Mat<MPoly<Rat>> m(n, n, MPoly<Rat>(vars));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(vars);
    return m;
}

} // namespace

int main() {
    auto V3 = make_varset({"x", "y", "z"});
    auto V2 = make_varset({"x", "y"});
    auto V1 = make_varset({"t"});

    QT_TEST("determinant is alternating and multilinear");
    for (int trial = 0; trial < 30; ++trial) {
        Mat<MPoly<Rat>> m = random_mat(V3, 3);
        MPoly<Rat> d = det_cofactor(m);

        // Swapping two rows negates the determinant.
        Mat<MPoly<Rat>> sw = m;
        for (int j = 0; j < 3; ++j) std::swap(sw.at(0, j), sw.at(2, j));
        QT_EQ(det_cofactor(sw), MPoly<Rat>(V3) - d);

        // A repeated row kills it.
        Mat<MPoly<Rat>> rep = m;
        for (int j = 0; j < 3; ++j) rep.at(1, j) = rep.at(0, j);
        QT_CHECK(det_cofactor(rep).is_zero());

        // Linearity in row 1: row = a*u + b*v splits.
        Rat a = random_rat(), b = random_rat();
        Mat<MPoly<Rat>> mu = m, mv = m, mc = m;
        for (int j = 0; j < 3; ++j) {
            MPoly<Rat> u = random_poly(V3), v = random_poly(V3);
            mu.at(1, j) = u;
            mv.at(1, j) = v;
            mc.at(1, j) = a * u + b * v;
        }
        QT_EQ(det_cofactor(mc), a * det_cofactor(mu) + b * det_cofactor(mv));
    }

    QT_TEST("Bareiss matches cofactor on scalar matrices");
    {
        for (int trial = 0; trial < 50; ++trial) {
            int n = 4;
            Mat<Rat> s(n, n, Rat(0));
            Mat<MPoly<Rat>> m(n, n, MPoly<Rat>(V1));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rat r = random_rat();
                    s.at(i, j) = r;
                    m.at(i, j) = MPoly<Rat>(V1, r);
                }
            MPoly<Rat> d = det_cofactor(m);
            Rat expect = d.is_zero() ? Rat(0) : d.terms()[0].second;
            QT_EQ(det_bareiss(s), expect);
        }
        // Zero pivot exercises the swap-search fallback.
        Mat<Rat> z(3, 3, Rat(0));
        z.at(0, 1) = 1;
        z.at(1, 1) = 2;
        z.at(2, 2) = 5;
        QT_EQ(det_bareiss(z), Rat(0));
        Mat<Rat> p(3, 3, Rat(0));
        p.at(0, 1) = 1;
        p.at(1, 0) = 1;
        p.at(2, 2) = 7;
        QT_EQ(det_bareiss(p), Rat(-7));
    }

    QT_TEST("Bareiss over rational functions");
    {
        RatFunc al = RatFunc::alpha();
        Mat<RatFunc> m(2, 2, RatFunc(0));
        m.at(0, 0) = al;
        m.at(0, 1) = RatFunc(1);
        m.at(1, 0) = RatFunc(1);
        m.at(1, 1) = al;
        QT_EQ(det_bareiss(m), al * al - RatFunc(1));

        Mat<RatFunc> p(3, 3, RatFunc(0));
        p.at(0, 1) = al;
        p.at(1, 0) = RatFunc(1) / al;
        p.at(2, 2) = al + RatFunc(2);
        // One row swap: det = -(alpha * (1/alpha) * (alpha + 2)).
        QT_EQ(det_bareiss(p), RatFunc(0) - (al + RatFunc(2)));
    }

    QT_TEST("minor counts");
    {
        Mat<MPoly<Rat>> big(10, 8, MPoly<Rat>(V1, Rat(1)));
        QT_EQ(enumerate_minors(big, 8).size(), size_t(45));
        Mat<MPoly<Rat>> mid(6, 4, MPoly<Rat>(V1, Rat(1)));
        QT_EQ(enumerate_minors(mid, 4).size(), size_t(15));
        auto trivial = enumerate_minors(mid, 0);
        QT_EQ(trivial.size(), size_t(1));
        QT_EQ(trivial[0].minor, MPoly<Rat>(V1, Rat(1)));
        QT_CHECK(trivial[0].rows.empty());
    }

    QT_TEST("minor values and subset order");
    {
        auto x = MPoly<Rat>::variable(V2, 0), y = MPoly<Rat>::variable(V2, 1);
        Mat<MPoly<Rat>> m(3, 2, MPoly<Rat>(V2));
        m.at(0, 0) = x;
        m.at(0, 1) = y;
        m.at(1, 0) = y;
        m.at(1, 1) = x;
        m.at(2, 0) = MPoly<Rat>(V2, Rat(1));
        m.at(2, 1) = x;
        auto minors = enumerate_minors(m, 2);
        QT_EQ(minors.size(), size_t(3));
        QT_CHECK(minors[0].rows == (std::vector<int>{0, 1}));
        QT_CHECK(minors[1].rows == (std::vector<int>{0, 2}));
        QT_CHECK(minors[2].rows == (std::vector<int>{1, 2}));
        QT_EQ(minors[0].minor, x * x - y * y);
        QT_EQ(minors[1].minor, x * x - y);
        QT_EQ(minors[2].minor, y * x - x);

        Mat<MPoly<Rat>> sq = random_mat(V2, 4);
        auto full = enumerate_minors(sq, 4);
        QT_EQ(full.size(), size_t(1));
        QT_EQ(full[0].minor, det_cofactor(sq));
    }

    QT_TEST("null space annihilates and completes the rank");
    for (int trial = 0; trial < 20; ++trial) {
        // Rows are combinations of three generators, so rank <= 3.
        int rows = 6, cols = 8;
        std::vector<std::vector<Rat>> gen(3, std::vector<Rat>(static_cast<size_t>(cols)));
        for (auto& g : gen)
            for (auto& x : g) x = random_rat();
        Mat<Rat> m(rows, cols, Rat(0));
        for (int i = 0; i < rows; ++i)
            for (int g = 0; g < 3; ++g) {
                Rat c = random_rat();
                for (int j = 0; j < cols; ++j)
                    m.at(i, j) += c * gen[static_cast<size_t>(g)][static_cast<size_t>(j)];
            }
        int r = rank(m);
        QT_CHECK(r <= 3);
        auto basis = null_space(m);
        QT_EQ(static_cast<int>(basis.size()) + r, cols);
        for (const auto& v : basis)
            for (int i = 0; i < rows; ++i) {
                Rat acc(0);
                for (int j = 0; j < cols; ++j) acc += m.at(i, j) * v[static_cast<size_t>(j)];
                QT_CHECK(qalg::is_zero(acc));
            }
    }

    QT_TEST("rref pivots are leftmost and deterministic");
    {
        Mat<Rat> m(2, 4, Rat(0));
        m.at(0, 1) = 2;
        m.at(0, 3) = 4;
        m.at(1, 1) = 1;
        m.at(1, 2) = 5;
        auto piv = rref(m);
        QT_CHECK(piv == (std::vector<int>{1, 2}));
        QT_EQ(m.at(0, 1), Rat(1));
        QT_EQ(m.at(0, 2), Rat(0));
        QT_EQ(m.at(1, 2), Rat(1));
        auto basis = null_space(m);
        QT_EQ(basis.size(), size_t(2));
        // Free columns 0 and 3, in that order, each carrying the unit.
        QT_EQ(basis[0][0], Rat(1));
        QT_EQ(basis[1][3], Rat(1));
    }

    QT_TEST("ring echelon pivots only on units");
    {
        // t^2 = 4 gives zero divisors t - 2 and t + 2.
        auto ring = tower_adjoin_sqrt(tower_base<Rat>(), Rat(4), "t");
        auto t = TElem<Rat>::generator(ring, "t");
        TElem<Rat> one(ring, Rat(1)), zero(ring);

        // Column 0 offers no unit pivot, but eliminating through column 1
        // wipes the rest out since (t + 2)(t - 2) = 0.
        Mat<TElem<Rat>> m(2, 2, zero);
        m.at(0, 0) = t - one * Rat(2);
        m.at(0, 1) = one;
        m.at(1, 1) = t + one * Rat(2);
        auto ech = ring_echelon(m);
        QT_EQ(ech.rank, 1);
        QT_CHECK(ech.certified);
        QT_CHECK(ech.pivot_cols == (std::vector<int>{1}));

        // Diagonal of zero divisors: nothing certifiable.
        Mat<TElem<Rat>> d(2, 2, zero);
        d.at(0, 0) = t - one * Rat(2);
        d.at(1, 1) = t + one * Rat(2);
        auto bad = ring_echelon(d);
        QT_EQ(bad.rank, 0);
        QT_CHECK(!bad.certified);
        QT_THROWS(ring_null_space(d, zero, one), RankError);
    }

    QT_TEST("ring null space over a field extension");
    {
        auto ring = tower_adjoin_sqrt(tower_base<Rat>(), Rat(-1), "i");
        auto i = TElem<Rat>::generator(ring, "i");
        TElem<Rat> one(ring, Rat(1)), zero(ring);

        // Rows [1, i, 0, 0] and [0, 0, 1, -i] plus dependent copies.
        Mat<TElem<Rat>> m(4, 4, zero);
        m.at(0, 0) = one;
        m.at(0, 1) = i;
        m.at(1, 2) = one;
        m.at(1, 3) = -i;
        m.at(2, 0) = i;
        m.at(2, 1) = -one;
        m.at(3, 2) = i * Rat(3);
        m.at(3, 3) = one * Rat(3);
        auto basis = ring_null_space(m, zero, one);
        QT_EQ(basis.size(), size_t(2));
        for (const auto& v : basis)
            for (int r = 0; r < 4; ++r) {
                TElem<Rat> acc = zero;
                for (int c = 0; c < 4; ++c) acc += m.at(r, c) * v[static_cast<size_t>(c)];
                QT_CHECK(acc.is_zero());
            }
    }

    QT_TEST("echelon after substitution");
    {
        auto x = MPoly<Rat>::variable(V2, 0), y = MPoly<Rat>::variable(V2, 1);
        Mat<MPoly<Rat>> m(2, 2, MPoly<Rat>(V2));
        m.at(0, 0) = x;
        m.at(0, 1) = y;
        m.at(1, 0) = y;
        m.at(1, 1) = x;
        auto ring = tower_base<Rat>();
        auto conv = [&](const Rat& c) { return TElem<Rat>(ring, c); };
        std::vector<TElem<Rat>> diag = {TElem<Rat>(ring, Rat(1)), TElem<Rat>(ring, Rat(1))};
        QT_EQ(echelon_at(m, std::span<const TElem<Rat>>(diag), conv).rank, 1);
        std::vector<TElem<Rat>> gen = {TElem<Rat>(ring, Rat(1)), TElem<Rat>(ring, Rat(2))};
        QT_EQ(echelon_at(m, std::span<const TElem<Rat>>(gen), conv).rank, 2);
    }

    QT_TEST("shape errors");
    {
        Mat<MPoly<Rat>> m(2, 3, MPoly<Rat>(V1, Rat(1)));
        QT_THROWS(det_cofactor(m), NotSquare);
        QT_THROWS(enumerate_minors(m, 4), SizeError);
        Mat<Rat> s(2, 3, Rat(1));
        QT_THROWS(det_bareiss(s), NotSquare);
    }

    return qtest::summary();
}
