#include "qalg/groebner.hpp"

#include "qalg/canonical.hpp"
#include "qalg/linescheme.hpp"
#include "qalg/pointscheme.hpp"
#include "qtest.hpp"

#include <random>

using namespace qalg;

namespace {

std::string fixture(const std::string& name) { return std::string(QALG_FIXTURE_DIR "/") + name; }

// Full S-polynomial check, independently of how the basis was built.
template <class K>
bool is_groebner(const GroebnerBasis<K>& gb) {
    const auto& g = gb.basis;
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) {
            auto [li, ci] = g[i].leading_term(gb.order);
            auto [lj, cj] = g[j].leading_term(gb.order);
            Mono l = lcm(li, lj);
            MPoly<K> s = MPoly<K>::term(g[i].vars(), l / li, inverse(ci)) * g[i] -
                         MPoly<K>::term(g[j].vars(), l / lj, inverse(cj)) * g[j];
            if (!normal_form(s, g, gb.order).is_zero()) return false;
        }
    return true;
}

template <class K>
bool is_interreduced(const GroebnerBasis<K>& gb) {
    const auto& g = gb.basis;
    for (size_t i = 0; i < g.size(); ++i) {
        if (!is_one(g[i].leading_term(gb.order).second)) return false;
        for (const auto& [m, c] : g[i].terms())
            for (size_t j = 0; j < g.size(); ++j)
                if (j != i && g[j].leading_term(gb.order).first.divides(m)) return false;
    }
    return true;
}

std::vector<MPoly<Rat>> at_alpha(const std::vector<MPoly<RatFunc>>& polys, long a) {
    std::vector<MPoly<Rat>> out;
    for (const auto& p : polys) out.push_back(specialize_alpha(p, Rat(a)));
    return out;
}

std::vector<MPoly<Rat>> line_system_at(const QuadAlgebra& A, long a) {
    LineSchemeSystem sys = line_scheme_system(A);
    std::vector<MPoly<RatFunc>> all = {sys.pluecker};
    for (const auto& q : sys.quartics) all.push_back(q);
    return at_alpha(all, a);
}

}  // namespace

int main() {
    MonomialOrder grevlex{MonomialOrder::grevlex};
    MonomialOrder grlex{MonomialOrder::grlex};
    MonomialOrder lex{MonomialOrder::lex};

    QT_TEST("one variable and single element");
    {
        VarSetPtr xv = make_varset({"x"});
        auto x2 = parse_poly<Rat>("x^2 - 1", xv);
        auto x1 = parse_poly<Rat>("x - 1", xv);
        GroebnerBasis<Rat> gb = buchberger<Rat>({x2, x1}, lex);
        QT_EQ(gb.basis.size(), size_t(1));
        QT_CHECK(gb.basis[0] == x1);

        GroebnerBasis<RatFunc> gp = buchberger<RatFunc>({pluecker_poly()}, grevlex);
        QT_EQ(gp.basis.size(), size_t(1));
        QT_CHECK(gp.basis[0] == pluecker_poly());

        GroebnerBasis<Rat> ge = buchberger<Rat>({MPoly<Rat>(xv)}, lex);
        QT_CHECK(ge.basis.empty());
        QT_CHECK(ideal_membership(MPoly<Rat>(xv), ge));
        QT_CHECK(!ideal_membership(x1, ge));
    }

    QT_TEST("membership basics");
    {
        VarSetPtr xy = make_varset({"x", "y"});
        GroebnerBasis<Rat> gb = buchberger<Rat>({parse_poly<Rat>("y", xy)}, lex);
        QT_CHECK(!ideal_membership(parse_poly<Rat>("x", xy), gb));
        QT_CHECK(ideal_membership(parse_poly<Rat>("x*y + y^2", xy), gb));
    }

    QT_TEST("random systems give reduced bases");
    {
        VarSetPtr xyz = make_varset({"x", "y", "z"});
        std::mt19937 rng(77);
        std::uniform_int_distribution<int> coeff(-3, 3);
        std::uniform_int_distribution<unsigned> ex(0, 2);
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<MPoly<Rat>> gens;
            for (int g = 0; g < 3; ++g) {
                MPoly<Rat> p(xyz);
                for (int t = 0; t < 4; ++t) {
                    Mono m;
                    m.set_exp(0, ex(rng));
                    m.set_exp(1, ex(rng));
                    m.set_exp(2, ex(rng));
                    p += MPoly<Rat>::term(xyz, m, Rat(coeff(rng)));
                }
                gens.push_back(p);
            }
            const MonomialOrder& ord = trial % 2 ? grevlex : grlex;
            GroebnerBasis<Rat> gb = buchberger(gens, ord);
            QT_CHECK(is_groebner(gb));
            QT_CHECK(is_interreduced(gb));
            for (const auto& p : gens) QT_CHECK(ideal_membership(p, gb));
            GroebnerBasis<Rat> again = buchberger(gens, ord);
            QT_EQ(gb.basis.size(), again.basis.size());
            for (size_t k = 0; k < gb.basis.size(); ++k) QT_CHECK(gb.basis[k] == again.basis[k]);
        }
    }

    QT_TEST("resource limit");
    {
        VarSetPtr xyz = make_varset({"x", "y", "z"});
        std::vector<MPoly<Rat>> gens = {parse_poly<Rat>("x^2 - y*z", xyz),
                                        parse_poly<Rat>("y^2 - x*z", xyz),
                                        parse_poly<Rat>("z^2 - x*y", xyz)};
        QT_THROWS(buchberger(gens, grevlex, {1}), ResourceLimit);
    }

    QT_TEST("hilbert data basics");
    {
        VarSetPtr v4 = make_varset({"x", "y", "z", "w"});
        GroebnerBasis<Rat> zero = buchberger<Rat>({}, grevlex);
        HilbertData h0 = hilbert_data(zero, 4);
        QT_EQ(h0.dimension, 3);
        QT_EQ(h0.degree, 1);

        GroebnerBasis<Rat> plane = buchberger<Rat>({parse_poly<Rat>("x", v4)}, grevlex);
        HilbertData hp = hilbert_data(plane, 4);
        QT_EQ(hp.dimension, 2);
        QT_EQ(hp.degree, 1);

        GroebnerBasis<Rat> unit = buchberger<Rat>({parse_poly<Rat>("x", v4), parse_poly<Rat>("y", v4),
                                                   parse_poly<Rat>("z", v4), parse_poly<Rat>("w", v4)},
                                                  grevlex);
        HilbertData hu = hilbert_data(unit, 4);
        QT_EQ(hu.dimension, -1);
        QT_EQ(hu.degree, 0);

        // Twisted cubic: dimension 1, degree 3.
        std::vector<MPoly<Rat>> cubic = {parse_poly<Rat>("x*z - y^2", v4),
                                         parse_poly<Rat>("x*w - y*z", v4),
                                         parse_poly<Rat>("y*w - z^2", v4)};
        HilbertData hc = hilbert_data(buchberger(cubic, grevlex), 4);
        QT_EQ(hc.dimension, 1);
        QT_EQ(hc.degree, 3);

        // One quadric in six variables: a hypersurface of degree 2.
        GroebnerBasis<RatFunc> gq = buchberger<RatFunc>({pluecker_poly()}, grevlex);
        HilbertData hq = hilbert_data(gq, 6);
        QT_EQ(hq.dimension, 4);
        QT_EQ(hq.degree, 2);

        QT_THROWS(hilbert_data(buchberger<Rat>({parse_poly<Rat>("x - 1", v4)}, lex), 4),
                  NotHomogeneous);
    }

    QuadAlgebra A = load_algebra(fixture("a_alpha.txt"));

    QT_TEST("point scheme dimension and degree");
    {
        std::vector<MPoly<RatFunc>> gens = point_ideal(A);
        for (long a : {3L, 5L}) {
            GroebnerBasis<Rat> gb = buchberger(at_alpha(gens, a), grevlex);
            QT_CHECK(is_groebner(gb));
            HilbertData h = hilbert_data(gb, 4);
            QT_EQ(h.dimension, 0);
            QT_EQ(h.degree, 20);
        }
        // Order independence of the Hilbert data.
        GroebnerBasis<Rat> gl = buchberger(at_alpha(gens, 3), grlex);
        HilbertData h = hilbert_data(gl, 4);
        QT_EQ(h.dimension, 0);
        QT_EQ(h.degree, 20);
    }

    QT_TEST("line scheme dimension and degree");
    {
        std::vector<MPoly<Rat>> sys3 = line_system_at(A, 3);
        QT_EQ(sys3.size(), size_t(46));
        GroebnerBasis<Rat> gb = buchberger(sys3, grevlex);
        HilbertData h = hilbert_data(gb, 6);
        QT_EQ(h.dimension, 1);
        QT_EQ(h.degree, 20);
        for (const auto& p : sys3) QT_CHECK(ideal_membership(p, gb));
        QT_CHECK(ideal_membership(parse_poly<Rat>("M13*M23^2*M24", m_varset()), gb));

        GroebnerBasis<Rat> gb5 = buchberger(line_system_at(A, 5), grevlex);
        HilbertData h5 = hilbert_data(gb5, 6);
        QT_EQ(h5.dimension, 1);
        QT_EQ(h5.degree, 20);
    }

    return qtest::summary();
}
