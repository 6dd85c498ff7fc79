#include "qalg/geometry.hpp"

#include "qalg/parse.hpp"
#include "qalg/pluecker.hpp"

#include <optional>
#include <set>

namespace qalg {

namespace {

using P = MPoly<RatFunc>;
using TE = TElem<RatFunc>;

P pderiv(const P& p, int v) {
    P r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m.exp(v);
        if (e == 0) continue;
        r += P::term(p.vars(), m / Mono::var(v), c * RatFunc(static_cast<long>(e)));
    }
    return r;
}

MPoly<Rat> at_alpha(const P& p, const Rat& value) {
    MPoly<Rat> r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Rat cv = specialize_alpha(c, value);
        if (!is_zero(cv)) r += MPoly<Rat>::term(p.vars(), m, cv);
    }
    return r;
}

// i^2 = -1, a^2 = alpha, b^2 = 2, d^2 = 1 - alpha^2: every square root the
// closed-form solver needs is a rational multiple of a product of these.
TowerPtr<RatFunc> iabd_tower() {
    RatFunc al = RatFunc::alpha();
    auto r = tower_base<RatFunc>();
    r = tower_adjoin_sqrt(r, RatFunc(-1), "i");
    r = tower_adjoin_sqrt(r, al, "a");
    r = tower_adjoin_sqrt(r, RatFunc(2), "b");
    r = tower_adjoin_sqrt(r, RatFunc(1) - al * al, "d");
    return r;
}

template <size_t N>
TE eval_tower(const P& p, const TowerPtr<RatFunc>& ring, const std::array<TE, N>& vals) {
    return p.eval(std::span<const TE>(vals.data(), N),
                  [&](const RatFunc& c) { return TE(ring, c); });
}

template <class T>
T det3(const std::array<T, 4>& r0, const std::array<T, 4>& r1, const std::array<T, 4>& r2,
       int c0, int c1, int c2) {
    auto m2 = [&](int i, int j) { return r1[size_t(i)] * r2[size_t(j)] - r1[size_t(j)] * r2[size_t(i)]; };
    return r0[size_t(c0)] * m2(c1, c2) - r0[size_t(c1)] * m2(c0, c2) + r0[size_t(c2)] * m2(c0, c1);
}

// Univariate polynomials over the coefficient field, stored low to high.
using UV = std::vector<RatFunc>;

void uv_trim(UV& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

UV uv_monic(UV f) {
    uv_trim(f);
    if (f.empty()) return f;
    RatFunc lc = f.back();
    for (auto& c : f) c = c / lc;
    return f;
}

UV uv_mod(UV f, const UV& g) {  // g monic, nonempty
    uv_trim(f);
    while (f.size() >= g.size()) {
        RatFunc q = f.back();
        size_t off = f.size() - g.size();
        for (size_t i = 0; i + 1 < g.size(); ++i) f[off + i] -= q * g[i];
        f.pop_back();
        uv_trim(f);
    }
    return f;
}

UV uv_gcd(UV a, UV b) {
    a = uv_monic(std::move(a));
    b = uv_monic(std::move(b));
    while (!b.empty()) {
        UV r = uv_mod(std::move(a), b);
        a = std::move(b);
        b = uv_monic(std::move(r));
    }
    return a;
}

// Index of v when p is the bare variable M_v, else -1.
int single_variable(const P& p) {
    if (p.term_count() != 1) return -1;
    const auto& [m, c] = p.terms()[0];
    if (m.total_deg() != 1) return -1;
    for (int v = 0; v < p.vars()->count(); ++v)
        if (m.exp(v) == 1) return v;
    return -1;
}

bool proj_equal6(const std::array<TE, 6>& p, const std::array<TE, 6>& q) {
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = i + 1; j < 6; ++j)
            if (!(p[i] * q[j] - p[j] * q[i]).is_zero()) return false;
    return true;
}

// Zero locus empty in projective space, symbolically and at alpha = 3, 5.
bool empty_at_all(const std::vector<P>& gens, int nvars) {
    MonomialOrder ord;
    if (hilbert_data(buchberger(gens, ord), nvars).dimension != -1) return false;
    for (long av : {3L, 5L}) {
        std::vector<MPoly<Rat>> sp;
        for (const auto& f : gens) sp.push_back(at_alpha(f, Rat(av)));
        if (hilbert_data(buchberger(sp, ord), nvars).dimension != -1) return false;
    }
    return true;
}

std::vector<std::array<TE, 6>> intersect_pair(const LineComponent& A, const LineComponent& B,
                                              const TowerPtr<RatFunc>& ring) {
    VarSetPtr m = m_varset();
    TE zero(ring), one(ring, RatFunc(1));
    std::string pair_name = A.name + " and " + B.name;

    std::array<bool, 6> dead{};
    std::vector<const P*> rest_src;
    for (const auto* comp : {&A, &B})
        for (const auto& f : comp->defining) {
            int v = single_variable(f);
            if (v >= 0)
                dead[size_t(v)] = true;
            else
                rest_src.push_back(&f);
        }
    std::vector<std::optional<P>> images(6);
    for (int v = 0; v < 6; ++v)
        images[size_t(v)] = dead[size_t(v)] ? P(m) : P::variable(m, v);
    std::vector<P> rest;
    for (const P* f : rest_src) {
        P g = f->substitute(images);
        if (!g.is_zero()) rest.push_back(g);
    }
    std::vector<int> free_vars;
    for (int v = 0; v < 6; ++v)
        if (!dead[size_t(v)]) free_vars.push_back(v);

    std::vector<std::array<TE, 6>> pts;
    auto push = [&](int v, const TE& val, int w) {
        std::array<TE, 6> pt = {zero, zero, zero, zero, zero, zero};
        pt[size_t(v)] = val;
        if (w >= 0) pt[size_t(w)] = one;
        for (const auto& q : pts)
            if (proj_equal6(q, pt)) return;
        pts.push_back(pt);
    };

    if (free_vars.empty()) return pts;
    if (free_vars.size() == 1) {
        if (rest.empty()) push(free_vars[0], one, -1);
        // otherwise the forms only vanish at the origin: no projective point
    } else if (free_vars.size() == 2) {
        int vs = free_vars[0], vt = free_vars[1];
        if (rest.empty()) throw SolveFailure("entire line common to " + pair_name);
        bool at_s = true, at_t = true;  // roots (1,0) and (0,1)
        for (const auto& q : rest)
            for (const auto& [mono, c] : q.terms()) {
                if (mono.total_deg() != mono.exp(vs) + mono.exp(vt))
                    throw SolveFailure("dead variable survives in " + pair_name);
                if (mono.exp(vt) == 0) at_s = false;
                if (mono.exp(vs) == 0) at_t = false;
            }
        if (at_s) push(vs, one, -1);
        if (at_t) push(vt, one, -1);
        // interior roots: strip the axes, dehomogenize u = vs/vt, take gcds
        UV g;
        bool first = true;
        for (const auto& q : rest) {
            unsigned lo = 0, hi = 0;
            bool seen = false;
            for (const auto& [mono, c] : q.terms()) {
                unsigned e = mono.exp(vs);
                lo = seen ? std::min(lo, e) : e;
                hi = seen ? std::max(hi, e) : e;
                seen = true;
            }
            UV f(hi - lo + 1, RatFunc(0));
            for (const auto& [mono, c] : q.terms()) f[mono.exp(vs) - lo] = c;
            g = first ? uv_monic(std::move(f)) : uv_gcd(std::move(g), std::move(f));
            first = false;
        }
        if (g.size() == 2) {
            push(vs, TE(ring, -g[0]), vt);
        } else if (g.size() == 3) {
            RatFunc disc = g[1] * g[1] - RatFunc(4) * g[0];
            auto root = sqrt_in_tower(ring, disc);
            if (!root) throw SolveFailure("discriminant escapes the tower for " + pair_name);
            RatFunc half = RatFunc(1) / RatFunc(2);
            push(vs, half * (TE(ring, -g[1]) + *root), vt);
            push(vs, half * (TE(ring, -g[1]) - *root), vt);
        } else if (g.size() > 3) {
            throw SolveFailure("gcd degree " + std::to_string(g.size() - 1) + " for " + pair_name);
        }
    } else {
        throw SolveFailure(std::to_string(free_vars.size()) + " free coordinates for " + pair_name);
    }

    for (const auto& pt : pts)
        for (const auto* comp : {&A, &B})
            for (const auto& f : comp->defining)
                if (!eval_tower(f, ring, pt).is_zero())
                    throw SolveFailure("candidate point misses " + comp->name);
    return pts;
}

bool infinite_family_through(const std::array<TE, 4>& coords) {
    int j = -1;
    for (int k = 0; k < 4; ++k)
        if (!coords[size_t(k)].is_zero()) {
            if (j >= 0) return false;  // not a coordinate point
            j = k;
        }
    if (j < 0) return false;
    MonomialOrder ord;
    for (const auto& comp : line_components()) {
        VarSetPtr prm = comp.params;
        std::array<P, 4> ej = {P(prm), P(prm), P(prm), P(prm)};
        ej[size_t(j)] = P(prm, RatFunc(1));
        std::vector<P> quot;
        if (!comp.constraint.is_zero()) quot.push_back(monic(comp.constraint, ord));
        bool incident = true;
        for (int drop = 0; drop < 4 && incident; ++drop) {
            std::array<int, 3> cols{};
            for (int c = 0, k = 0; c < 4; ++c)
                if (c != drop) cols[size_t(k++)] = c;
            P d = det3(comp.family[0], comp.family[1], ej, cols[0], cols[1], cols[2]);
            if (!quot.empty()) d = normal_form(d, quot, ord);
            if (!d.is_zero()) incident = false;
        }
        if (!incident) continue;
        // the family itself must be (at least) a curve's worth of lines
        int dim;
        if (comp.constraint.is_zero()) {
            std::set<int> used;
            for (const auto& row : comp.family)
                for (const auto& entry : row)
                    for (const auto& [mono, c] : entry.terms())
                        for (int v = 0; v < prm->count(); ++v)
                            if (mono.exp(v) > 0) used.insert(v);
            dim = static_cast<int>(used.size()) - 1;
        } else {
            dim = hilbert_data(buchberger(std::vector<P>{comp.constraint}, ord), prm->count())
                      .dimension;
        }
        if (dim >= 1) return true;
    }
    return false;
}

} // namespace

const std::vector<LineComponent>& line_components() {
    static const std::vector<LineComponent> table = [] {
        VarSetPtr m = m_varset();
        VarSetPtr prm = make_varset({"s", "t", "u"});
        auto mp = [&](const char* text) { return parse_poly<RatFunc>(text, m); };
        auto fp = [&](const char* text) { return parse_poly<RatFunc>(text, prm); };
        auto rows = [&](const char* a1, const char* a2, const char* a3, const char* a4,
                        const char* b1, const char* b2, const char* b3, const char* b4) {
            return std::array<std::array<P, 4>, 2>{
                std::array<P, 4>{fp(a1), fp(a2), fp(a3), fp(a4)},
                std::array<P, 4>{fp(b1), fp(b2), fp(b3), fp(b4)}};
        };
        std::vector<LineComponent> t;
        t.push_back({"L1",
                     {mp("M13"), mp("M24"), mp("M12*M34 + M14*M23"),
                      mp("M12^2 + M14^2 + alpha*M23^2 - 2*M23*M34 + alpha*M34^2")},
                     4,
                     prm,
                     rows("s", "0", "1", "0", "0", "t", "0", "1"),
                     fp("(s^2 + alpha)*(t^2 + 1) + 2*t")});
        t.push_back({"L2",
                     {mp("M14"), mp("M23"), mp("M12*M34 - M13*M24"),
                      mp("M12^2 + 2*M24^2 + alpha*M34^2")},
                     4,
                     prm,
                     rows("s", "0", "0", "1", "0", "1", "t", "0"),
                     fp("alpha*t^2 + s^2 + 2")});
        t.push_back({"L3",
                     {mp("M23"), mp("M24"), mp("M34"), mp("M12^3 - M13^2*M14 + M12*M14^2")},
                     3,
                     prm,
                     rows("0", "s", "t", "u", "1", "0", "0", "0"),
                     fp("s^3 - t^2*u + s*u^2")});
        t.push_back({"L4",
                     {mp("M12"), mp("M14"), mp("M24"),
                      mp("M13^2*M23 - alpha*M23^2*M34 + 2*M23*M34^2 - alpha*M34^3")},
                     3,
                     prm,
                     rows("s", "t", "0", "u", "0", "0", "1", "0"),
                     fp("s^2*t + alpha*t^2*u + 2*t*u^2 + alpha*u^3")});
        t.push_back({"L5a",
                     {mp("M12"), mp("M13"), mp("M23"), mp("M34")},
                     1,
                     prm,
                     rows("s", "t", "0", "0", "0", "0", "0", "1"),
                     P(prm)});
        t.push_back({"L5b",
                     {mp("M12"), mp("M13"), mp("M23"), mp("M14^2 + 2*M24^2 + alpha*M34^2")},
                     2,
                     prm,
                     rows("s", "t", "u", "0", "0", "0", "0", "1"),
                     fp("s^2 + 2*t^2 + alpha*u^2")});
        t.push_back({"L6a",
                     {mp("M12"), mp("M13"), mp("M14"), mp("M34")},
                     1,
                     prm,
                     rows("0", "1", "0", "0", "0", "0", "s", "t"),
                     P(prm)});
        t.push_back({"L6b",
                     {mp("M13"), mp("M14"), mp("M34"), mp("M12^2 + alpha*M23^2 + 2*M24^2")},
                     2,
                     prm,
                     rows("s", "0", "t", "u", "0", "1", "0", "0"),
                     fp("s^2 + alpha*t^2 + 2*u^2")});
        return t;
    }();
    return table;
}

ComponentReport verify_components(const QuadAlgebra& alg) {
    MonomialOrder ord;
    LineSchemeSystem sys = line_scheme_system(alg);
    std::vector<P> system;
    system.reserve(sys.quartics.size() + 1);
    system.push_back(sys.pluecker);
    for (const auto& q : sys.quartics) system.push_back(q);

    ComponentReport rep;
    rep.ok = true;
    for (const auto& comp : line_components()) {
        ComponentCheck chk;
        chk.name = comp.name;

        // Every line of the family maps into the scheme: compose the system
        // with the family's Pluecker image and reduce by the constraint.
        std::vector<std::optional<P>> images(6);
        for (size_t k = 0; k < 6; ++k) {
            auto [i, j] = pluecker_pairs[k];
            images[k] = comp.family[0][size_t(i)] * comp.family[1][size_t(j)] -
                        comp.family[0][size_t(j)] * comp.family[1][size_t(i)];
        }
        std::vector<P> quot;
        if (!comp.constraint.is_zero()) quot.push_back(monic(comp.constraint, ord));
        for (const auto& q : system) {
            P im = q.substitute(images);
            if (!quot.empty()) im = normal_form(im, quot, ord);
            if (!im.is_zero()) throw MembershipFailure(comp.name, to_string(q, ord));
        }
        chk.family_in_scheme = true;

        // Ideal-level inclusion plus Hilbert dimension and degree, at two
        // generic specializations that must agree.
        int dim = -2, deg = 0;
        bool agree = true;
        for (long av : {3L, 5L}) {
            std::vector<MPoly<Rat>> gens;
            for (const auto& f : comp.defining) gens.push_back(at_alpha(f, Rat(av)));
            auto gb = buchberger(gens, ord);
            for (const auto& q : system)
                if (!ideal_membership(at_alpha(q, Rat(av)), gb))
                    throw MembershipFailure(comp.name, to_string(q, ord));
            HilbertData hd = hilbert_data(gb, 6);
            if (dim == -2) {
                dim = hd.dimension;
                deg = hd.degree;
            } else {
                agree = agree && dim == hd.dimension && deg == hd.degree;
            }
        }
        chk.system_in_ideal = true;
        chk.dimension = dim;
        chk.degree = deg;
        rep.total_degree += deg;
        rep.ok = rep.ok && agree && dim == 1 && deg == comp.degree;
        rep.checks.push_back(std::move(chk));
    }
    rep.ok = rep.ok && rep.total_degree == 20;
    return rep;
}

IntersectionTable pairwise_intersections() {
    IntersectionTable tab;
    tab.ring = iabd_tower();
    const auto& comps = line_components();
    for (size_t a = 0; a < comps.size(); ++a)
        for (size_t b = a + 1; b < comps.size(); ++b) {
            PairIntersection pi;
            pi.a = static_cast<int>(a);
            pi.b = static_cast<int>(b);
            pi.points = intersect_pair(comps[a], comps[b], tab.ring);
            tab.pairs.push_back(std::move(pi));
        }
    for (const auto& pr : tab.pairs)
        for (const auto& pt : pr.points) {
            bool seen = false;
            for (const auto& q : tab.distinct_points)
                if (proj_equal6(pt, q)) {
                    seen = true;
                    break;
                }
            if (!seen) tab.distinct_points.push_back(pt);
        }
    return tab;
}

IncidenceReport lines_through_point(const QuadAlgebra& alg, const SchemePoint& p) {
    IncidenceReport rep;
    rep.label = p.label;
    const TowerPtr<RatFunc>& ring = p.coords[0].ring();
    TE zero(ring), one(ring, RatFunc(1));
    const std::array<TE, 4>& c = p.coords;
    auto basis = [&](int j) {
        std::array<TE, 4> r = {zero, zero, zero, zero};
        r[size_t(j)] = one;
        return r;
    };

    if (p.family == 0) {
        rep.infinite = infinite_family_through(c);
        return rep;
    }

    // The finite lists from the incidence proofs: each span visibly contains
    // p (as row1 + row2, or as a combination with a basis vector).
    std::vector<std::pair<std::array<TE, 4>, std::array<TE, 4>>> spans;
    switch (p.family) {
    case 1:
    case 2:
        spans = {{{c[0], zero, c[2], zero}, {zero, c[1], zero, c[3]}},
                 {{c[0], zero, zero, c[3]}, {zero, c[1], c[2], zero}},
                 {basis(0), {zero, c[1], c[2], c[3]}},
                 {basis(2), {c[0], c[1], zero, c[3]}},
                 {basis(3), {c[0], c[1], c[2], zero}},
                 {basis(1), {c[0], zero, c[2], c[3]}}};
        break;
    case 3:
        spans = {{basis(0), {zero, c[1], zero, c[3]}},
                 {{c[0], zero, zero, c[3]}, basis(1)},
                 {basis(2), c},
                 {c, basis(3)}};
        break;
    case 4:
        spans = {{{zero, c[1], zero, c[3]}, basis(2)},
                 {{zero, c[1], c[2], zero}, basis(3)},
                 {basis(0), c},
                 {c, basis(1)}};
        break;
    default:
        throw UnknownPoint("no line family data for " + p.label);
    }

    LineSchemeSystem sys = line_scheme_system(alg);
    std::vector<P> system;
    system.push_back(sys.pluecker);
    for (const auto& q : sys.quartics) system.push_back(q);

    for (const auto& [r1, r2] : spans) {
        IncidentLine ln;
        ln.row1 = r1;
        ln.row2 = r2;
        ln.pluecker = pluecker_of_span(r1, r2);
        bool unit = false;
        for (const auto& x : ln.pluecker)
            if (is_unit(x)) {
                unit = true;
                break;
            }
        if (!unit) throw SolveFailure("degenerate span at " + p.label);
        for (int drop = 0; drop < 4; ++drop) {
            std::array<int, 3> cols{};
            for (int cc = 0, k = 0; cc < 4; ++cc)
                if (cc != drop) cols[size_t(k++)] = cc;
            if (!det3(r1, r2, c, cols[0], cols[1], cols[2]).is_zero())
                throw SolveFailure("line misses " + p.label);
        }
        for (const auto& q : system)
            if (!eval_tower(q, ring, ln.pluecker).is_zero())
                throw MembershipFailure(p.label, to_string(q));
        for (const auto& comp : line_components()) {
            bool on = true;
            for (const auto& f : comp.defining)
                if (!eval_tower(f, ring, ln.pluecker).is_zero()) {
                    on = false;
                    break;
                }
            if (on) ln.components.push_back(comp.name);
        }
        rep.lines.push_back(std::move(ln));
    }

    for (size_t i = 0; i < rep.lines.size(); ++i)
        for (size_t j = i + 1; j < rep.lines.size(); ++j) {
            bool distinct = false;
            const auto& pi = rep.lines[i].pluecker;
            const auto& pj = rep.lines[j].pluecker;
            for (size_t x = 0; x < 6 && !distinct; ++x)
                for (size_t y = x + 1; y < 6 && !distinct; ++y)
                    if (is_unit(pi[x] * pj[y] - pi[y] * pj[x])) distinct = true;
            if (!distinct) throw SolveFailure("coincident lines at " + p.label);
        }
    return rep;
}

JacobianReport jacobian_checks() {
    JacobianReport rep;
    MonomialOrder ord;

    {  // the spatial elliptic curve: rank two everywhere on V(f1, g1)
        VarSetPtr v4 = make_varset({"M12", "M14", "M23", "M34"});
        P f1 = parse_poly<RatFunc>("M12*M34 + M14*M23", v4);
        P g1 = parse_poly<RatFunc>(
            "M12^2 + M14^2 + alpha*M23^2 - 2*M23*M34 + alpha*M34^2", v4);
        Mat<P> jac(2, 4, P(v4));
        for (int v = 0; v < 4; ++v) {
            jac.at(0, v) = pderiv(f1, v);
            jac.at(1, v) = pderiv(g1, v);
        }
        std::vector<P> gens = {f1, g1};
        std::vector<P> minors;
        for (auto& mn : enumerate_minors(jac, 2)) {
            minors.push_back(mn.minor);
            gens.push_back(std::move(mn.minor));
        }
        rep.j1_rank_locus_empty = empty_at_all(gens, 4);

        // explicit rank certificates: sweep the second family parameter and
        // adjoin the square root the first one needs
        for (long av : {3L, 5L}) {
            MPoly<Rat> f1s = at_alpha(f1, Rat(av)), g1s = at_alpha(g1, Rat(av));
            std::vector<MPoly<Rat>> ms;
            for (const auto& mn : minors) ms.push_back(at_alpha(mn, Rat(av)));
            int taken = 0;
            for (long zeta = 1; taken < 10 && zeta < 40; ++zeta) {
                Rat z(zeta);
                Rat rsq = -Rat(av) - Rat(2) * z / (z * z + 1);
                if (is_zero(rsq)) continue;
                auto tr = tower_adjoin_sqrt(tower_base<Rat>(), rsq, "g");
                TElem<Rat> g = TElem<Rat>::generator(tr, "g");
                TElem<Rat> zl(tr, z), o(tr, Rat(1));
                std::array<TElem<Rat>, 4> pt = {g * zl, g, -zl, o};
                auto ev = [&](const MPoly<Rat>& q) {
                    return q.eval(std::span<const TElem<Rat>>(pt.data(), 4),
                                  [&](const Rat& cc) { return TElem<Rat>(tr, cc); });
                };
                if (!ev(f1s).is_zero() || !ev(g1s).is_zero())
                    throw SolveFailure("sample point off the curve");
                for (const auto& mq : ms)
                    if (is_unit(ev(mq))) {
                        ++rep.j1_samples;
                        ++taken;
                        break;
                    }
            }
        }
    }

    {  // the rational curve: singular locus is exactly the basis point
        VarSetPtr v4 = make_varset({"M12", "M13", "M24", "M34"});
        P f2 = parse_poly<RatFunc>("M12*M34 - M13*M24", v4);
        P g2 = parse_poly<RatFunc>("M12^2 + 2*M24^2 + alpha*M34^2", v4);
        Mat<P> jac(2, 4, P(v4));
        for (int v = 0; v < 4; ++v) {
            jac.at(0, v) = pderiv(f2, v);
            jac.at(1, v) = pderiv(g2, v);
        }
        std::vector<P> gens = {f2, g2};
        for (auto& mn : enumerate_minors(jac, 2)) gens.push_back(std::move(mn.minor));

        // containment in {M12 = M24 = M34 = 0} certified by ideal membership
        bool member = true;
        {
            auto gb = buchberger(gens, ord);
            for (const char* s : {"M12^2", "M24^2", "M34^2"})
                member = member && ideal_membership(parse_poly<RatFunc>(s, v4), gb);
        }
        for (long av : {3L, 5L}) {
            std::vector<MPoly<Rat>> sp;
            for (const auto& f : gens) sp.push_back(at_alpha(f, Rat(av)));
            auto gb = buchberger(sp, ord);
            for (const char* s : {"M12^2", "M24^2", "M34^2"})
                member = member && ideal_membership(at_alpha(parse_poly<RatFunc>(s, v4), Rat(av)), gb);
        }
        std::array<RatFunc, 4> eps = {RatFunc(0), RatFunc(1), RatFunc(0), RatFunc(0)};
        auto ev = [&](const P& q) {
            return q.eval(std::span<const RatFunc>(eps.data(), 4),
                          [](const RatFunc& cc) { return cc; });
        };
        bool on = true;
        for (const auto& f : gens) on = on && ev(f).is_zero();
        rep.j2_singular_only_at_e2 = member && on;

        Mat<RatFunc> je(2, 4, RatFunc(0));
        for (int r = 0; r < 2; ++r)
            for (int v = 0; v < 4; ++v) je.at(r, v) = ev(jac.at(r, v));
        rep.j2_rank_at_e2 = rank(je);
    }

    {  // the planar cubics have nowhere-vanishing gradients
        VarSetPtr v3 = make_varset({"M12", "M13", "M14"});
        P h = parse_poly<RatFunc>("M12^3 - M13^2*M14 + M12*M14^2", v3);
        std::vector<P> gens = {h, pderiv(h, 0), pderiv(h, 1), pderiv(h, 2)};
        rep.l3_curve_smooth = empty_at_all(gens, 3);

        VarSetPtr w3 = make_varset({"M13", "M23", "M34"});
        P w = parse_poly<RatFunc>(
            "M13^2*M23 - alpha*M23^2*M34 + 2*M23*M34^2 - alpha*M34^3", w3);
        std::vector<P> wgens = {w, pderiv(w, 0), pderiv(w, 1), pderiv(w, 2)};
        rep.l4_curve_smooth = empty_at_all(wgens, 3);
    }

    {  // quadrics of the conic components and the rational curve: rank 3
        VarSetPtr m = m_varset();
        bool ranks = true;
        for (const char* s : {"M14^2 + 2*M24^2 + alpha*M34^2", "M12^2 + alpha*M23^2 + 2*M24^2",
                              "M12^2 + 2*M24^2 + alpha*M34^2"}) {
            P q = parse_poly<RatFunc>(s, m);
            Mat<RatFunc> gram(6, 6, RatFunc(0));
            RatFunc half = RatFunc(1) / RatFunc(2);
            for (const auto& [mono, cc] : q.terms()) {
                std::vector<int> vs;
                for (int v = 0; v < 6; ++v)
                    for (unsigned e = 0; e < mono.exp(v); ++e) vs.push_back(v);
                if (vs.size() != 2) throw SolveFailure("non-quadratic Gram input");
                if (vs[0] == vs[1]) {
                    gram.at(vs[0], vs[1]) += cc;
                } else {
                    gram.at(vs[0], vs[1]) += half * cc;
                    gram.at(vs[1], vs[0]) += half * cc;
                }
            }
            ranks = ranks && rank(gram) == 3;
        }
        rep.quadric_ranks_ok = ranks;
    }

    rep.ok = rep.j1_rank_locus_empty && rep.j1_samples >= 20 && rep.j2_singular_only_at_e2 &&
             rep.j2_rank_at_e2 == 1 && rep.l3_curve_smooth && rep.l4_curve_smooth &&
             rep.quadric_ranks_ok;
    return rep;
}

BirationalReport birational_check() {
    BirationalReport rep;
    MonomialOrder ord;
    auto ring = tower_base<RatFunc>();
    ring = tower_adjoin_sqrt(ring, RatFunc(-1), "i");
    ring = tower_adjoin_sqrt(ring, RatFunc::alpha(), "a");
    ring = tower_adjoin_sqrt(ring, RatFunc(2), "b");
    TE i = TE::generator(ring, "i");
    TE a = TE::generator(ring, "a");
    TE b = TE::generator(ring, "b");
    TE one(ring, RatFunc(1)), two = one + one, al(ring, RatFunc::alpha());
    using MP = MPoly<TE>;

    {  // forward: the parameter returns, after clearing denominators
        VarSetPtr tv = make_varset({"t"});
        MP t = MP::term(tv, Mono::var(0), one);
        MP u(tv, one);
        MP t2 = t * t;
        MP nx = MP(tv, a) * (u - t2);
        MP dx = MP(tv, two * b) * t;
        MP nz = u - t2;
        MP dz = MP(tv, i * b) * (u + t2);
        MP lhs = -(nx * (MP(tv, b) * nz + MP(tv, i) * dz));
        MP rhs = t * MP(tv, a) * nz * dx;
        rep.chi_after_delta = (lhs - rhs).is_zero();
    }

    {  // backward: both coordinates return modulo the curve relation
        VarSetPtr xz = make_varset({"x", "z"});
        MP x = MP::term(xz, Mono::var(0), one);
        MP z = MP::term(xz, Mono::var(1), one);
        MP nt = -(x * (MP(xz, b) * z + MP(xz, i)));
        MP dt = MP(xz, a) * z;
        MP curve = x * x + MP(xz, two) * x * x * z * z + MP(xz, al) * z * z;
        std::vector<MP> quot = {monic(curve, ord)};
        MP d2 = dt * dt, n2 = nt * nt;
        MP xdiff = MP(xz, a) * (d2 - n2) - MP(xz, two * b) * x * nt * dt;
        MP zdiff = (d2 - n2) - MP(xz, i * b) * z * (d2 + n2);
        rep.delta_after_chi_x = normal_form(xdiff, quot, ord).is_zero();
        rep.delta_after_chi_z = normal_form(zdiff, quot, ord).is_zero();
    }

    {  // a concrete parameter where every denominator is a unit
        auto rr = tower_base<Rat>();
        rr = tower_adjoin_sqrt(rr, Rat(-1), "i");
        rr = tower_adjoin_sqrt(rr, Rat(3), "a");
        rr = tower_adjoin_sqrt(rr, Rat(2), "b");
        using TR = TElem<Rat>;
        TR ri = TR::generator(rr, "i");
        TR ra = TR::generator(rr, "a");
        TR rb = TR::generator(rr, "b");
        TR o(rr, Rat(1)), t(rr, Rat(2));
        TR den1 = (o + o) * rb * t;
        TR den2 = ri * rb * (o + t * t);
        bool ok = is_unit(den1) && is_unit(den2);
        if (ok) {
            TR x0 = ra * (o - t * t) * inverse(den1);
            TR z0 = (o - t * t) * inverse(den2);
            TR on_curve = x0 * x0 + (o + o) * x0 * x0 * z0 * z0 + TR(rr, Rat(3)) * z0 * z0;
            ok = on_curve.is_zero() && is_unit(ra * z0);
            if (ok) {
                TR back = -(x0 * (rb * z0 + ri)) * inverse(ra * z0);
                ok = (back - t).is_zero();
            }
        }
        rep.sample_defined = ok;
    }

    rep.ok = rep.chi_after_delta && rep.delta_after_chi_x && rep.delta_after_chi_z &&
             rep.sample_defined;
    return rep;
}

} // namespace qalg
