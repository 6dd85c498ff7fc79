#pragma once

#include "qalg/mpoly.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace qalg {

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotHomogeneous : std::domain_error {
    using std::domain_error::domain_error;
};

struct GroebnerOptions {
    long budget = 200000;  // S-polynomial reductions before giving up
};

template <class K>
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<MPoly<K>> basis;  // reduced: monic, interreduced, sorted by leading monomial
};

// Buchberger with the normal selection strategy (minimal lcm degree, then
// lowest pair indices) and the coprime-lcm and chain criteria.  Returns the
// reduced basis, which is unique for the ideal and order.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<MPoly<K>>& gens, const MonomialOrder& ord,
                            const GroebnerOptions& opt = {}) {
    std::vector<MPoly<K>> g;
    for (const auto& p : gens)
        if (!p.is_zero()) g.push_back(monic(p, ord));

    // Pending pairs keyed by (lcm degree, j, i) with i < j.
    struct Pair {
        unsigned deg;
        int j, i;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (j != o.j) return j < o.j;
            return i < o.i;
        }
    };
    std::set<Pair> pending;
    auto lead = [&](int k) { return g[static_cast<size_t>(k)].leading_term(ord).first; };
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i)
            pending.insert({lcm(lead(i), lead(j)).total_deg(), j, i});
    };
    for (int j = 0; j < static_cast<int>(g.size()); ++j) push_pairs(j);

    long reductions = 0;
    while (!pending.empty()) {
        auto [deg, j, i] = *pending.begin();
        pending.erase(pending.begin());
        Mono li = lead(i), lj = lead(j), l = lcm(li, lj);

        if ((li * lj) == l) continue;  // coprime leading monomials
        bool chained = false;
        for (int k = 0; k < static_cast<int>(g.size()) && !chained; ++k) {
            if (k == i || k == j || !lead(k).divides(l)) continue;
            Pair ik{lcm(li, lead(k)).total_deg(), std::max(i, k), std::min(i, k)};
            Pair jk{lcm(lj, lead(k)).total_deg(), std::max(j, k), std::min(j, k)};
            if (!pending.count(ik) && !pending.count(jk)) chained = true;
        }
        if (chained) continue;

        if (++reductions > opt.budget)
            throw ResourceLimit("S-pair budget exhausted after " + std::to_string(opt.budget) +
                                " reductions with " + std::to_string(g.size()) +
                                " basis elements and " + std::to_string(pending.size()) +
                                " pairs pending");
        const MPoly<K>&gi = g[static_cast<size_t>(i)], &gj = g[static_cast<size_t>(j)];
        MPoly<K> s = MPoly<K>::term(gi.vars(), l / li, K(1)) * gi -
                     MPoly<K>::term(gj.vars(), l / lj, K(1)) * gj;
        MPoly<K> r = normal_form(s, g, ord);
        if (r.is_zero()) continue;
        g.push_back(monic(r, ord));
        push_pairs(static_cast<int>(g.size()) - 1);
    }

    // Minimalize: drop elements whose leading term another one divides.
    std::vector<MPoly<K>> minimal;
    for (size_t a = 0; a < g.size(); ++a) {
        Mono la = g[a].leading_term(ord).first;
        bool redundant = false;
        for (size_t b = 0; b < g.size() && !redundant; ++b) {
            if (a == b) continue;
            Mono lb = g[b].leading_term(ord).first;
            if (lb.divides(la) && (lb != la || b < a)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[a]);
    }
    // Reduce each element modulo the others.
    GroebnerBasis<K> out;
    out.order = ord;
    for (size_t a = 0; a < minimal.size(); ++a) {
        std::vector<MPoly<K>> rest;
        for (size_t b = 0; b < minimal.size(); ++b)
            if (b != a) rest.push_back(minimal[b]);
        MPoly<K> r = normal_form(minimal[a], rest, ord);
        if (!r.is_zero()) out.basis.push_back(monic(r, ord));
    }
    std::sort(out.basis.begin(), out.basis.end(), [&](const MPoly<K>& x, const MPoly<K>& y) {
        return ord.greater(x.leading_term(ord).first, y.leading_term(ord).first);
    });
    return out;
}

template <class K>
bool ideal_membership(const MPoly<K>& p, const GroebnerBasis<K>& gb) {
    if (p.is_zero()) return true;
    if (gb.basis.empty()) return false;
    return normal_form(p, gb.basis, gb.order).is_zero();
}

struct HilbertData {
    int dimension = -1;              // projective dimension; -1 when empty
    int degree = 0;
    std::vector<Rat> hilbert_polynomial;  // in m, constant coefficient first
};

namespace detail {

// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/I for a monomial
// ideal I.  Coefficient vector, constant first.
std::vector<Rat> hs_numerator(std::vector<Mono> gens);

}  // namespace detail

// Dimension and degree of Proj(R/I) read off the leading-term ideal.
template <class K>
HilbertData hilbert_data(const GroebnerBasis<K>& gb, int num_vars) {
    std::vector<Mono> lt;
    for (const auto& p : gb.basis) {
        if (!p.is_homogeneous()) throw NotHomogeneous("basis element is not homogeneous");
        lt.push_back(p.leading_term(gb.order).first);
    }
    std::vector<Rat> num = detail::hs_numerator(std::move(lt));

    // Strip (1-t) factors: num = (1-t)^e * q with q(1) != 0.
    auto value_at_one = [](const std::vector<Rat>& v) {
        Rat s(0);
        for (const auto& c : v) s += c;
        return s;
    };
    auto nonzero = [](const std::vector<Rat>& v) {
        for (const auto& c : v)
            if (!is_zero(c)) return true;
        return false;
    };
    HilbertData h;
    if (!nonzero(num)) return h;  // unit ideal: empty scheme
    int e = 0;
    while (is_zero(value_at_one(num))) {
        // Divide by (1-t): running prefix sums.
        std::vector<Rat> q(num.size() - 1, Rat(0));
        Rat carry(0);
        for (size_t k = 0; k < q.size(); ++k) {
            carry += num[k];
            q[k] = carry;
        }
        num = std::move(q);
        ++e;
    }
    int d = num_vars - e;  // Krull dimension of R/I
    if (d <= 0) return h;  // finite-length quotient: empty projective scheme

    // Hilbert polynomial sum_k q_k * C(m - k + d - 1, d - 1) as a polynomial
    // in m; dimension and degree read from it.
    std::vector<Rat> poly(static_cast<size_t>(d), Rat(0));
    for (size_t k = 0; k < num.size(); ++k) {
        if (is_zero(num[k])) continue;
        std::vector<Rat> term = {Rat(1)};
        for (int j = 1; j <= d - 1; ++j) {
            // multiply by (m - k + j) / j
            std::vector<Rat> next(term.size() + 1, Rat(0));
            Rat shift = Rat(j) - Rat(static_cast<long>(k));
            for (size_t c = 0; c < term.size(); ++c) {
                next[c] += term[c] * shift;
                next[c + 1] += term[c];
            }
            for (auto& v : next) v /= j;
            term = std::move(next);
        }
        for (size_t c = 0; c < term.size(); ++c) poly[c] += num[k] * term[c];
    }
    while (poly.size() > 1 && is_zero(poly.back())) poly.pop_back();
    h.hilbert_polynomial = poly;
    h.dimension = static_cast<int>(poly.size()) - 1;
    Rat lead = poly.back();
    for (int j = 2; j <= h.dimension; ++j) lead *= j;
    h.degree = static_cast<int>(lead.get_num().get_si());
    return h;
}

}  // namespace qalg
