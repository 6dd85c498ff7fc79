#include "qalg/canonical.hpp"

namespace qalg {

namespace {

// gcd of numerators and lcm of denominators over all rationals seen.
struct RatContent {
    Int num_gcd = 0;
    Int den_lcm = 1;

    void feed(const Rat& r) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
    }
    Rat scale() const {
        // Multiplying by den_lcm/num_gcd makes all fed rationals integers
        // with collective content 1.
        Rat s(den_lcm, num_gcd == 0 ? Int(1) : num_gcd);
        s.canonicalize();
        return s;
    }
};

} // namespace

MPoly<Rat> primitive_part(const MPoly<Rat>& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    RatContent content;
    for (const auto& [m, c] : p.terms()) content.feed(c);
    Rat s = content.scale();
    if (sgn(p.leading_term(ord).second) < 0) s = -s;
    return s * p;
}

MPoly<RatFunc> primitive_part(const MPoly<RatFunc>& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    // Clear parameter denominators, then divide by the polynomial gcd of the
    // numerators, then normalize the rational content.
    UPoly den_lcm(Rat(1));
    for (const auto& [m, c] : p.terms()) {
        UPoly g = upoly_gcd(den_lcm, c.den());
        den_lcm = upoly_divrem(den_lcm * c.den(), g).first;
    }
    UPoly num_gcd;
    std::vector<std::pair<Mono, UPoly>> cleared;
    cleared.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        UPoly n = c.num() * upoly_divrem(den_lcm, c.den()).first;
        num_gcd = upoly_gcd(num_gcd, n);
        cleared.push_back({m, n});
    }
    RatContent content;
    MPoly<RatFunc> q(p.vars());
    for (auto& [m, n] : cleared) {
        UPoly reduced = num_gcd.degree() > 0 ? upoly_divrem(n, num_gcd).first : n;
        for (const auto& r : reduced.c) content.feed(r);
        q += MPoly<RatFunc>::term(p.vars(), m, RatFunc(reduced));
    }
    RatFunc s(content.scale());
    const RatFunc& lead = q.leading_term(ord).second;
    if (sgn(lead.num().lead()) < 0) s = -s;
    return s * q;
}

MPoly<Rat> specialize_alpha(const MPoly<RatFunc>& p, const Rat& value) {
    check_generic(value);
    MPoly<Rat> r(p.vars());
    for (const auto& [m, c] : p.terms()) r += MPoly<Rat>::term(p.vars(), m, c.eval(value));
    return r;
}

MPoly<RatFunc> promote(const MPoly<Rat>& p) {
    MPoly<RatFunc> r(p.vars());
    for (const auto& [m, c] : p.terms()) r += MPoly<RatFunc>::term(p.vars(), m, RatFunc(c));
    return r;
}

} // namespace qalg
