#include "qalg/tower.hpp"

#include <sstream>

namespace qalg {

std::string upoly_to_string(const UPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(static_cast<size_t>(k));
        if (qalg::is_zero(c)) continue;
        bool neg = sgn(c) < 0;
        Rat ab = abs(c);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string cs = ab.get_str();
        if (k == 0) {
            out << cs;
        } else {
            if (cs != "1") out << cs << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

std::string to_string(const RatFunc& x) {
    std::string n = upoly_to_string(x.num(), "alpha");
    if (x.is_polynomial()) return n;
    std::string d = upoly_to_string(x.den(), "alpha");
    std::string np = x.num().degree() > 0 ? "(" + n + ")" : n;
    std::string dp = x.den().degree() > 0 ? "(" + d + ")" : d;
    return np + "/" + dp;
}

bool needs_parens(const RatFunc& x) {
    if (!x.is_polynomial()) return true;
    const UPoly& n = x.num();
    int terms = 0;
    for (const auto& c : n.c)
        if (!qalg::is_zero(c)) ++terms;
    return terms > 1;
}

Rat specialize_alpha(const RatFunc& x, const Rat& value) {
    check_generic(value);
    return x.eval(value);
}

TowerPtr<Rat> specialize_ring(const TowerPtr<RatFunc>& ring, const Rat& value) {
    check_generic(value);
    auto r = std::make_shared<TowerRing<Rat>>();
    r->names = ring->names;
    r->squares.resize(ring->squares.size());
    for (size_t i = 0; i < ring->squares.size(); ++i) {
        r->squares[i].reserve(ring->squares[i].size());
        for (const auto& s : ring->squares[i]) r->squares[i].push_back(s.eval(value));
    }
    return r;
}

TElem<Rat> specialize_alpha(const TElem<RatFunc>& x, const TowerPtr<Rat>& target, const Rat& value) {
    check_generic(value);
    if (target->names != x.ring()->names)
        throw std::invalid_argument("specialization target ring does not match source");
    std::vector<Rat> c;
    c.reserve(x.coords().size());
    for (const auto& v : x.coords()) c.push_back(v.eval(value));
    return TElem<Rat>(target, std::move(c));
}

} // namespace qalg
