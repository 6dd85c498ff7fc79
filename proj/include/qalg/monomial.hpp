#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qalg {

// Exponent vector packed into one 64-bit word: variable v occupies byte
// (7 - v), so plain integer comparison is lexicographic with variable 0
// largest.  At most 8 variables, each exponent at most 127 (no carries).
struct Mono {
    uint64_t bits = 0;

    static constexpr int max_vars = 8;
    static constexpr unsigned max_exp = 127;

    static Mono one() { return Mono{}; }
    static Mono var(int v, unsigned e = 1) {
        Mono m;
        m.set_exp(v, e);
        return m;
    }
    static Mono from_exps(const std::vector<unsigned>& e) {
        Mono m;
        for (size_t i = 0; i < e.size(); ++i) m.set_exp(static_cast<int>(i), e[i]);
        return m;
    }

    unsigned exp(int v) const { return static_cast<unsigned>(bits >> (8 * (7 - v))) & 0xFF; }
    void set_exp(int v, unsigned e) {
        if (v < 0 || v >= max_vars) throw std::out_of_range("variable index out of range");
        if (e > max_exp) throw std::overflow_error("monomial exponent too large");
        bits = (bits & ~(uint64_t(0xFF) << (8 * (7 - v)))) | (uint64_t(e) << (8 * (7 - v)));
    }

    unsigned total_deg() const {
        unsigned s = 0;
        for (int v = 0; v < max_vars; ++v) s += exp(v);
        return s;
    }

    bool is_one() const { return bits == 0; }

    friend Mono operator*(Mono a, Mono b) {
        Mono r;
        r.bits = a.bits + b.bits;
        // No byte may have crossed 127, which would contaminate a neighbor.
        if ((r.bits & 0x8080808080808080ull) != 0) throw std::overflow_error("monomial exponent overflow");
        return r;
    }

    bool divides(Mono b) const {
        for (int v = 0; v < max_vars; ++v)
            if (exp(v) > b.exp(v)) return false;
        return true;
    }

    // b / a, valid only when a divides b.
    friend Mono operator/(Mono b, Mono a) {
        Mono r;
        r.bits = b.bits - a.bits;
        return r;
    }

    friend Mono lcm(Mono a, Mono b) {
        Mono r;
        for (int v = 0; v < max_vars; ++v) {
            unsigned e = std::max(a.exp(v), b.exp(v));
            r.bits |= uint64_t(e) << (8 * (7 - v));
        }
        return r;
    }

    friend Mono gcd(Mono a, Mono b) {
        Mono r;
        for (int v = 0; v < max_vars; ++v) {
            unsigned e = std::min(a.exp(v), b.exp(v));
            r.bits |= uint64_t(e) << (8 * (7 - v));
        }
        return r;
    }

    bool operator==(const Mono& o) const { return bits == o.bits; }
    bool operator!=(const Mono& o) const { return bits != o.bits; }
};

struct MonomialOrder {
    enum Kind { lex, grlex, grevlex } kind = grevlex;

    // Returns negative, zero or positive as a < b, a == b, a > b.
    int compare(Mono a, Mono b) const {
        if (a.bits == b.bits) return 0;
        switch (kind) {
        case lex:
            return a.bits < b.bits ? -1 : 1;
        case grlex: {
            unsigned da = a.total_deg(), db = b.total_deg();
            if (da != db) return da < db ? -1 : 1;
            return a.bits < b.bits ? -1 : 1;
        }
        case grevlex: {
            unsigned da = a.total_deg(), db = b.total_deg();
            if (da != db) return da < db ? -1 : 1;
            // Larger is the one with the smaller exponent in the last
            // variable where they differ.
            uint64_t diff = a.bits ^ b.bits;
            int byte = std::countr_zero(diff) / 8; // 0 = last variable
            unsigned ea = static_cast<unsigned>(a.bits >> (8 * byte)) & 0xFF;
            unsigned eb = static_cast<unsigned>(b.bits >> (8 * byte)) & 0xFF;
            return ea < eb ? 1 : -1;
        }
        }
        return 0;
    }

    bool less(Mono a, Mono b) const { return compare(a, b) < 0; }
    bool greater(Mono a, Mono b) const { return compare(a, b) > 0; }
};

} // namespace qalg
