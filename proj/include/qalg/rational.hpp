#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace qalg {

using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_one(const Rat& x) { return x == 1; }

inline Rat rat_inverse(const Rat& x) {
    if (is_zero(x)) throw std::domain_error("division by zero rational");
    return Rat(1) / x;
}
inline Rat inverse(const Rat& x) { return rat_inverse(x); }

inline std::optional<Rat> try_inverse(const Rat& x) {
    if (is_zero(x)) return std::nullopt;
    return rat_inverse(x);
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

// Parses "p" or "p/q" with optional sign.
inline std::optional<Rat> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

// True if x = y^2 for some rational y; returns y with y >= 0.
inline std::optional<Rat> rat_sqrt(const Rat& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (sgn(x) == 0) return Rat(0);
    Int nr, dr;
    if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(x.get_den_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(nr.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(dr.get_mpz_t(), x.get_den_mpz_t());
    return Rat(nr, dr);
}

} // namespace qalg
