#pragma once

#include "qalg/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace qalg {

// Dense univariate polynomial over Q, used as numerator/denominator of
// rational functions in a single parameter.
struct UPoly {
    std::vector<Rat> c; // c[k] is the coefficient of the k-th power

    UPoly() = default;
    explicit UPoly(const Rat& r) {
        if (!qalg::is_zero(r)) c.push_back(r);
    }
    explicit UPoly(std::vector<Rat> cs) : c(std::move(cs)) { trim(); }

    static UPoly var() { return UPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    void trim() {
        while (!c.empty() && qalg::is_zero(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for 0
    const Rat& lead() const { return c.back(); }
    Rat coeff(size_t k) const { return k < c.size() ? c[k] : Rat(0); }
    bool is_constant() const { return c.size() <= 1; }

    bool operator==(const UPoly& o) const { return c == o.c; }
    bool operator!=(const UPoly& o) const { return c != o.c; }
};

inline bool is_zero(const UPoly& p) { return p.is_zero(); }

inline UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

inline UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

inline UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

inline UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (qalg::is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

inline UPoly operator*(const UPoly& a, const Rat& s) {
    if (qalg::is_zero(s)) return UPoly();
    UPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

// Quotient and remainder with remainder degree < degree of d.
inline std::pair<UPoly, UPoly> upoly_divrem(UPoly a, const UPoly& d) {
    if (d.is_zero()) throw std::domain_error("univariate division by zero");
    UPoly q;
    if (a.degree() >= d.degree())
        q.c.assign(static_cast<size_t>(a.degree() - d.degree()) + 1, Rat(0));
    while (!a.is_zero() && a.degree() >= d.degree()) {
        int k = a.degree() - d.degree();
        Rat f = a.lead() / d.lead();
        q.c[static_cast<size_t>(k)] = f;
        for (size_t i = 0; i < d.c.size(); ++i)
            a.c[static_cast<size_t>(k) + i] -= f * d.c[i];
        a.trim();
    }
    q.trim();
    return {q, a};
}

inline UPoly upoly_monic(const UPoly& p) {
    if (p.is_zero() || is_one(p.lead())) return p;
    UPoly r = p;
    Rat inv = rat_inverse(p.lead());
    for (auto& x : r.c) x *= inv;
    return r;
}

inline UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = upoly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(a);
}

inline Rat upoly_eval(const UPoly& p, const Rat& x) {
    Rat r(0);
    for (size_t i = p.c.size(); i-- > 0;) r = r * x + p.c[i];
    return r;
}

// Exact square root of a polynomial, if one exists (with positive lead).
inline std::optional<UPoly> upoly_sqrt(const UPoly& p) {
    if (p.is_zero()) return UPoly();
    if (p.degree() % 2 != 0) return std::nullopt;
    auto lr = rat_sqrt(p.lead());
    if (!lr) return std::nullopt;
    UPoly r;
    r.c.assign(static_cast<size_t>(p.degree() / 2) + 1, Rat(0));
    r.c.back() = *lr;
    // Solve for the remaining coefficients top-down from (r^2 - p) = 0.
    for (int k = p.degree() / 2 - 1; k >= 0; --k) {
        // Coefficient of x^(k + deg/2) in r^2 must match p.
        Rat acc(0);
        int target = k + p.degree() / 2;
        for (int i = k + 1; i <= p.degree() / 2; ++i) {
            int j = target - i;
            if (j > k && j <= p.degree() / 2) acc += r.c[static_cast<size_t>(i)] * r.c[static_cast<size_t>(j)];
        }
        r.c[static_cast<size_t>(k)] = (p.coeff(static_cast<size_t>(target)) - acc) / (2 * r.c.back());
    }
    if (r * r == p) return r;
    return std::nullopt;
}

std::string upoly_to_string(const UPoly& p, const std::string& var);

} // namespace qalg
