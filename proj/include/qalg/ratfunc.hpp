#pragma once

#include "qalg/upoly.hpp"

namespace qalg {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonGenericError : std::domain_error {
    using std::domain_error::domain_error;
};

// The paper-facing parameter regime: alpha(1 - alpha^2) != 0.
inline void check_generic(const Rat& a) {
    if (is_zero(a * (1 - a * a)))
        throw NonGenericError("parameter value " + to_string(a) + " is not generic");
}

// Element of Q(alpha): a reduced fraction of univariate polynomials with a
// monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(UPoly(Rat(1))) {}
    RatFunc(long v) : num_(UPoly(Rat(v))), den_(UPoly(Rat(1))) {}
    RatFunc(const Rat& v) : num_(UPoly(v)), den_(UPoly(Rat(1))) {}
    explicit RatFunc(UPoly n) : num_(std::move(n)), den_(UPoly(Rat(1))) {}
    RatFunc(UPoly n, UPoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static RatFunc alpha() { return RatFunc(UPoly::var()); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero in Q(alpha)");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    // Value at a rational point of the parameter.
    Rat eval(const Rat& x) const {
        Rat d = upoly_eval(den_, x);
        if (qalg::is_zero(d)) throw PoleError("denominator vanishes at alpha = " + qalg::to_string(x));
        return upoly_eval(num_, x) / d;
    }

    // If the element is a constant polynomial, its rational value.
    std::optional<Rat> as_rational() const {
        if (!den_.is_constant() || num_.degree() > 0) return std::nullopt;
        return num_.is_zero() ? Rat(0) : num_.c[0];
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("zero denominator in Q(alpha)");
        if (num_.is_zero()) {
            den_ = UPoly(Rat(1));
            return;
        }
        UPoly g = upoly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = upoly_divrem(num_, g).first;
            den_ = upoly_divrem(den_, g).first;
        }
        Rat lead = den_.lead();
        if (!is_one(lead)) {
            Rat inv = rat_inverse(lead);
            for (auto& x : num_.c) x *= inv;
            for (auto& x : den_.c) x *= inv;
        }
    }

    UPoly num_, den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline bool is_one(const RatFunc& x) { return x == RatFunc(1); }
inline RatFunc inverse(const RatFunc& x) { return RatFunc(1) / x; }

inline std::optional<RatFunc> try_inverse(const RatFunc& x) {
    if (x.is_zero()) return std::nullopt;
    return RatFunc(1) / x;
}

std::string to_string(const RatFunc& x);

// True when printing x as a coefficient needs parentheses around it.
bool needs_parens(const RatFunc& x);
inline bool needs_parens(const Rat&) { return false; }

} // namespace qalg
