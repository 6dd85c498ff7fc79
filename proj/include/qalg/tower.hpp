#pragma once

#include "qalg/ratfunc.hpp"

#include <cassert>
#include <memory>
#include <span>
#include <sstream>
#include <vector>

namespace qalg {

struct ZeroDivisorError : std::domain_error {
    using std::domain_error::domain_error;
};

// Commutative ring obtained from a base field by successively adjoining
// square roots: g_k^2 = s_k where s_k lies in the subring generated by the
// earlier generators.  Elements are stored on the multilinear basis of
// products of distinct generators, indexed by bitmask (bit k = generator k).
// The ring need not be a field; vanishing verified here implies vanishing
// under every specialization of the generators.
template <class K>
struct TowerRing {
    std::vector<std::string> names;
    std::vector<std::vector<K>> squares; // squares[k] has size 2^k

    size_t gen_count() const { return names.size(); }
    size_t dim() const { return size_t(1) << names.size(); }

    int gen_index(const std::string& name) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }

    // True if `other` extends this ring by additional generators.
    bool is_prefix_of(const TowerRing& other) const {
        if (gen_count() > other.gen_count()) return false;
        for (size_t i = 0; i < gen_count(); ++i)
            if (names[i] != other.names[i] || squares[i] != other.squares[i]) return false;
        return true;
    }
};

template <class K>
bool operator==(const TowerRing<K>& r, const TowerRing<K>& s) {
    return r.names == s.names && r.squares == s.squares;
}

template <class K>
using TowerPtr = std::shared_ptr<const TowerRing<K>>;

template <class K>
TowerPtr<K> tower_base() {
    return std::make_shared<TowerRing<K>>();
}

namespace detail {

template <class K>
bool all_zero(std::span<const K> v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

// out += a * b over the level-k subring (spans of size 2^k).
template <class K>
void tower_mul_acc(const TowerRing<K>& ring, std::span<const K> a, std::span<const K> b,
                   int k, std::span<K> out) {
    if (all_zero(a) || all_zero(b)) return;
    if (k == 0) {
        out[0] += a[0] * b[0];
        return;
    }
    size_t h = size_t(1) << (k - 1);
    auto a0 = a.first(h), a1 = a.subspan(h);
    auto b0 = b.first(h), b1 = b.subspan(h);
    auto out0 = out.first(h), out1 = out.subspan(h);
    tower_mul_acc(ring, a0, b0, k - 1, out0);
    tower_mul_acc(ring, a0, b1, k - 1, out1);
    tower_mul_acc(ring, a1, b0, k - 1, out1);
    if (!all_zero(a1) && !all_zero(b1)) {
        std::vector<K> t(h, K(0));
        tower_mul_acc(ring, a1, b1, k - 1, std::span<K>(t));
        std::span<const K> s(ring.squares[static_cast<size_t>(k - 1)]);
        tower_mul_acc(ring, std::span<const K>(t), s, k - 1, out0);
    }
}

} // namespace detail

template <class K>
class TElem {
public:
    TElem() = default;
    explicit TElem(TowerPtr<K> ring) : ring_(std::move(ring)), c_(ring_->dim(), K(0)) {}
    TElem(TowerPtr<K> ring, const K& v) : TElem(std::move(ring)) { c_[0] = v; }
    TElem(TowerPtr<K> ring, std::vector<K> coords) : ring_(std::move(ring)), c_(std::move(coords)) {
        assert(c_.size() == ring_->dim());
    }

    static TElem generator(const TowerPtr<K>& ring, const std::string& name) {
        int i = ring->gen_index(name);
        if (i < 0) throw std::invalid_argument("unknown tower generator " + name);
        TElem e(ring);
        e.c_[size_t(1) << i] = K(1);
        return e;
    }

    const TowerPtr<K>& ring() const { return ring_; }
    const std::vector<K>& coords() const { return c_; }
    const K& coord(size_t mask) const { return c_[mask]; }

    bool is_zero() const { return detail::all_zero(std::span<const K>(c_)); }
    bool is_scalar() const {
        for (size_t m = 1; m < c_.size(); ++m)
            if (!qalg::is_zero(c_[m])) return false;
        return true;
    }
    // Bit union of the generators actually present.
    size_t support_mask() const {
        size_t u = 0;
        for (size_t m = 0; m < c_.size(); ++m)
            if (!qalg::is_zero(c_[m])) u |= m;
        return u;
    }

    bool operator==(const TElem& o) const { return lifted_equal(*this, o); }
    bool operator!=(const TElem& o) const { return !(*this == o); }

    TElem operator-() const {
        TElem r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend TElem operator+(const TElem& a, const TElem& b) {
        if (a.ring_ == b.ring_) {
            TElem r = a;
            for (size_t i = 0; i < b.c_.size(); ++i)
                if (!qalg::is_zero(b.c_[i])) r.c_[i] += b.c_[i];
            return r;
        }
        auto [x, y] = align(a, b);
        for (size_t i = 0; i < y.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend TElem operator-(const TElem& a, const TElem& b) {
        if (a.ring_ == b.ring_) {
            TElem r = a;
            for (size_t i = 0; i < b.c_.size(); ++i)
                if (!qalg::is_zero(b.c_[i])) r.c_[i] -= b.c_[i];
            return r;
        }
        return a + (-b);
    }
    friend TElem operator*(const TElem& a, const TElem& b) {
        if (a.ring_ == b.ring_) {
            TElem r(a.ring_);
            detail::tower_mul_acc(*a.ring_, std::span<const K>(a.c_), std::span<const K>(b.c_),
                                  static_cast<int>(a.ring_->gen_count()), std::span<K>(r.c_));
            return r;
        }
        auto [x, y] = align(a, b);
        TElem r(x.ring_);
        detail::tower_mul_acc(*x.ring_, std::span<const K>(x.c_), std::span<const K>(y.c_),
                              static_cast<int>(x.ring_->gen_count()), std::span<K>(r.c_));
        return r;
    }
    friend TElem operator*(const K& s, const TElem& a) {
        if (qalg::is_zero(s)) return TElem(a.ring_);
        TElem r = a;
        for (auto& x : r.c_)
            if (!qalg::is_zero(x)) x = s * x;
        return r;
    }
    friend TElem operator*(const TElem& a, const K& s) { return s * a; }
    TElem& operator+=(const TElem& o) { return *this = *this + o; }
    TElem& operator-=(const TElem& o) { return *this = *this - o; }
    TElem& operator*=(const TElem& o) { return *this = *this * o; }

    TElem pow(unsigned e) const {
        TElem r(ring_, K(1)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

private:
    static std::pair<TElem, TElem> align(const TElem& a, const TElem& b) {
        if (!a.ring_ || !b.ring_) throw std::logic_error("tower element without a ring");
        if (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) return {a, b};
        if (a.ring_->is_prefix_of(*b.ring_)) return {lift(a, b.ring_), b};
        if (b.ring_->is_prefix_of(*a.ring_)) return {a, lift(b, a.ring_)};
        throw std::invalid_argument("tower elements from incompatible rings");
    }
    static TElem lift(const TElem& a, const TowerPtr<K>& ring) {
        TElem r(ring);
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        return r;
    }
    static bool lifted_equal(const TElem& a, const TElem& b) {
        auto [x, y] = align(a, b);
        return x.c_ == y.c_;
    }

    TowerPtr<K> ring_;
    std::vector<K> c_;
};

template <class K>
bool is_zero(const TElem<K>& x) { return x.is_zero(); }

// Extends the ring by one generator with the given square.
template <class K>
TowerPtr<K> tower_adjoin_sqrt(const TowerPtr<K>& ring, const TElem<K>& square,
                              const std::string& name) {
    if (ring->gen_index(name) >= 0)
        throw std::invalid_argument("tower generator name already in use: " + name);
    if (square.ring() != ring && !(*square.ring() == *ring))
        throw std::invalid_argument("square must be an element of the ring being extended");
    auto ext = std::make_shared<TowerRing<K>>(*ring);
    ext->names.push_back(name);
    ext->squares.push_back(square.coords());
    return ext;
}

template <class K>
TowerPtr<K> tower_adjoin_sqrt(const TowerPtr<K>& ring, const K& square, const std::string& name) {
    return tower_adjoin_sqrt(ring, TElem<K>(ring, square), name);
}

// Solves x * y = 1 by linear algebra over the base field; nullopt when x is
// zero or a zero divisor.
template <class K>
std::optional<TElem<K>> try_inverse(const TElem<K>& x) {
    const auto& ring = *x.ring();
    size_t n = ring.dim();
    // Column j of the system is x * e_j on the multilinear basis.
    std::vector<std::vector<K>> col(n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<K> e(n, K(0));
        e[j] = K(1);
        TElem<K> prod = x * TElem<K>(x.ring(), e);
        col[j] = prod.coords();
    }
    // Gaussian elimination on [A | e_0].
    std::vector<std::vector<K>> a(n, std::vector<K>(n + 1, K(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = col[j][i];
        a[i][n] = (i == 0) ? K(1) : K(0);
    }
    size_t row = 0;
    std::vector<int> pivot_col(n, -1);
    for (size_t jc = 0; jc < n && row < n; ++jc) {
        size_t pr = row;
        while (pr < n && qalg::is_zero(a[pr][jc])) ++pr;
        if (pr == n) continue;
        std::swap(a[pr], a[row]);
        K inv = inverse(a[row][jc]);
        for (size_t k = jc; k <= n; ++k) a[row][k] = a[row][k] * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || qalg::is_zero(a[i][jc])) continue;
            K f = a[i][jc];
            for (size_t k = jc; k <= n; ++k) a[i][k] = a[i][k] - f * a[row][k];
        }
        pivot_col[row] = static_cast<int>(jc);
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (!qalg::is_zero(a[i][n])) return std::nullopt; // inconsistent: not invertible
    std::vector<K> y(n, K(0));
    for (size_t i = 0; i < row; ++i)
        if (pivot_col[i] >= 0) y[static_cast<size_t>(pivot_col[i])] = a[i][n];
    return TElem<K>(x.ring(), std::move(y));
}

template <class K>
bool is_unit(const TElem<K>& x) { return try_inverse(x).has_value(); }

// x^-1, throwing ZeroDivisorError when x is zero or a zero divisor.
template <class K>
TElem<K> inverse(const TElem<K>& x) {
    auto r = try_inverse(x);
    if (!r) throw ZeroDivisorError("element is not invertible in the tower");
    return *r;
}

template <class K>
bool is_one(const TElem<K>& x) {
    return x.is_scalar() && is_one(x.coord(0));
}

template <class K>
TElem<K> operator/(const TElem<K>& a, const TElem<K>& b) {
    return a * inverse(b);
}

inline std::optional<Rat> field_sqrt(const Rat& x) { return rat_sqrt(x); }

inline std::optional<RatFunc> field_sqrt(const RatFunc& x) {
    auto n = upoly_sqrt(x.num());
    if (!n) return std::nullopt;
    auto d = upoly_sqrt(x.den());
    if (!d) return std::nullopt;
    return RatFunc(*n, *d);
}

// Looks for y in the tower with y^2 = s, where s is a base-field scalar.
// Tries every subset product of the generators (requires all squares to be
// scalars, which holds for every ring built by this project).
template <class K>
std::optional<TElem<K>> sqrt_in_tower(const TowerPtr<K>& ring, const K& s) {
    size_t k = ring->gen_count();
    std::vector<K> gensq(k);
    for (size_t i = 0; i < k; ++i) {
        for (size_t m = 1; m < ring->squares[i].size(); ++m)
            if (!qalg::is_zero(ring->squares[i][m])) return std::nullopt;
        gensq[i] = ring->squares[i][0];
    }
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        K prod(1);
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t(1) << i)) prod = prod * gensq[i];
        if (qalg::is_zero(prod)) continue;
        auto q = field_sqrt(s / prod);
        if (q) {
            TElem<K> r(ring);
            std::vector<K> c(ring->dim(), K(0));
            c[mask] = *q;
            return TElem<K>(ring, std::move(c));
        }
    }
    return std::nullopt;
}

// Homomorphic images under alpha -> value.
TowerPtr<Rat> specialize_ring(const TowerPtr<RatFunc>& ring, const Rat& value);
TElem<Rat> specialize_alpha(const TElem<RatFunc>& x, const TowerPtr<Rat>& target, const Rat& value);
Rat specialize_alpha(const RatFunc& x, const Rat& value);

template <class K>
std::string to_string(const TElem<K>& x) {
    const auto& ring = *x.ring();
    std::ostringstream out;
    bool first = true;
    for (size_t mask = 0; mask < ring.dim(); ++mask) {
        const K& c = x.coord(mask);
        if (qalg::is_zero(c)) continue;
        std::string cs = to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string mono;
        for (size_t i = 0; i < ring.gen_count(); ++i)
            if (mask & (size_t(1) << i)) {
                if (!mono.empty()) mono += "*";
                mono += ring.names[i];
            }
        bool unit_coeff = (cs == "1");
        if (mono.empty()) {
            out << (needs_parens(c) ? "(" + cs + ")" : cs);
        } else if (unit_coeff) {
            out << mono;
        } else {
            out << (needs_parens(c) ? "(" + cs + ")" : cs) << "*" << mono;
        }
    }
    if (first) out << "0";
    return out.str();
}

} // namespace qalg
