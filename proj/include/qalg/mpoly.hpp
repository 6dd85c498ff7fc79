#pragma once

#include "qalg/monomial.hpp"
#include "qalg/ratfunc.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace qalg {

struct VarSetMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MissingAssignment : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotBihomogeneous : std::domain_error {
    using std::domain_error::domain_error;
};

// Declared ahead of the coefficient-generic templates below, whose qualified
// calls are resolved where the template is defined; the definitions live
// next to TElem.
template <class K>
class TElem;
template <class K>
bool is_zero(const TElem<K>& x);
template <class K>
bool is_one(const TElem<K>& x);

struct VarSet {
    std::vector<std::string> names;

    explicit VarSet(std::vector<std::string> n) : names(std::move(n)) {
        if (names.size() > Mono::max_vars)
            throw std::invalid_argument("at most 8 variables are supported");
    }
    int count() const { return static_cast<int>(names.size()); }
    int index(const std::string& name) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }
    bool operator==(const VarSet& o) const { return names == o.names; }
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(std::vector<std::string> names) {
    return std::make_shared<VarSet>(std::move(names));
}

// Sparse multivariate polynomial with a fixed variable set.  Terms are kept
// sorted by descending packed exponent (lexicographic), which gives a
// canonical representation independent of any monomial order in play.
template <class K>
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(VarSetPtr vars) : vars_(std::move(vars)) {}
    MPoly(VarSetPtr vars, const K& c) : vars_(std::move(vars)) {
        if (!qalg::is_zero(c)) t_.push_back({Mono::one(), c});
    }

    static MPoly variable(const VarSetPtr& vars, int v, unsigned e = 1) {
        MPoly p(vars);
        if (v < 0 || v >= vars->count()) throw std::out_of_range("variable index out of range");
        p.t_.push_back({Mono::var(v, e), K(1)});
        return p;
    }
    static MPoly term(const VarSetPtr& vars, Mono m, const K& c) {
        MPoly p(vars);
        if (!qalg::is_zero(c)) p.t_.push_back({m, c});
        return p;
    }

    const VarSetPtr& vars() const { return vars_; }
    const std::vector<std::pair<Mono, K>>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }

    bool operator==(const MPoly& o) const {
        return same_vars(o) && t_ == o.t_;
    }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check_vars(b);
        MPoly r(a.vars_ ? a.vars_ : b.vars_);
        r.t_.reserve(a.t_.size() + b.t_.size());
        size_t i = 0, j = 0;
        while (i < a.t_.size() && j < b.t_.size()) {
            if (a.t_[i].first.bits > b.t_[j].first.bits) {
                r.t_.push_back(a.t_[i++]);
            } else if (a.t_[i].first.bits < b.t_[j].first.bits) {
                r.t_.push_back(b.t_[j++]);
            } else {
                K c = a.t_[i].second + b.t_[j].second;
                if (!qalg::is_zero(c)) r.t_.push_back({a.t_[i].first, c});
                ++i, ++j;
            }
        }
        for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
        for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_vars(b);
        MPoly r(a.vars_ ? a.vars_ : b.vars_);
        if (a.is_zero() || b.is_zero()) return r;
        std::map<uint64_t, K, std::greater<uint64_t>> acc;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                Mono m = ma * mb;
                auto it = acc.find(m.bits);
                if (it == acc.end()) {
                    acc.emplace(m.bits, ca * cb);
                } else {
                    it->second += ca * cb;
                }
            }
        r.t_.reserve(acc.size());
        for (auto& [bits, c] : acc)
            if (!qalg::is_zero(c)) r.t_.push_back({Mono{bits}, c});
        return r;
    }

    friend MPoly operator*(const K& s, const MPoly& a) {
        MPoly r(a.vars_);
        if (qalg::is_zero(s)) return r;
        r.t_.reserve(a.t_.size());
        for (const auto& [m, c] : a.t_) {
            K v = s * c;
            if (!qalg::is_zero(v)) r.t_.push_back({m, v});
        }
        return r;
    }
    friend MPoly operator*(const MPoly& a, const K& s) { return s * a; }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly pow(unsigned e) const {
        MPoly r(vars_, K(1)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.total_deg()));
        return d;
    }
    bool is_homogeneous() const {
        if (t_.empty()) return true;
        unsigned d = t_.front().first.total_deg();
        for (const auto& [m, c] : t_)
            if (m.total_deg() != d) return false;
        return true;
    }

    const std::pair<Mono, K>& leading_term(const MonomialOrder& ord) const {
        if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
        size_t best = 0;
        for (size_t i = 1; i < t_.size(); ++i)
            if (ord.greater(t_[i].first, t_[best].first)) best = i;
        return t_[best];
    }

    // Coefficient of an exact monomial (zero if absent).
    K coeff(Mono m) const {
        for (const auto& [mm, c] : t_)
            if (mm == m) return c;
        return K(0);
    }

    // Image under variable -> polynomial (every variable present in the
    // polynomial must be assigned; images share one variable set).
    MPoly substitute(const std::vector<std::optional<MPoly>>& images) const {
        VarSetPtr target;
        for (const auto& im : images)
            if (im) {
                target = im->vars();
                break;
            }
        if (!target) throw MissingAssignment("no substitution images given");
        MPoly r(target);
        for (const auto& [m, c] : t_) {
            MPoly t(target, c);
            for (int v = 0; v < vars_->count(); ++v) {
                unsigned e = m.exp(v);
                if (e == 0) continue;
                if (v >= static_cast<int>(images.size()) || !images[static_cast<size_t>(v)])
                    throw MissingAssignment("no image for variable " + vars_->names[static_cast<size_t>(v)]);
                t = t * images[static_cast<size_t>(v)]->pow(e);
            }
            r = r + t;
        }
        return r;
    }

    // Evaluation in any commutative ring R, given the variable values and a
    // coefficient embedding.
    template <class R, class Conv>
    R eval(std::span<const R> vals, Conv&& conv) const {
        if (static_cast<int>(vals.size()) < vars_->count())
            throw MissingAssignment("not enough values for evaluation");
        R acc = conv(K(0));
        for (const auto& [m, c] : t_) {
            R t = conv(c);
            for (int v = 0; v < vars_->count(); ++v)
                for (unsigned e = 0; e < m.exp(v); ++e) t = t * vals[static_cast<size_t>(v)];
            acc = acc + t;
        }
        return acc;
    }

private:
    bool same_vars(const MPoly& o) const {
        if (vars_ == o.vars_) return true;
        if (!vars_ || !o.vars_) return !vars_ && !o.vars_;
        return *vars_ == *o.vars_;
    }
    void check_vars(const MPoly& o) const {
        if (!same_vars(o)) throw VarSetMismatch("polynomials over different variable sets");
    }

    VarSetPtr vars_;
    std::vector<std::pair<Mono, K>> t_;
};

template <class K>
bool is_zero(const MPoly<K>& p) { return p.is_zero(); }

// Bidegree with respect to a two-block partition of the variables, when the
// polynomial is bihomogeneous.
template <class K>
std::optional<std::pair<int, int>> try_bidegree(const MPoly<K>& p, uint8_t block1_mask) {
    if (p.is_zero()) return std::make_pair(0, 0);
    std::optional<std::pair<int, int>> res;
    for (const auto& [m, c] : p.terms()) {
        int d1 = 0, d2 = 0;
        for (int v = 0; v < p.vars()->count(); ++v) {
            if (block1_mask & (1u << v))
                d1 += static_cast<int>(m.exp(v));
            else
                d2 += static_cast<int>(m.exp(v));
        }
        if (!res) {
            res = {d1, d2};
        } else if (*res != std::make_pair(d1, d2)) {
            return std::nullopt;
        }
    }
    return res;
}

template <class K>
std::pair<int, int> bidegree_check(const MPoly<K>& p, uint8_t block1_mask) {
    auto r = try_bidegree(p, block1_mask);
    if (!r) throw NotBihomogeneous("polynomial is not bihomogeneous for the given blocks");
    return *r;
}

template <class K>
struct DivisionResult {
    std::vector<MPoly<K>> quotients;
    MPoly<K> remainder;
};

// Multivariate division: p = sum quotients[i] * divisors[i] + remainder, and
// no remainder term is divisible by any divisor's leading term.
template <class K>
DivisionResult<K> divide(const MPoly<K>& p, const std::vector<MPoly<K>>& divisors,
                         const MonomialOrder& ord) {
    DivisionResult<K> res;
    res.remainder = MPoly<K>(p.vars());
    res.quotients.assign(divisors.size(), MPoly<K>(p.vars()));
    std::vector<std::pair<Mono, K>> lt;
    lt.reserve(divisors.size());
    for (const auto& d : divisors) {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        lt.push_back(d.leading_term(ord));
    }
    auto cmp = [&ord](Mono a, Mono b) { return ord.greater(a, b); };
    std::map<Mono, K, decltype(cmp)> work(cmp);
    for (const auto& [m, c] : p.terms()) work[m] = c;
    while (!work.empty()) {
        auto [m, c] = *work.begin();
        work.erase(work.begin());
        if (qalg::is_zero(c)) continue;
        bool reduced = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (!lt[i].first.divides(m)) continue;
            Mono q = m / lt[i].first;
            K f = c / lt[i].second;
            res.quotients[i] += MPoly<K>::term(p.vars(), q, f);
            for (const auto& [dm, dc] : divisors[i].terms()) {
                Mono nm = dm * q;
                auto it = work.find(nm);
                K delta = f * dc;
                if (nm == m) continue; // the leading term cancels by construction
                if (it == work.end()) {
                    work.emplace(nm, -delta);
                } else {
                    it->second -= delta;
                    if (qalg::is_zero(it->second)) work.erase(it);
                }
            }
            reduced = true;
            break;
        }
        if (!reduced) res.remainder += MPoly<K>::term(p.vars(), m, c);
    }
    return res;
}

template <class K>
MPoly<K> normal_form(const MPoly<K>& p, const std::vector<MPoly<K>>& divisors,
                     const MonomialOrder& ord) {
    return divide(p, divisors, ord).remainder;
}

// Leading coefficient scaled to 1.
template <class K>
MPoly<K> monic(const MPoly<K>& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    const K& lc = p.leading_term(ord).second;
    if (qalg::is_one(lc)) return p;
    return inverse(lc) * p;
}

std::string mono_to_string(Mono m, const VarSet& vars);

template <class K>
std::string to_string(const MPoly<K>& p, const MonomialOrder& ord = MonomialOrder{}) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Mono, K>> ts(p.terms().begin(), p.terms().end());
    std::stable_sort(ts.begin(), ts.end(),
                     [&ord](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : ts) {
        std::string cs = to_string(c);
        std::string mono = mono_to_string(m, *p.vars());
        if (needs_parens(c)) {
            if (!first) out << " + ";
            out << "(" << cs << ")";
            if (!mono.empty()) out << "*" << mono;
            first = false;
            continue;
        }
        bool neg = !cs.empty() && cs[0] == '-';
        std::string body = neg ? cs.substr(1) : cs;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (mono.empty()) {
            out << body;
        } else if (body == "1") {
            out << mono;
        } else {
            out << body << "*" << mono;
        }
    }
    return out.str();
}

} // namespace qalg
