#pragma once

#include "qalg/mpoly.hpp"
#include "qalg/tower.hpp"

#include <bit>
#include <map>
#include <vector>

namespace qalg {

struct NotSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RankError : std::domain_error {
    using std::domain_error::domain_error;
};

template <class T>
struct Mat {
    int rows_ = 0, cols_ = 0;
    std::vector<T> e;

    Mat() = default;
    Mat(int r, int c, const T& init) : rows_(r), cols_(c), e(static_cast<size_t>(r * c), init) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int i, int j) { return e[static_cast<size_t>(i * cols_ + j)]; }
    const T& at(int i, int j) const { return e[static_cast<size_t>(i * cols_ + j)]; }

    Mat transposed() const {
        Mat t(cols_, rows_, e.empty() ? T() : e[0]);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }
};

// Determinant by cofactor expansion along the last column, memoized on the
// set of rows still in play.  `cols` lists the column indices in use; the
// recursion always consumes a prefix of it, so the row mask determines the
// subproblem.  One memo can be shared by every minor with the same columns.
template <class K>
MPoly<K> det_cofactor_masked(const Mat<MPoly<K>>& m, uint32_t row_mask,
                             const std::vector<int>& cols,
                             std::map<uint32_t, MPoly<K>>& memo) {
    int k = std::popcount(row_mask);
    const VarSetPtr& vars = m.e.front().vars();
    if (k == 0) return MPoly<K>(vars, K(1));
    auto it = memo.find(row_mask);
    if (it != memo.end()) return it->second;
    int col = cols[static_cast<size_t>(k - 1)];
    MPoly<K> acc(vars);
    int pos = 0;
    for (int r = 0; r < m.rows(); ++r) {
        if (!(row_mask & (1u << r))) continue;
        const MPoly<K>& entry = m.at(r, col);
        if (!entry.is_zero()) {
            MPoly<K> sub = det_cofactor_masked(m, row_mask & ~(1u << r), cols, memo);
            if (((pos + k - 1) % 2) == 0)
                acc += entry * sub;
            else
                acc -= entry * sub;
        }
        ++pos;
    }
    memo.emplace(row_mask, acc);
    return acc;
}

template <class K>
MPoly<K> det_cofactor(const Mat<MPoly<K>>& m) {
    if (m.rows() != m.cols()) throw NotSquare("determinant of a non-square matrix");
    if (m.rows() == 0) throw SizeError("empty matrix");
    std::vector<int> cols(static_cast<size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) cols[static_cast<size_t>(j)] = j;
    std::map<uint32_t, MPoly<K>> memo;
    return det_cofactor_masked(m, (uint32_t(1) << m.rows()) - 1, cols, memo);
}

// Fraction-free Bareiss elimination; exact over any field (and over integral
// domains with exact division, which is how the intermediate divisions work).
template <class K>
K det_bareiss(Mat<K> m) {
    if (m.rows() != m.cols()) throw NotSquare("determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0) throw SizeError("empty matrix");
    K prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (qalg::is_zero(m.at(k, k))) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!qalg::is_zero(m.at(i, k))) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return K(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    K d = m.at(n - 1, n - 1);
    return sign < 0 ? K(0) - d : d;
}

template <class K>
struct MinorEntry {
    std::vector<int> rows, cols;
    MPoly<K> minor;
};

namespace detail {
inline void subsets_lex(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    if (k == 0) {
        out.push_back({});
        return;
    }
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
}
} // namespace detail

// All size x size minors (no cofactor signs: plain determinants of the
// submatrices with rows and columns in increasing order).  Row subsets run
// in lexicographic order; the memo is shared across row subsets for each
// column subset.
template <class K>
std::vector<MinorEntry<K>> enumerate_minors(const Mat<MPoly<K>>& m, int size) {
    if (size < 0 || size > std::min(m.rows(), m.cols()))
        throw SizeError("minor size out of range");
    std::vector<std::vector<int>> rsets, csets;
    detail::subsets_lex(m.rows(), size, rsets);
    detail::subsets_lex(m.cols(), size, csets);
    const VarSetPtr& vars = m.e.front().vars();
    std::vector<MinorEntry<K>> out;
    out.reserve(rsets.size() * csets.size());
    for (const auto& cs : csets) {
        std::map<uint32_t, MPoly<K>> memo;
        for (const auto& rs : rsets) {
            uint32_t mask = 0;
            for (int r : rs) mask |= uint32_t(1) << r;
            MPoly<K> d = size == 0 ? MPoly<K>(vars, K(1)) : det_cofactor_masked(m, mask, cs, memo);
            out.push_back({rs, cs, std::move(d)});
        }
    }
    return out;
}

// Reduced row echelon form over a field, in place; returns pivot columns.
// Pivot choice is deterministic: leftmost column, topmost nonzero row.
template <class K>
std::vector<int> rref(Mat<K>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!qalg::is_zero(m.at(i, col))) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        K inv = inverse(m.at(row, col));
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || qalg::is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int rank(Mat<K> m) {
    return static_cast<int>(rref(m).size());
}

// Echelon basis of the right null space: one vector per free column, with a
// 1 in that column, listed by ascending free column.
template <class K>
std::vector<std::vector<K>> null_space(Mat<K> m) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<K>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<K> v(static_cast<size_t>(m.cols()), K(0));
        v[static_cast<size_t>(f)] = K(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = K(0) - m.at(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Elimination over a ring that may have zero divisors: only verified units
// are used as pivots.  `certified` is false when nonzero non-unit entries
// were left un-eliminated, in which case `rank` is only a lower bound.
template <class T>
struct RingEchelon {
    Mat<T> m;
    std::vector<int> pivot_cols;
    int rank = 0;
    bool certified = true;
};

template <class T>
RingEchelon<T> ring_echelon(Mat<T> m) {
    RingEchelon<T> res;
    int row = 0;
    std::vector<int> pivots;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        std::optional<T> pinv;
        for (int i = row; i < m.rows(); ++i) {
            if (is_zero(m.at(i, col))) continue;
            auto inv = try_inverse(m.at(i, col));
            if (inv) {
                pr = i;
                pinv = inv;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) = (*pinv) * m.at(row, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            T f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    // Anything nonzero left outside the pivot rows defeats certification.
    for (int i = row; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!is_zero(m.at(i, j))) res.certified = false;
    res.rank = static_cast<int>(pivots.size());
    res.pivot_cols = std::move(pivots);
    res.m = std::move(m);
    return res;
}

// Null space over a ring with unit pivots; throws RankError when elimination
// stalls on zero-divisor entries (the basis would not be trustworthy).
template <class T>
std::vector<std::vector<T>> ring_null_space(const Mat<T>& m, const T& zero, const T& one) {
    RingEchelon<T> ech = ring_echelon(m);
    if (!ech.certified) throw RankError("elimination stalled on non-unit entries");
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : ech.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<T>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<T> v(static_cast<size_t>(m.cols()), zero);
        v[static_cast<size_t>(f)] = one;
        for (size_t r = 0; r < ech.pivot_cols.size(); ++r)
            v[static_cast<size_t>(ech.pivot_cols[r])] = zero - ech.m.at(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Rank of a polynomial matrix after substituting tower values for the
// variables.
template <class K, class T, class Conv>
RingEchelon<T> echelon_at(const Mat<MPoly<K>>& m, std::span<const T> point, Conv&& conv) {
    Mat<T> s(m.rows(), m.cols(), conv(K(0)));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s.at(i, j) = m.at(i, j).template eval<T>(point, conv);
    return ring_echelon(std::move(s));
}

} // namespace qalg
