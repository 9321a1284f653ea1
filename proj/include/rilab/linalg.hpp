#pragma once

#include <cstring>
#include <vector>

#include "rilab/field.hpp"

namespace rilab {

namespace detail {
inline void axpy_acc(uint64_t* acc, const uint32_t* row, uint64_t c, size_t n) {
    for (size_t i = 0; i < n; ++i) acc[i] += c * row[i];
}
}  // namespace detail

// Growing row-reduced subspace of k^n. Rows are forward-reduced on insert
// (each new row is reduced against all stored rows before being kept);
// finalize() back-eliminates so the stored rows form a full reduced echelon
// basis, after which the coordinate of a vector on stored row i is its value
// at pivot column i. The F_p path accumulates eliminations lazily in uint64;
// exactness is unconditional.
template <class K>
class RowSpace {
  public:
    using Elem = typename K::Elem;

    RowSpace(const K& field, size_t cols) : field_(field), cols_(cols) {
        if constexpr (std::is_same_v<K, Fp>) {
            p_ = static_cast<uint64_t>(field.characteristic());
            max_lazy_ = p_ > 1 ? ~uint64_t(0) / (p_ * p_) : ~uint64_t(0);
            if (max_lazy_ < 2) max_lazy_ = 2;
        }
    }

    size_t cols() const { return cols_; }
    size_t rank() const { return pivots_.size(); }
    int pivot(size_t row) const { return pivots_[row]; }
    const std::vector<Elem>& row(size_t i) const { return rows_[i]; }

    // Reduce v against the stored rows in place (in insertion order); returns
    // true if the residual is nonzero.
    bool reduce(std::vector<Elem>& v) const {
        if (rows_.empty()) return !all_zero(v);
        if constexpr (std::is_same_v<K, Fp>) {
            std::vector<uint64_t> acc(v.begin(), v.end());
            eliminate(acc, 0);
            bool nonzero = false;
            for (size_t i = 0; i < cols_; ++i) {
                v[i] = static_cast<Elem>(acc[i] % p_);
                nonzero |= v[i] != 0;
            }
            return nonzero;
        } else {
            for (size_t r = 0; r < rows_.size(); ++r) {
                Elem c = v[pivots_[r]];
                if (field_.is_zero(c)) continue;
                for (size_t i = 0; i < cols_; ++i)
                    v[i] = field_.sub(v[i], field_.mul(c, rows_[r][i]));
            }
            return !all_zero(v);
        }
    }

    // Insert v; returns the stored row index, or -1 if v is dependent.
    int insert(std::vector<Elem> v) {
        if (!reduce(v)) return -1;
        size_t piv = 0;
        while (field_.is_zero(v[piv])) ++piv;
        Elem inv = field_.inv(v[piv]);
        for (auto& x : v) x = field_.mul(x, inv);
        rows_.push_back(std::move(v));
        pivots_.push_back(static_cast<int>(piv));
        finalized_ = rows_.size() == 1;
        return static_cast<int>(rows_.size()) - 1;
    }

    bool contains(std::vector<Elem> v) const { return !reduce(v); }

    // Back-eliminate rows [from, to) against each other, leaving other rows
    // untouched (so a block keeps spanning exactly what was inserted into it).
    void finalize_range(size_t from, size_t to) {
        if (to > rows_.size()) to = rows_.size();
        if (from + 1 >= to) return;
        if constexpr (std::is_same_v<K, Fp>) {
            std::vector<uint64_t> acc(cols_);
            for (size_t i = to - 1; i-- > from;) {
                acc.assign(rows_[i].begin(), rows_[i].end());
                uint64_t lazy = 0;
                for (size_t r = i + 1; r < to; ++r) {
                    uint64_t c = acc[pivots_[r]] % p_;
                    if (!c) continue;
                    if (++lazy >= max_lazy_) {
                        for (auto& x : acc) x %= p_;
                        lazy = 1;
                    }
                    detail::axpy_acc(acc.data(), rows_[r].data(), p_ - c, cols_);
                }
                for (size_t j = 0; j < cols_; ++j) rows_[i][j] = static_cast<Elem>(acc[j] % p_);
            }
        } else {
            for (size_t i = to - 1; i-- > from;) {
                for (size_t r = i + 1; r < to; ++r) {
                    Elem c = rows_[i][pivots_[r]];
                    if (field_.is_zero(c)) continue;
                    for (size_t j = 0; j < cols_; ++j)
                        rows_[i][j] = field_.sub(rows_[i][j], field_.mul(c, rows_[r][j]));
                }
            }
        }
    }

    void finalize() {
        finalize_range(0, rows_.size());
        finalized_ = true;
    }

    // Coordinates of v on the tracked rows [first, end) modulo the span of
    // rows [0, first). Requires finalize_range on both blocks; valid when v
    // lies in the span of all stored rows.
    std::vector<Elem> quotient_coordinates(const std::vector<Elem>& v, size_t first) const {
        std::vector<Elem> out;
        out.reserve(rows_.size() - first);
        for (size_t i = first; i < rows_.size(); ++i) {
            Elem c = v[pivots_[i]];
            for (size_t k = 0; k < first; ++k) {
                const Elem& b = rows_[k][pivots_[i]];
                if (!field_.is_zero(b)) c = field_.sub(c, field_.mul(b, v[pivots_[k]]));
            }
            out.push_back(c);
        }
        return out;
    }

  private:
    K field_;
    size_t cols_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<int> pivots_;
    bool finalized_ = true;
    uint64_t p_ = 0;
    uint64_t max_lazy_ = 0;

    bool all_zero(const std::vector<Elem>& v) const {
        for (auto& x : v)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    void eliminate(std::vector<uint64_t>& acc, size_t from) const {
        if constexpr (std::is_same_v<K, Fp>) {
            uint64_t lazy = 0;
            for (size_t r = from; r < rows_.size(); ++r) {
                uint64_t c = acc[pivots_[r]] % p_;
                if (!c) continue;
                if (++lazy >= max_lazy_) {
                    for (auto& x : acc) x %= p_;
                    lazy = 1;
                }
                detail::axpy_acc(acc.data(), rows_[r].data(), p_ - c, cols_);
            }
        }
    }
};

// Small dense matrix with exact Gaussian elimination: rank, solve, nullspace.
template <class K>
class DenseMat {
  public:
    using Elem = typename K::Elem;

    DenseMat(const K& field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows, std::vector<Elem>(cols, field.zero())) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Elem& at(size_t i, size_t j) { return a_[i][j]; }
    const Elem& at(size_t i, size_t j) const { return a_[i][j]; }

    size_t rank() const {
        DenseMat tmp = *this;
        return tmp.rref();
    }

    // In-place reduced row echelon; returns rank, records pivot columns.
    // Rows may end up with pivot columns out of order; every pivot column is
    // cleared in all other rows, which is what solve/nullspace rely on.
    size_t rref() {
        pivot_cols_.clear();
        if constexpr (std::is_same_v<K, Fp>) {
            RowSpace<K> rs(field_, cols_);
            for (auto& row : a_) rs.insert(row);
            rs.finalize();
            size_t rank = rs.rank();
            for (size_t i = 0; i < rows_; ++i) {
                if (i < rank) {
                    a_[i] = rs.row(i);
                    pivot_cols_.push_back(static_cast<size_t>(rs.pivot(i)));
                } else {
                    std::fill(a_[i].begin(), a_[i].end(), field_.zero());
                }
            }
            return rank;
        } else {
            size_t r = 0;
            for (size_t c = 0; c < cols_ && r < rows_; ++c) {
                size_t sel = r;
                while (sel < rows_ && field_.is_zero(a_[sel][c])) ++sel;
                if (sel == rows_) continue;
                std::swap(a_[sel], a_[r]);
                Elem inv = field_.inv(a_[r][c]);
                for (size_t j = c; j < cols_; ++j) a_[r][j] = field_.mul(a_[r][j], inv);
                for (size_t i = 0; i < rows_; ++i) {
                    if (i == r || field_.is_zero(a_[i][c])) continue;
                    Elem f = a_[i][c];
                    for (size_t j = c; j < cols_; ++j)
                        a_[i][j] = field_.sub(a_[i][j], field_.mul(f, a_[r][j]));
                }
                pivot_cols_.push_back(c);
                ++r;
            }
            return r;
        }
    }

    const std::vector<size_t>& pivot_cols() const { return pivot_cols_; }

    // Basis of the right nullspace {x : A x = 0}.
    std::vector<std::vector<Elem>> nullspace() const {
        DenseMat tmp = *this;
        size_t rank = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : tmp.pivot_cols_) is_pivot[c] = true;
        std::vector<std::vector<Elem>> basis;
        for (size_t free_c = 0; free_c < cols_; ++free_c) {
            if (is_pivot[free_c]) continue;
            std::vector<Elem> x(cols_, field_.zero());
            x[free_c] = field_.one();
            for (size_t r = 0; r < rank; ++r)
                x[tmp.pivot_cols_[r]] = field_.neg(tmp.a_[r][free_c]);
            basis.push_back(std::move(x));
        }
        return basis;
    }

    // One solution of A x = b, if any.
    bool solve(const std::vector<Elem>& b, std::vector<Elem>& x) const {
        DenseMat aug(field_, rows_, cols_ + 1);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) aug.a_[i][j] = a_[i][j];
            aug.a_[i][cols_] = b[i];
        }
        size_t rank = aug.rref();
        for (size_t r = 0; r < rank; ++r)
            if (aug.pivot_cols_[r] == cols_) return false;  // inconsistent
        x.assign(cols_, field_.zero());
        for (size_t r = 0; r < rank; ++r) x[aug.pivot_cols_[r]] = aug.a_[r][cols_];
        return true;
    }

    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  private:
    K field_;
    size_t rows_, cols_;
    std::vector<std::vector<Elem>> a_;
    std::vector<size_t> pivot_cols_;
};

}  // namespace rilab
