#pragma once

#include <optional>
#include <vector>

#include "rilab/groebner.hpp"

namespace rilab {

// Matrix over the polynomial ring. Row/column degree shifts, when present,
// make entries homogeneous of degree col_deg[j] - row_deg[i].
template <class K>
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(Ring<K> ring, size_t rows, size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          a_(rows, std::vector<Poly<K>>(cols, Poly<K>::zero(ring_))) {}

    const Ring<K>& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Poly<K>& at(size_t i, size_t j) { return a_[i][j]; }
    const Poly<K>& at(size_t i, size_t j) const { return a_[i][j]; }

    PolyMatrix transpose() const {
        PolyMatrix t(ring_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.a_[j][i] = a_[i][j];
        return t;
    }

    static PolyMatrix stack(const PolyMatrix& top, const PolyMatrix& bottom) {
        if (top.cols_ != bottom.cols_) throw InputError("stack: column mismatch");
        PolyMatrix s(top.ring_, top.rows_ + bottom.rows_, top.cols_);
        for (size_t i = 0; i < top.rows_; ++i) s.a_[i] = top.a_[i];
        for (size_t i = 0; i < bottom.rows_; ++i) s.a_[top.rows_ + i] = bottom.a_[i];
        return s;
    }

    PolyMatrix submatrix(const std::vector<size_t>& row_idx, const std::vector<size_t>& col_idx) const {
        PolyMatrix s(ring_, row_idx.size(), col_idx.size());
        for (size_t i = 0; i < row_idx.size(); ++i)
            for (size_t j = 0; j < col_idx.size(); ++j) s.a_[i][j] = a_[row_idx[i]][col_idx[j]];
        return s;
    }

    PolyMatrix drop_row(size_t r) const {
        std::vector<size_t> rows;
        for (size_t i = 0; i < rows_; ++i)
            if (i != r) rows.push_back(i);
        std::vector<size_t> cols(cols_);
        for (size_t j = 0; j < cols_; ++j) cols[j] = j;
        return submatrix(rows, cols);
    }

    std::vector<MVec<K>> columns_as_vectors() const {
        std::vector<MVec<K>> out;
        for (size_t j = 0; j < cols_; ++j) {
            std::vector<MTerm<K>> raw;
            for (size_t i = 0; i < rows_; ++i)
                for (auto& t : a_[i][j].terms()) raw.push_back({static_cast<int>(i), t.m, t.c});
            out.push_back(MVec<K>::collect(ring_, std::move(raw)));
        }
        return out;
    }

    static PolyMatrix from_columns(const Ring<K>& ring, size_t rows, const std::vector<MVec<K>>& cols) {
        PolyMatrix m(ring, rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < static_cast<int>(rows); ++i) m.a_[i][j] = cols[j].component(i);
        return m;
    }

    // Row shifts making every column homogeneous, with row 0 shift = base;
    // nullopt when entries are not compatibly homogeneous.
    std::optional<std::vector<int>> infer_row_degrees(int base = 0) const {
        std::vector<int> row_deg(rows_, INT32_MIN);
        row_deg[0] = base;
        // propagate through nonzero entries until stable
        for (size_t pass = 0; pass <= rows_ + cols_; ++pass) {
            bool changed = false;
            std::vector<int> col_deg(cols_, INT32_MIN);
            for (size_t j = 0; j < cols_; ++j)
                for (size_t i = 0; i < rows_; ++i) {
                    if (a_[i][j].is_zero() || row_deg[i] == INT32_MIN) continue;
                    if (!a_[i][j].is_homogeneous()) return std::nullopt;
                    int cd = row_deg[i] + a_[i][j].degree();
                    if (col_deg[j] == INT32_MIN) col_deg[j] = cd;
                    else if (col_deg[j] != cd) return std::nullopt;
                }
            for (size_t j = 0; j < cols_; ++j)
                for (size_t i = 0; i < rows_; ++i) {
                    if (a_[i][j].is_zero() || col_deg[j] == INT32_MIN) continue;
                    int rd = col_deg[j] - a_[i][j].degree();
                    if (row_deg[i] == INT32_MIN) { row_deg[i] = rd; changed = true; }
                    else if (row_deg[i] != rd) return std::nullopt;
                }
            if (!changed) break;
        }
        for (auto& d : row_deg)
            if (d == INT32_MIN) d = base;  // rows of an all-zero stripe
        return row_deg;
    }

    Poly<K> determinant() const {
        if (rows_ != cols_) throw InputError("determinant of non-square matrix");
        if (rows_ == 0) return Poly<K>::constant(ring_, ring_->field.one());
        if (rows_ > 20) throw BudgetError("determinant size beyond cofactor range");
        // cofactor expansion memoized over column subsets
        return det_rec((1u << rows_) - 1, 0);
    }

  private:
    Ring<K> ring_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Poly<K>>> a_;

    mutable std::vector<std::pair<uint32_t, Poly<K>>> det_memo_;

    Poly<K> det_rec(uint32_t colmask, size_t row) const {
        if (row == rows_) return Poly<K>::constant(ring_, ring_->field.one());
        for (auto& [m, p] : det_memo_)
            if (m == colmask) return p;
        Poly<K> acc = Poly<K>::zero(ring_);
        bool negate = false;
        for (size_t j = 0; j < cols_; ++j) {
            if (!(colmask & (1u << j))) continue;
            if (!a_[row][j].is_zero()) {
                Poly<K> sub = det_rec(colmask & ~(1u << j), row + 1);
                Poly<K> term = a_[row][j] * sub;
                acc = negate ? acc - term : acc + term;
            }
            negate = !negate;
        }
        det_memo_.push_back({colmask, acc});
        return acc;
    }
};

// Ideal generators given by all k x k minors.
template <class K>
std::vector<Poly<K>> minors(const PolyMatrix<K>& m, size_t k) {
    if (k == 0) return {Poly<K>::constant(m.ring(), m.ring()->field.one())};
    if (k > m.rows() || k > m.cols()) return {};
    std::vector<Poly<K>> out;
    // enumerate k-subsets of rows and columns
    std::vector<size_t> rsel(k), csel(k);
    auto next_subset = [](std::vector<size_t>& s, size_t n) {
        size_t k2 = s.size();
        size_t i = k2;
        while (i-- > 0) {
            if (s[i] + (k2 - i) < n) {
                ++s[i];
                for (size_t j = i + 1; j < k2; ++j) s[j] = s[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (size_t i = 0; i < k; ++i) rsel[i] = i;
    do {
        for (size_t i = 0; i < k; ++i) csel[i] = i;
        do {
            out.push_back(m.submatrix(rsel, csel).determinant());
        } while (next_subset(csel, m.cols()));
    } while (next_subset(rsel, m.rows()));
    return out;
}

// Signed maximal minors of an n x (n+1) matrix: entry i is (-1)^i times the
// determinant with column i removed, so the vector is a syzygy of the rows.
template <class K>
std::vector<Poly<K>> signed_maximal_minors(const PolyMatrix<K>& m) {
    if (m.cols() != m.rows() + 1) throw InputError("expected an n x (n+1) matrix");
    std::vector<Poly<K>> out;
    std::vector<size_t> rows(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) rows[i] = i;
    for (size_t omit = 0; omit < m.cols(); ++omit) {
        std::vector<size_t> cols;
        for (size_t j = 0; j < m.cols(); ++j)
            if (j != omit) cols.push_back(j);
        Poly<K> d = m.submatrix(rows, cols).determinant();
        out.push_back(omit % 2 ? d.neg() : d);
    }
    return out;
}

}  // namespace rilab
