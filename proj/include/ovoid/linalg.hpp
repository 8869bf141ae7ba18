// Dense matrices over a constructed field: reduced echelon form, rank,
// kernels, and seeded random invertible matrices.
#pragma once

#include "ovoid/field.hpp"

#include <random>
#include <vector>

namespace ovoid {

class Mat {
public:
    Mat(FieldPtr f, size_t rows, size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(FieldPtr f, size_t k) {
        Mat m(std::move(f), k, k);
        for (size_t i = 0; i < k; ++i) m.at(i, i) = 1;
        return m;
    }

    static Mat from_rows(FieldPtr f, const std::vector<std::vector<u32>>& rows) {
        size_t c = rows.empty() ? 0 : rows[0].size();
        Mat m(std::move(f), rows.size(), c);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
            for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    u32& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    u32 at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    const u32* row_ptr(size_t i) const { return a_.data() + i * cols_; }

    Elem elem_at(size_t i, size_t j) const { return Elem(field_.get(), at(i, j)); }

    Mat transpose() const {
        Mat t(field_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (!field_->same_as(*o.field_)) throw std::invalid_argument("matrices over different fields");
        if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
        const Field& f = *field_;
        Mat r(field_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                u32 v = at(i, k);
                if (v == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = f.add(r.at(i, j), f.mul(v, o.at(k, j)));
            }
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    bool is_zero() const {
        for (u32 v : a_)
            if (v) return false;
        return true;
    }

private:
    FieldPtr field_;
    size_t rows_, cols_;
    std::vector<u32> a_;
};

struct RrefResult {
    Mat reduced;
    int rank;
    std::vector<size_t> pivot_columns;
};

// Gauss-Jordan form with first-nonzero pivoting in column order.
inline RrefResult rref(const Mat& m) {
    const Field& f = *m.field();
    Mat r = m;
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        size_t piv = r.rows();
        for (size_t i = row; i < r.rows(); ++i)
            if (r.at(i, col) != 0) { piv = i; break; }
        if (piv == r.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j < r.cols(); ++j) std::swap(r.at(row, j), r.at(piv, j));
        u32 il = f.inv(r.at(row, col));
        for (size_t j = 0; j < r.cols(); ++j) r.at(row, j) = f.mul(r.at(row, j), il);
        for (size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col) == 0) continue;
            u32 fac = r.at(i, col);
            for (size_t j = 0; j < r.cols(); ++j) r.at(i, j) = f.sub(r.at(i, j), f.mul(fac, r.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), static_cast<int>(pivots.size()), std::move(pivots)};
}

inline int rank(const Mat& m) { return rref(m).rank; }

// Rows form a basis of the right kernel {x : M x^T = 0}.
inline Mat kernel_basis(const Mat& m) {
    auto rr = rref(m);
    const Field& f = *m.field();
    size_t c = m.cols();
    std::vector<bool> is_pivot(c, false);
    for (size_t pc : rr.pivot_columns) is_pivot[pc] = true;
    Mat out(m.field(), c - rr.pivot_columns.size(), c);
    size_t row = 0;
    for (size_t fc = 0; fc < c; ++fc) {
        if (is_pivot[fc]) continue;
        out.at(row, fc) = 1;
        for (size_t i = 0; i < rr.pivot_columns.size(); ++i)
            out.at(row, rr.pivot_columns[i]) = f.neg(rr.reduced.at(i, fc));
        ++row;
    }
    return out;
}

// The nonzero rows of the reduced form are a canonical spanning set, so
// two matrices generate the same row space iff these agree.
inline bool row_space_equal(const Mat& a, const Mat& b) {
    if (!a.field()->same_as(*b.field()) || a.cols() != b.cols()) return false;
    auto ra = rref(a), rb = rref(b);
    if (ra.rank != rb.rank) return false;
    for (int i = 0; i < ra.rank; ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (ra.reduced.at(i, j) != rb.reduced.at(i, j)) return false;
    return true;
}

// Seeded rejection sampling; the invertibility retry rate is bounded for
// every field size.
inline Mat random_invertible(FieldPtr f, size_t k, u64 seed) {
    if (k < 1) throw std::invalid_argument("size must be at least 1");
    std::mt19937_64 rng(seed);
    Mat m(f, k, k);
    for (;;) {
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) m.at(i, j) = static_cast<u32>(rng() % f->size());
        if (rank(m) == static_cast<int>(k)) return m;
    }
}

} // namespace ovoid
