// SPDX-License-Identifier: Apache-2.0
#include "gcodelab/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace gcodelab {

Matrix::Matrix(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(FieldSpec spec, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(spec, 0, cols);
    m.data_.reserve(rows.size() * cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Matrix Matrix::identity(FieldSpec spec, std::size_t n) {
    Matrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void Matrix::append_row(std::span<const Residue> values) {
    if (values.size() != cols_)
        throw std::invalid_argument("row length " + std::to_string(values.size()) + " does not match " +
                                    std::to_string(cols_) + " columns");
    for (Residue v : values) data_.push_back(spec_.reduce(v));
    ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
    if (other.cols_ != cols_ || other.spec_ != spec_) throw std::invalid_argument("cannot stack matrices of different shape");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

std::vector<Vector> Matrix::to_rows() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

Matrix Matrix::transposed() const {
    Matrix t(spec_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RowBasis RowBasis::zero(FieldSpec spec, std::size_t cols) { return RowBasis(Matrix(spec, 0, cols), {}); }

RowBasis RowBasis::full(FieldSpec spec, std::size_t cols) {
    std::vector<std::size_t> pivots(cols);
    for (std::size_t i = 0; i < cols; ++i) pivots[i] = i;
    return RowBasis(Matrix::identity(spec, cols), std::move(pivots));
}

namespace {

// Binary rows of at most 64 columns packed into words; bit c is column c.
Matrix rref_packed_gf2(const Matrix& m, std::vector<std::size_t>& pivots) {
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> rows(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (m(r, c)) rows[r] |= std::uint64_t{1} << c;

    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        std::size_t r = top;
        while (r < rows.size() && !(rows[r] & bit)) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[top], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != top && (rows[i] & bit)) rows[i] ^= rows[top];
        pivots.push_back(c);
        ++top;
    }

    Matrix out(m.spec(), top, cols);
    for (std::size_t r = 0; r < top; ++r)
        for (std::uint64_t w = rows[r]; w; w &= w - 1) out(r, static_cast<std::size_t>(std::countr_zero(w))) = 1;
    return out;
}

}  // namespace

RowBasis rref(const Matrix& input) {
    const FieldSpec& f = input.spec();
    std::vector<std::size_t> pivots;

    if (f.p() == 2 && input.cols() <= 64 && input.rows() > 1) {
        Matrix out = rref_packed_gf2(input, pivots);
        return RowBasis(std::move(out), std::move(pivots));
    }

    Matrix m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows; ++c) {
        std::size_t r = top;
        while (r < rows && m(r, c) == 0) ++r;
        if (r == rows) continue;
        if (r != top)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(top, j));
        if (m(top, c) != 1) {
            const Residue s = f.inv(m(top, c));
            for (std::size_t j = c; j < cols; ++j) m(top, j) = f.mul(m(top, j), s);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == top || m(i, c) == 0) continue;
            const Residue factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (m(top, j)) m(i, j) = f.sub(m(i, j), f.mul(factor, m(top, j)));
        }
        pivots.push_back(c);
        ++top;
    }

    Matrix out(f, 0, cols);
    for (std::size_t r = 0; r < top; ++r) out.append_row(m.row(r));
    return RowBasis(std::move(out), std::move(pivots));
}

std::size_t rank(const Matrix& m) { return rref(m).dim(); }

RowBasis kernel(const Matrix& m) {
    const FieldSpec& f = m.spec();
    const RowBasis reduced = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : reduced.pivots()) is_pivot[c] = true;

    Matrix out(f, 0, cols);
    Vector v(cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < reduced.dim(); ++i) v[reduced.pivots()[i]] = f.neg(reduced.row(i)[free]);
        out.append_row(v);
    }
    return rref(out);
}

RowBasis orthogonal_complement(const RowBasis& a) { return kernel(a.matrix()); }

namespace {

void require_same_ambient(const RowBasis& a, const RowBasis& b) {
    if (a.ambient() != b.ambient() || a.spec() != b.spec())
        throw std::invalid_argument("subspaces live in different ambient spaces (" + std::to_string(a.ambient()) +
                                    " vs " + std::to_string(b.ambient()) + ")");
}

}  // namespace

RowBasis subspace_sum(const RowBasis& a, const RowBasis& b) {
    require_same_ambient(a, b);
    Matrix stacked = a.matrix();
    stacked.append_rows(b.matrix());
    return rref(stacked);
}

RowBasis subspace_intersect(const RowBasis& a, const RowBasis& b) {
    require_same_ambient(a, b);
    // (a^perp + b^perp)^perp; the dot product is nondegenerate on F_p^n.
    return orthogonal_complement(subspace_sum(orthogonal_complement(a), orthogonal_complement(b)));
}

bool contains(const RowBasis& a, std::span<const Residue> v) {
    if (v.size() != a.ambient())
        throw std::invalid_argument("vector of length " + std::to_string(v.size()) + " in ambient space of dimension " +
                                    std::to_string(a.ambient()));
    const FieldSpec& f = a.spec();
    Vector w(v.begin(), v.end());
    for (auto& x : w) x = f.reduce(x);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Residue coef = w[a.pivots()[i]];
        if (coef == 0) continue;
        const auto row = a.row(i);
        for (std::size_t j = 0; j < w.size(); ++j)
            if (row[j]) w[j] = f.sub(w[j], f.mul(coef, row[j]));
    }
    return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

bool is_subspace(const RowBasis& b, const RowBasis& a) {
    require_same_ambient(a, b);
    if (b.dim() > a.dim()) return false;
    for (std::size_t i = 0; i < b.dim(); ++i)
        if (!contains(a, b.row(i))) return false;
    return true;
}

bool equal_spaces(const RowBasis& a, const RowBasis& b) {
    require_same_ambient(a, b);
    return a == b;
}

RowBasis span_of(FieldSpec spec, std::size_t cols, const std::vector<Vector>& rows) {
    return rref(Matrix::from_rows(spec, cols, rows));
}

Residue dot(const FieldSpec& spec, std::span<const Residue> a, std::span<const Residue> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot product of vectors with different lengths");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + static_cast<std::uint64_t>(a[i]) * b[i]) % spec.p();
    return static_cast<Residue>(acc);
}

}  // namespace gcodelab
