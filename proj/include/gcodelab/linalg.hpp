// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gcodelab/ffield.hpp"

namespace gcodelab {

using Vector = std::vector<Residue>;

/// Dense row-major matrix over F_p.
class Matrix {
public:
    Matrix(FieldSpec spec, std::size_t rows, std::size_t cols);

    /// Rows must all have length `cols`; entries are reduced mod p.
    static Matrix from_rows(FieldSpec spec, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix identity(FieldSpec spec, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldSpec& spec() const noexcept { return spec_; }

    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    /// Length must equal cols(); entries are reduced mod p.
    void append_row(std::span<const Residue> values);
    /// Stacks the rows of `other` under these.
    void append_rows(const Matrix& other);

    std::vector<Vector> to_rows() const;
    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    FieldSpec spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

/// A subspace of F_p^cols held in reduced row-echelon form with no zero rows.
/// The form is canonical, so two bases are equal iff they span the same space.
class RowBasis {
public:
    static RowBasis zero(FieldSpec spec, std::size_t cols);
    static RowBasis full(FieldSpec spec, std::size_t cols);

    const Matrix& matrix() const noexcept { return matrix_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    const FieldSpec& spec() const noexcept { return matrix_.spec(); }
    std::size_t dim() const noexcept { return matrix_.rows(); }
    std::size_t ambient() const noexcept { return matrix_.cols(); }
    std::span<const Residue> row(std::size_t i) const { return matrix_.row(i); }

    friend bool operator==(const RowBasis&, const RowBasis&) = default;

private:
    friend RowBasis rref(const Matrix& m);
    RowBasis(Matrix m, std::vector<std::size_t> pivots) : matrix_(std::move(m)), pivots_(std::move(pivots)) {}

    Matrix matrix_;
    std::vector<std::size_t> pivots_;
};

/// Gauss-Jordan with leftmost pivot column and topmost pivot row.
RowBasis rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v^T = 0}.
RowBasis kernel(const Matrix& m);
/// Orthogonal complement under the standard dot product.
RowBasis orthogonal_complement(const RowBasis& a);
RowBasis subspace_sum(const RowBasis& a, const RowBasis& b);
RowBasis subspace_intersect(const RowBasis& a, const RowBasis& b);
bool contains(const RowBasis& a, std::span<const Residue> v);
/// True iff every row of b lies in a.
bool is_subspace(const RowBasis& b, const RowBasis& a);
bool equal_spaces(const RowBasis& a, const RowBasis& b);

/// Span of the given vectors.
RowBasis span_of(FieldSpec spec, std::size_t cols, const std::vector<Vector>& rows);

Residue dot(const FieldSpec& spec, std::span<const Residue> a, std::span<const Residue> b);

}  // namespace gcodelab
