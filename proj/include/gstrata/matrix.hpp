#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gstrata/field.hpp"

namespace gstrata {

/// Dense row-major matrix over a FieldSpec. Entries are normalized into the
/// field on construction and never mutated afterwards.
class Matrix {
 public:
  Matrix() : Matrix(FieldSpec::rational(), 0, 0) {}
  /// Zero matrix.
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_ints(FieldSpec field, std::size_t rows, std::size_t cols,
                          std::span<const long> entries);
  static Matrix from_ints(FieldSpec field, std::size_t rows, std::size_t cols,
                          std::initializer_list<long> entries) {
    return from_ints(field, rows, cols, std::span<const long>(entries.begin(), entries.size()));
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const noexcept { return data_; }
  bool is_zero() const;

  Matrix transpose() const;
  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  Matrix row_block(std::size_t first, std::size_t count) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  bool operator==(const Matrix& other) const;

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Horizontal concatenation; all blocks must share rows and field.
Matrix hconcat(std::span<const Matrix> blocks);
Matrix vconcat(std::span<const Matrix> blocks);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

std::size_t rank(const Matrix& m);
RrefResult rref(const Matrix& m);
/// Columns form the canonical (column-echelon) basis of the right null space.
Matrix kernel(const Matrix& m);
/// Canonical basis of the column span: transpose of the nonzero rows of
/// rref(transpose(m)). Equal spans give entry-wise equal matrices.
Matrix canonical_column_basis(const Matrix& m);
/// Inverse of a square matrix; throws RankDeficient if singular.
Matrix inverse(const Matrix& m);

Matrix column_span_sum(std::span<const Matrix> spans);
Matrix column_span_intersection(std::span<const Matrix> spans);

}  // namespace gstrata
