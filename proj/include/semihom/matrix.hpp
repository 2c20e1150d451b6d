#pragma once

// Dense exact matrices and the Gaussian-elimination kernel.
//
// Pivoting is deterministic: the pivot of each step is the leftmost column
// with a nonzero entry at or below the current row, and within that column
// the topmost such row. All bases returned below inherit that convention.

#include "semihom/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace semihom {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  /// Throws InputError if entries.size() != rows * cols.
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(FieldSpec field, std::size_t n);
  /// Columns given as vectors of length `rows`.
  static Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_ints(FieldSpec field, std::size_t rows, std::size_t cols,
                          std::initializer_list<long> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> entries() const { return data_; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, std::span<const Scalar> v);

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> idx) const;
  /// [this | other]
  Matrix hstack(const Matrix& other) const;
  /// [this ; other]
  Matrix vstack(const Matrix& other) const;

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(std::span<const Scalar> v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix& operator+=(const Matrix& o);
  bool operator==(const Matrix& o) const;

 private:
  void check_same_shape(const Matrix& o, const char* what) const;

  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t mat_rank(const Matrix& m);
/// Columns form a basis of the right kernel: m * result = 0,
/// result.cols() == m.cols() - rank(m). One column per free variable.
Matrix kernel_basis(const Matrix& m);
/// Pivot columns of m (a basis of its column space, taken from m itself).
Matrix image_basis(const Matrix& m);
/// Some x with m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);
/// Inverse of a square matrix; throws InputError if singular.
Matrix inverse(const Matrix& m);

/// Coordinates with respect to a basis given by the columns of a matrix of
/// full column rank. `coords(v)` is only meaningful for v in the span;
/// `contains` tests membership exactly.
class SubspaceCoordinates {
 public:
  SubspaceCoordinates() = default;
  explicit SubspaceCoordinates(Matrix basis);

  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  /// Throws InternalError if v is not in the span.
  Vector coords(std::span<const Scalar> v) const;
  /// Coordinates of every column of m (each must lie in the span).
  Matrix coords(const Matrix& m) const;
  bool contains(std::span<const Scalar> v) const;

 private:
  Matrix basis_;
  Matrix left_inverse_;  // dim x ambient, left_inverse_ * basis_ == I
};

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);

}  // namespace semihom
