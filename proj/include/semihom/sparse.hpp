#pragma once

// Column-sparse exact matrices, used for the large boundary maps of chain
// complexes. Ranks are computed by column elimination, which is exact and
// keeps fill-in low for the near-permutation matrices that arise here.

#include "semihom/matrix.hpp"

#include <utility>
#include <vector>

namespace semihom {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by index, no zeros

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  /// Duplicate (row, col) entries are summed; zeros dropped.
  static SparseMatrix from_triplets(FieldSpec field, std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> triplets);
  static SparseMatrix from_dense(const Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  const SparseVec& column(std::size_t c) const { return columns_[c]; }
  std::size_t nonzeros() const;

  Matrix to_dense() const;
  bool is_zero() const;
  /// this * o
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;

  std::size_t rank() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> columns_;
};

}  // namespace semihom
