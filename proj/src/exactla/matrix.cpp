#include "semihom/matrix.hpp"

#include <string>

namespace semihom {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::in(field, 0)) {}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw InputError("matrix declared " + std::to_string(rows) + "x" + std::to_string(cols) +
                     " but has " + std::to_string(data_.size()) + " entries");
  const Scalar zero = Scalar::in(field, 0);
  for (auto& x : data_) x += zero;  // tag with the field's characteristic
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::in(field, 1);
  return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::from_ints(FieldSpec field, std::size_t rows, std::size_t cols,
                         std::initializer_list<long> entries) {
  std::vector<Scalar> data;
  data.reserve(entries.size());
  for (long v : entries) data.push_back(Scalar::in(field, v));
  return Matrix(field, rows, cols, std::move(data));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_) throw InputError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < idx.size(); ++k) m(r, k) = (*this)(r, idx[k]);
  return m;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (o.rows_ != rows_) throw InputError("hstack: row count mismatch");
  Matrix m(field_, rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < o.cols_; ++c) m(r, cols_ + c) = o(r, c);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (o.cols_ != cols_) throw InputError("vstack: column count mismatch");
  Matrix m(field_, rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), m.data_.begin() + data_.size());
  return m;
}

bool Matrix::is_zero() const { return semihom::is_zero(data_); }

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw InputError("matrix product: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " times " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (!b.is_zero()) m(r, c) += a * b;
      }
    }
  return m;
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw InputError("matrix-vector product: length mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  return out;
}

void Matrix::check_same_shape(const Matrix& o, const char* what) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InputError(std::string(what) + ": shape mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m = *this;
  return m += o;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_same_shape(o, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(o, "matrix difference");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

Echelon rref(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t mat_rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.field(), n);
    v[f] = Scalar::in(m.field(), 1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.field(), n, basis);
}

Matrix image_basis(const Matrix& m) {
  const Echelon e = rref(m);
  return m.select_columns(e.pivots);
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  const Echelon e = rref(m.hstack(Matrix::identity(m.field(), n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InputError("matrix is singular");
  std::vector<std::size_t> right(n);
  for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
  return e.reduced.select_columns(right);
}

SubspaceCoordinates::SubspaceCoordinates(Matrix basis) : basis_(std::move(basis)) {
  const std::size_t k = basis_.cols();
  // Independent rows of the basis give an invertible k x k minor.
  const Echelon e = rref(basis_.transpose());
  if (e.pivots.size() != k) throw InputError("subspace basis is not linearly independent");
  Matrix minor(basis_.field(), k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) minor(i, j) = basis_(e.pivots[i], j);
  const Matrix minv = inverse(minor);
  left_inverse_ = Matrix(basis_.field(), k, basis_.rows());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) left_inverse_(i, e.pivots[j]) = minv(i, j);
}

Vector SubspaceCoordinates::coords(std::span<const Scalar> v) const {
  Vector c = left_inverse_ * v;
  if (basis_ * c != Vector(v.begin(), v.end()))
    throw InternalError("vector does not lie in the expected subspace");
  return c;
}

Matrix SubspaceCoordinates::coords(const Matrix& m) const {
  Matrix c = left_inverse_ * m;
  if (!(basis_ * c == m)) throw InternalError("columns do not lie in the expected subspace");
  return c;
}

bool SubspaceCoordinates::contains(std::span<const Scalar> v) const {
  return basis_ * (left_inverse_ * v) == Vector(v.begin(), v.end());
}

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, Scalar::in(field, 0)); }

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v[i] = Scalar::in(field, 1);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace semihom
