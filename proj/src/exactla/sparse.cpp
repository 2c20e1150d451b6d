#include "semihom/sparse.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace semihom {

SparseMatrix::SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), columns_(cols) {}

SparseMatrix SparseMatrix::from_triplets(FieldSpec field, std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> triplets) {
  SparseMatrix m(field, rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  for (std::size_t i = 0; i < triplets.size();) {
    const std::size_t r = triplets[i].row, c = triplets[i].col;
    if (r >= rows || c >= cols)
      throw InputError("sparse entry (" + std::to_string(r) + "," + std::to_string(c) +
                       ") out of range");
    Scalar sum = Scalar::in(field, 0);
    for (; i < triplets.size() && triplets[i].row == r && triplets[i].col == c; ++i)
      sum += triplets[i].value;
    if (!sum.is_zero()) m.columns_[c].emplace_back(r, std::move(sum));
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
  SparseMatrix m(d.field(), d.rows(), d.cols());
  for (std::size_t c = 0; c < d.cols(); ++c)
    for (std::size_t r = 0; r < d.rows(); ++r)
      if (!d(r, c).is_zero()) m.columns_[c].emplace_back(r, d(r, c));
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

Matrix SparseMatrix::to_dense() const {
  Matrix d(field_, rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) d(r, c) = v;
  return d;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVec& c) { return c.empty(); });
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("sparse product: inner dimension mismatch");
  SparseMatrix m(field_, rows_, o.cols_);
  std::map<std::size_t, Scalar> acc;
  for (std::size_t c = 0; c < o.cols_; ++c) {
    acc.clear();
    for (const auto& [k, b] : o.columns_[c])
      for (const auto& [r, a] : columns_[k]) {
        auto [it, fresh] = acc.try_emplace(r, a * b);
        if (!fresh) it->second += a * b;
      }
    for (auto& [r, v] : acc)
      if (!v.is_zero()) m.columns_[c].emplace_back(r, std::move(v));
  }
  return m;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("sparse sum: shape mismatch");
  std::vector<Triplet> t;
  t.reserve(nonzeros() + o.nonzeros());
  for (const auto* m : {this, &o})
    for (std::size_t c = 0; c < cols_; ++c)
      for (const auto& [r, v] : m->columns_[c]) t.push_back({r, c, v});
  return from_triplets(field_, rows_, cols_, std::move(t));
}

namespace {

// a - f * b for sorted sparse vectors.
SparseVec axpy(const SparseVec& a, const Scalar& f, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Scalar v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t SparseMatrix::rank() const {
  // pivot row -> reduced column whose topmost entry sits in that row
  std::map<std::size_t, SparseVec> pivots;
  for (const auto& col : columns_) {
    SparseVec v = col;
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) break;
      const Scalar f = v.front().second / it->second.front().second;
      v = axpy(v, f, it->second);
    }
    if (!v.empty()) {
      const std::size_t row = v.front().first;
      pivots.emplace(row, std::move(v));
    }
  }
  return pivots.size();
}

}  // namespace semihom
