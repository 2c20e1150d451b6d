#include "semihom/quotient.hpp"

#include <string>

namespace semihom {

QuotientSpace quotient_space(std::size_t ambient_dim, const Matrix& span) {
  if (span.rows() != ambient_dim)
    throw InputError("quotient_space: span has " + std::to_string(span.rows()) +
                     " rows, ambient dimension is " + std::to_string(ambient_dim));
  const FieldSpec field = span.field();
  const std::size_t k = span.cols();
  const Echelon e = rref(span.hstack(Matrix::identity(field, ambient_dim)));

  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  std::vector<std::size_t> span_pivots;
  for (auto p : e.pivots) {
    if (p < k)
      span_pivots.push_back(p);
    else
      q.representatives.push_back(p - k);
  }
  q.subspace_basis = span.select_columns(span_pivots);
  q.section = Matrix(field, ambient_dim, q.representatives.size());
  for (std::size_t j = 0; j < q.representatives.size(); ++j)
    q.section(q.representatives[j], j) = Scalar::in(field, 1);

  // [W' | section] is invertible; its inverse's trailing rows read off the
  // complement coordinates.
  const Matrix full_inv = inverse(q.subspace_basis.hstack(q.section));
  const std::size_t r = q.subspace_basis.cols();
  q.projection = Matrix(field, q.representatives.size(), ambient_dim);
  for (std::size_t i = 0; i < q.representatives.size(); ++i)
    for (std::size_t c = 0; c < ambient_dim; ++c) q.projection(i, c) = full_inv(r + i, c);
  return q;
}

bool QuotientSpace::in_subspace(std::span<const Scalar> v) const {
  return is_zero(projection * v);
}

Matrix induced_map(const Matrix& f, const QuotientSpace& dom, const QuotientSpace& cod) {
  if (f.cols() != dom.ambient_dim || f.rows() != cod.ambient_dim)
    throw InputError("induced_map: map shape does not match the quotient spaces");
  if (!(cod.projection * (f * dom.subspace_basis)).is_zero())
    throw InputError("subspace not preserved");
  return cod.projection * f * dom.section;
}

}  // namespace semihom
