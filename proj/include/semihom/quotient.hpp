#pragma once

#include "semihom/matrix.hpp"

namespace semihom {

/// V / W for a subspace W of an ambient space V = K^n.
///
/// The quotient basis is the set of standard basis vectors e_j that become
/// pivots when [W | I] is row reduced, i.e. the leftmost standard vectors
/// completing a basis of W. `section` sends quotient coordinates to those
/// representatives; `projection` reads off the quotient coordinates.
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  Matrix subspace_basis;  // ambient x rank(W), independent columns spanning W
  Matrix projection;      // dim x ambient
  Matrix section;         // ambient x dim
  std::vector<std::size_t> representatives;  // ambient index of each section column

  std::size_t dim() const { return projection.rows(); }
  /// Whether v lies in W.
  bool in_subspace(std::span<const Scalar> v) const;
};

/// Throws InputError if span.rows() != ambient_dim.
QuotientSpace quotient_space(std::size_t ambient_dim, const Matrix& span);

/// The unique g with g * dom.projection == cod.projection * f.
/// Throws InputError("subspace not preserved") when f(W_dom) is not inside W_cod.
Matrix induced_map(const Matrix& f, const QuotientSpace& dom, const QuotientSpace& cod);

}  // namespace semihom
