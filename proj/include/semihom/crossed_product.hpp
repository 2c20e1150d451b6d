#pragma once

// The crossed product A x_theta S = L(A, theta, S) / N, the skew group
// algebra of a partial group action, and the comparison map between them.

#include "semihom/action.hpp"
#include "semihom/quotient.hpp"

namespace semihom::crossprod {

struct CrossedProduct {
  UnitalAction action;
  /// ideal[s].basis(): pivot basis of 1_sA.
  std::vector<SubspaceCoordinates> ideal;
  /// L basis: block s occupies [offset[s], offset[s+1]); element (s, j) is
  /// ideal[s] column j times delta_s.
  std::vector<std::size_t> offset;
  QuotientSpace n_space;
  Algebra algebra;
  /// dim(A x S) x dim(A): a -> class of a delta_1.
  Matrix embed_a;
  /// Class of 1_s delta_s.
  std::vector<Vector> gamma;

  std::size_t l_dim() const { return offset.back(); }
  /// L coordinates of a delta_s (a must lie in 1_sA).
  Vector lift(Elt s, std::span<const Scalar> a) const;
  /// Product in L of two coordinate vectors.
  Vector l_mul(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// Monoid element labelling an L coordinate.
  Elt block_of(std::size_t l_index) const;
};

/// Throws InputError("action invalid: ...") when validate_action fails and
/// InternalError("induced multiplication ill-defined") if N is not an ideal.
CrossedProduct crossed_product(const UnitalAction& a);

struct SkewGroupAlgebra {
  PartialGroupAction action;
  std::vector<SubspaceCoordinates> domain;  // pivot basis of D_g
  std::vector<std::size_t> offset;
  Algebra algebra;

  /// Coordinates of a delta_g (a must lie in D_g).
  Vector lift(Elt g, std::span<const Scalar> a) const;
};

/// Throws InputError("not associative at ...") if the data do not give an
/// associative algebra.
SkewGroupAlgebra skew_group_algebra(const PartialGroupAction& p);

struct PhiReport {
  CrossedProduct crossed;
  InducedAction induced;
  SkewGroupAlgebra skew;
  Matrix phi;
  bool homomorphism = false;
  bool surjective = false;
  bool bimodule_map = false;
  bool bijective = false;
};

/// a delta_s + N -> a delta_[s]. Throws InputError("action not compatible").
PhiReport phi_map(const UnitalAction& a);

struct KsReport {
  InducedAction induced;  // partial action of G(S) on KE(S)
  SkewGroupAlgebra skew;
  Matrix phi;             // KS -> KE(S) x G(S), s -> ss^-1 delta_[s]
  bool bijective = false;
  bool homomorphism = false;
  bool bimodule_map = false;
  bool ok() const { return bijective && homomorphism && bimodule_map; }
};

/// Throws InputError("not E-unitary").
KsReport ks_as_crossed_product(std::shared_ptr<const InverseMonoid> s, FieldSpec field);

/// L -> A^{sigma-classes}: x -> (sum of the A-components of x over each class).
/// Row class * dim(A) + k.
Matrix sigma_sum_map(const CrossedProduct& c);
/// Whether the coefficients of x over each sigma-class of S sum to zero in A.
bool sigma_class_sums_vanish(const CrossedProduct& c, std::span<const Scalar> x);

}  // namespace semihom::crossprod
