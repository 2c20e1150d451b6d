#pragma once

// Finite-dimensional unital associative algebras given by structure constants,
// and bimodules over them.

#include "semihom/inverse_monoid.hpp"
#include "semihom/matrix.hpp"

namespace semihom::crossprod {

using invmon::Elt;
using invmon::InverseMonoid;

/// b_i b_j = sum_k sc[(i * dim + j) * dim + k] b_k
struct Algebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<Scalar> sc;
  Vector unit;

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return sc[(i * dim + j) * dim + k]; }
  Scalar& c(std::size_t i, std::size_t j, std::size_t k) { return sc[(i * dim + j) * dim + k]; }

  /// Throws InputError("not associative at (i,j,k)") or on a bad unit or shape.
  void validate() const;
  Vector mul(std::span<const Scalar> a, std::span<const Scalar> b) const;
  /// Matrix of x -> a x.
  Matrix left_mult(std::span<const Scalar> a) const;
  /// Matrix of x -> x a.
  Matrix right_mult(std::span<const Scalar> a) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(field, dim, i); }
  bool is_commutative() const;
  bool operator==(const Algebra&) const = default;
};

/// Algebra with the given products of basis elements (each a coefficient vector).
Algebra algebra_from_products(FieldSpec field, std::size_t dim,
                              const std::vector<std::vector<Vector>>& products, Vector unit);

Algebra ground_field(FieldSpec field);
/// K^n with pointwise product, basis the coordinate idempotents.
Algebra diagonal_algebra(FieldSpec field, std::size_t n);
/// n x n matrices, basis e_ij in row-major order.
Algebra matrix_algebra(FieldSpec field, std::size_t n);
/// K[x]/(x^2), basis 1, x.
Algebra dual_numbers(FieldSpec field);
/// KS with basis the monoid elements.
Algebra semigroup_algebra(const InverseMonoid& s, FieldSpec field);
/// KE(S) with basis the idempotents in idempotents() order.
Algebra semilattice_algebra(const InverseMonoid& s, FieldSpec field);

/// left[i] is x -> b_i x, right[i] is x -> x b_i.
struct Bimodule {
  Algebra algebra;
  std::size_t dim = 0;
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  /// Throws InputError("bimodule axioms fail: ...").
  void validate() const;
  Matrix left_of(std::span<const Scalar> a) const;
  Matrix right_of(std::span<const Scalar> a) const;
};

Bimodule regular_bimodule(const Algebra& a);

}  // namespace semihom::crossprod
