#pragma once

// Unital actions of inverse monoids on algebras, and partial group actions.

#include "semihom/algebra.hpp"

#include <memory>
#include <string>

namespace semihom::crossprod {

/// theta[s] is the total matrix of x -> theta_s(1_{s^-1} x); it vanishes off
/// 1_{s^-1}A and has image 1_sA.
struct UnitalAction {
  std::shared_ptr<const InverseMonoid> monoid;
  Algebra algebra;
  std::vector<Vector> one;
  std::vector<Matrix> theta;
};

struct Report {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Every defining identity of a unital action, with witnesses for each failure.
Report validate_action(const UnitalAction& a);
/// T_s and T_t agree on 1_{s^-1}1_{t^-1}A for every sigma-related pair.
bool is_compatible(const UnitalAction& a);

/// Ideal 1A for a central idempotent 1: pivot columns of multiplication by it.
Matrix ideal_basis(const Algebra& a, std::span<const Scalar> idempotent);

/// All 1_s = 1_A and T_s = id.
UnitalAction trivial_action(std::shared_ptr<const InverseMonoid> s, const Algebra& a);
/// I(1) = {0 (empty map), 1 (identity)} on K x K with 1_0 = (1,0) and T_0 the
/// projection onto the first coordinate.
UnitalAction i1_on_pair(FieldSpec field);
/// S acting on KE(S) by 1_s = ss^-1 and T_s(e) = s e s^-1.
UnitalAction conjugation_action(std::shared_ptr<const InverseMonoid> s, FieldSpec field);

/// A partial action of a group: domains D_g = e_g A and maps[g] the total
/// matrix of x -> theta_g(e_{g^-1} x).
struct PartialGroupAction {
  std::shared_ptr<const InverseMonoid> group;
  Algebra algebra;
  std::vector<Vector> domain_unit;
  std::vector<Matrix> maps;

  /// The three partial action axioms, domain shapes and multiplicativity.
  Report check() const;
};

struct InducedAction {
  invmon::GroupImage image;
  PartialGroupAction action;
};

/// Throws InputError("action not compatible") unless is_compatible(a).
/// Throws InternalError if the result is not a partial action.
InducedAction induced_partial_action(const UnitalAction& a);

/// Unit of the ideal sum of e_1 A, ..., e_m A for commuting central idempotents,
/// by inclusion-exclusion over the distinct e_i.
Vector ideal_sum_unit(const Algebra& a, const std::vector<Vector>& idempotents);

}  // namespace semihom::crossprod
