#pragma once

// Finite-dimensional modules over the semigroup algebra KS.

#include "semihom/inverse_monoid.hpp"
#include "semihom/matrix.hpp"

#include <memory>

namespace semihom::monhom {

using invmon::Elt;
using invmon::InverseMonoid;

enum class Side { Left, Right };

/// One dim x dim action matrix per monoid element. For a left module
/// act(st) = act(s) act(t); for a right module act(st) = act(t) act(s).
struct KSModule {
  std::shared_ptr<const InverseMonoid> monoid;
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<Matrix> act;
  Side side = Side::Left;

  /// Throws InputError naming the first failing pair.
  void validate() const;
};

/// K E(S) with basis the idempotents (in idempotents() order);
/// left: s.e = s e s^-1, right: e.s = s^-1 e s.
KSModule trivial_module_ke(std::shared_ptr<const InverseMonoid> s, FieldSpec field, Side side = Side::Left);
/// KS acting on itself by left multiplication.
KSModule regular_module(std::shared_ptr<const InverseMonoid> s, FieldSpec field);
/// K with every element acting as 1.
KSModule trivial_character(std::shared_ptr<const InverseMonoid> s, FieldSpec field);
/// Block-diagonal sum of two modules over the same monoid.
KSModule direct_sum(const KSModule& a, const KSModule& b);

}  // namespace semihom::monhom
