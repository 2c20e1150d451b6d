#pragma once

// The left KS-module structures carried by a bimodule M over A x_theta S:
// s.x = (1_s delta_s) x (1_{s^-1} delta_{s^-1}), and its restrictions to
// M/[A,M] and M^A.

#include "semihom/crossed_product.hpp"
#include "semihom/ks_module.hpp"

namespace semihom::crossprod {

/// Throws InputError("bimodule axioms fail: ...") if m is not a bimodule over
/// c.algebra or the induced action is not a left module.
monhom::KSModule module_as_ks(const Bimodule& m, const CrossedProduct& c);

/// A bimodule over A x S from action matrices indexed by the L basis.
/// Throws InputError("N does not act by zero") unless every element of N acts
/// trivially on both sides.
Bimodule bimodule_from_l(const CrossedProduct& c, std::size_t dim, const std::vector<Matrix>& left_l,
                         const std::vector<Matrix>& right_l);

struct Coinvariants {
  QuotientSpace quotient;  // M / [A, M]
  monhom::KSModule module;
};

Coinvariants coinvariants(const Bimodule& m, const CrossedProduct& c);

struct Invariants {
  Matrix basis;  // columns span M^A inside M
  monhom::KSModule module;
};

Invariants invariants_sub(const Bimodule& m, const CrossedProduct& c);

}  // namespace semihom::crossprod
