#pragma once

// Hochschild (co)homology of a finite-dimensional algebra with coefficients in
// a bimodule, separability, and the collapse comparisons with inverse monoid
// (co)homology.

#include "semihom/complexes.hpp"
#include "semihom/induced_modules.hpp"

#include <optional>

namespace semihom::crossprod {

/// C_n = M (x) A^{(x)n}, coordinate x * dim(A)^n + (a_1 .. a_n in base dim(A));
/// b(x, a_1..a_n) = (x a_1, a_2..) + sum_i (-1)^i (.., a_i a_{i+1}, ..) + (-1)^n (a_n x, a_1..a_{n-1}).
/// Spaces 0..top; block_offsets is left empty.
monhom::ChainComplexData hochschild_chain_complex(const Bimodule& m, std::size_t top,
                                                  std::size_t column_cap = monhom::kDefaultColumnCap);
/// C^n = Hom(A^{(x)n}, M), coordinate (a_1..a_n) * dim(M) + i;
/// (df)(a_1..a_{n+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..) + (-1)^{n+1} f(a_1..a_n) a_{n+1}.
monhom::ChainComplexData hochschild_cochain_complex(const Bimodule& m, std::size_t top,
                                                    std::size_t column_cap = monhom::kDefaultColumnCap);

std::vector<std::size_t> hochschild_homology(const Bimodule& m, std::size_t max_degree,
                                             std::size_t column_cap = monhom::kDefaultColumnCap);
std::vector<std::size_t> hochschild_cohomology(const Bimodule& m, std::size_t max_degree,
                                               std::size_t column_cap = monhom::kDefaultColumnCap);

/// Coefficients e_ij of some e = sum e_ij b_i (x) b_j with mu(e) = 1 and
/// a e = e a for all a, or nullopt if none exists.
std::optional<Vector> separability_idempotent(const Algebra& a);
bool is_separable(const Algebra& a);

struct CollapseReport {
  std::vector<std::size_t> lhs;  // inverse monoid side
  std::vector<std::size_t> rhs;  // Hochschild side
  std::size_t coefficient_dim = 0;
  bool pass() const { return lhs == rhs; }
};

/// H_n(S, M/[A,M]) against HH_n(A x S, M). Throws InputError("A not separable").
CollapseReport verify_separable_collapse_homology(const CrossedProduct& c, const Bimodule& m,
                                                  std::size_t max_degree,
                                                  std::size_t column_cap = monhom::kDefaultColumnCap);
/// H^n(S, M^A) against HH^n(A x S, M). Throws InputError("A not separable").
CollapseReport verify_separable_collapse_cohomology(const CrossedProduct& c, const Bimodule& m,
                                                    std::size_t max_degree,
                                                    std::size_t column_cap = monhom::kDefaultColumnCap);

}  // namespace semihom::crossprod
