#pragma once

// Finite discrete groupoids, their bisection monoids, the Steinberg algebra
// and its description as a crossed product of the function algebra on the
// unit space.

#include "semihom/hochschild.hpp"

#include <array>
#include <cstdint>
#include <limits>

namespace semihom::steinberg {

using crossprod::Algebra;
using crossprod::Bimodule;
using crossprod::CrossedProduct;
using crossprod::UnitalAction;
using invmon::Elt;
using invmon::InverseMonoid;

inline constexpr std::size_t kNoArrow = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kMaxArrows = 16;

/// Arrow a goes from src[a] to rng[a]; comp[a][b] = ab (first b, then a) or
/// kNoArrow when src[a] != rng[b].
struct FiniteGroupoid {
  std::size_t objects = 0;
  std::vector<std::size_t> src, rng;
  std::vector<std::vector<std::size_t>> comp;
  std::vector<std::size_t> inv;
  std::vector<std::size_t> unit_of;

  std::size_t arrows() const { return src.size(); }
  /// Throws InputError naming the first failing axiom.
  void validate() const;
};

/// Derives unit_of from the composition table and validates.
FiniteGroupoid groupoid_from_data(std::size_t objects, std::vector<std::size_t> src, std::vector<std::size_t> rng,
                                  const std::vector<std::array<std::size_t, 3>>& products,
                                  std::vector<std::size_t> inv);

/// Arrow (i, j) from j to i has index i * n + j.
FiniteGroupoid pair_groupoid(std::size_t n);
/// Throws InputError("not a group") unless g has a single idempotent.
FiniteGroupoid group_as_groupoid(const InverseMonoid& g);
/// Only unit arrows.
FiniteGroupoid discrete_groupoid(std::size_t n);
/// Objects and arrows of b are numbered after those of a.
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

struct Bisections {
  std::vector<std::uint32_t> masks;  // arrow bitmask of each element, increasing
  std::shared_ptr<const InverseMonoid> monoid;

  std::size_t index_of(std::uint32_t mask) const;
};

/// Throws CapError("enumeration cap exceeded") above kMaxArrows arrows.
Bisections bisections(const FiniteGroupoid& g);

/// K^objects with 1_U the indicator of r(U) and T_U e_x = e_{theta_U(x)}.
UnitalAction induced_action_hat(const FiniteGroupoid& g, const Bisections& b, FieldSpec field);

/// Functions on arrows with convolution; point masses multiply as arrows compose.
Algebra steinberg_algebra(const FiniteGroupoid& g, FieldSpec field);

/// Matrix of L(X) -> A_K(G), e_x -> point mass at the unit arrow of x.
Matrix unit_space_inclusion(const FiniteGroupoid& g, FieldSpec field);

struct SteinbergData {
  FiniteGroupoid groupoid;
  Bisections bis;
  Algebra lx;
  UnitalAction action_hat;
  Algebra algebra;  // A_K(G)
  CrossedProduct crossed;
};

SteinbergData steinberg_data(const FiniteGroupoid& g, FieldSpec field);

struct PsiReport {
  Matrix psi;  // dim A_K(G) x dim(L(X) x S)
  bool well_defined = false;
  bool indicators = false;  // 1_U * 1_V = 1_{UV} for every pair
  bool bijective = false;
  bool multiplicative = false;
  bool bimodule_map = false;
  bool ok() const { return well_defined && indicators && bijective && multiplicative && bimodule_map; }
};

/// Class of phi delta_U -> (gamma -> [gamma in U] phi(r(gamma))).
/// Throws InternalError("dimension mismatch") if the two algebras differ in size.
PsiReport psi_map(const SteinbergData& d);

/// m over A_K(G) pulled back along psi to a bimodule over the crossed product.
Bimodule transport(const Bimodule& m, const SteinbergData& d, const Matrix& psi);

/// U.x = 1_U x 1_{U^-1}, computed on the A_K(G) side.
monhom::KSModule bisection_module(const Bimodule& m, const SteinbergData& d);

struct SteinbergHomologyReport {
  std::vector<std::size_t> lhs;  // H_n(S^a(G), M / [L(X), M])
  std::vector<std::size_t> rhs;  // HH_n(A_K(G), M)
  std::size_t coefficient_dim = 0;
  bool transport_agrees = false;  // the crossed-product route gives the same module
  bool pass() const { return transport_agrees && lhs == rhs; }
};

struct SteinbergCohomologyReport {
  std::vector<std::size_t> lhs;  // H^n(S^a(G), M^{L(X)}), the row q = 0
  std::vector<std::size_t> rhs;  // HH^n(A_K(G), M)
  std::vector<std::size_t> lx_cohomology;  // HH^q(L(X), M), q = 0..max_degree
  std::size_t coefficient_dim = 0;
  bool transport_agrees = false;
  bool lx_vanishes() const;
  bool pass() const { return transport_agrees && lx_vanishes() && lhs == rhs; }
};

/// m must be a bimodule over steinberg_algebra(g, field).
SteinbergHomologyReport verify_steinberg_homology(const FiniteGroupoid& g, const Bimodule& m,
                                                  std::size_t max_degree,
                                                  std::size_t column_cap = monhom::kDefaultColumnCap);
SteinbergCohomologyReport verify_steinberg_cohomology(const FiniteGroupoid& g, const Bimodule& m,
                                                      std::size_t max_degree,
                                                      std::size_t column_cap = monhom::kDefaultColumnCap);

}  // namespace semihom::steinberg
