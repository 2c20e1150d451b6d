#pragma once

// Shared fixtures: the built-in monoids of order at most 7 and a family of
// small coefficient modules over each.

#include "semihom/ks_module.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fixtures {

using semihom::FieldSpec;
using semihom::invmon::InverseMonoid;
using semihom::monhom::KSModule;

struct NamedMonoid {
  std::string name;
  std::shared_ptr<const InverseMonoid> monoid;
};

struct NamedModule {
  std::string name;
  KSModule module;
};

inline std::shared_ptr<const InverseMonoid> share(InverseMonoid m) {
  return std::make_shared<const InverseMonoid>(std::move(m));
}

inline std::vector<NamedMonoid> small_monoids() {
  using namespace semihom::invmon;
  std::vector<NamedMonoid> out;
  for (std::size_t n = 1; n <= 7; ++n) out.push_back({"chain:" + std::to_string(n), share(chain_semilattice(n))});
  for (std::size_t n = 2; n <= 7; ++n) out.push_back({"z:" + std::to_string(n), share(cyclic_group(n))});
  out.push_back({"i:1", share(symmetric_inverse_monoid(1))});
  out.push_back({"i:2", share(symmetric_inverse_monoid(2))});
  out.push_back({"chain:2*z:2", share(direct_product(chain_semilattice(2), cyclic_group(2)))});
  out.push_back({"chain:2*z:3", share(direct_product(chain_semilattice(2), cyclic_group(3)))});
  out.push_back({"chain:3*z:2", share(direct_product(chain_semilattice(3), cyclic_group(2)))});
  out.push_back({"chain:2*chain:2", share(direct_product(chain_semilattice(2), chain_semilattice(2)))});
  out.push_back({"z:2*z:2", share(direct_product(cyclic_group(2), cyclic_group(2)))});
  out.push_back({"z:2*z:3", share(direct_product(cyclic_group(2), cyclic_group(3)))});
  out.push_back({"i:1*z:2", share(direct_product(symmetric_inverse_monoid(1), cyclic_group(2)))});
  return out;
}

/// Left modules of dimension at most 6: the trivial character, KE(S), the
/// regular module and direct sums of these, whichever fit.
inline std::vector<NamedModule> test_modules(const std::shared_ptr<const InverseMonoid>& s, FieldSpec f) {
  using namespace semihom::monhom;
  std::vector<NamedModule> out;
  const KSModule triv = trivial_character(s, f);
  const KSModule ke = trivial_module_ke(s, f);
  out.push_back({"trivial", triv});
  if (ke.dim <= 6) out.push_back({"ke", ke});
  if (s->size() <= 6) out.push_back({"regular", regular_module(s, f)});
  if (ke.dim + 1 <= 6) out.push_back({"trivial+ke", direct_sum(triv, ke)});
  if (2 * ke.dim <= 6) out.push_back({"ke+ke", direct_sum(ke, ke)});
  if (s->size() + 1 <= 6) out.push_back({"trivial+regular", direct_sum(triv, regular_module(s, f))});
  return out;
}

}  // namespace fixtures
