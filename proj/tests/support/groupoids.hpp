#pragma once

// Small finite groupoids used by the Steinberg tests.

#include "semihom/steinberg.hpp"

#include <string>
#include <vector>

namespace fixtures {

struct NamedGroupoid {
  std::string name;
  semihom::steinberg::FiniteGroupoid groupoid;
};

inline std::vector<NamedGroupoid> small_groupoids() {
  using namespace semihom::steinberg;
  using semihom::invmon::cyclic_group;
  std::vector<NamedGroupoid> out;
  for (std::size_t n = 1; n <= 3; ++n) out.push_back({"pair:" + std::to_string(n), pair_groupoid(n)});
  for (std::size_t n = 1; n <= 3; ++n) out.push_back({"discrete:" + std::to_string(n), discrete_groupoid(n)});
  out.push_back({"group:z2", group_as_groupoid(cyclic_group(2))});
  out.push_back({"group:z3", group_as_groupoid(cyclic_group(3))});
  out.push_back({"pair:2+discrete:1", disjoint_union(pair_groupoid(2), discrete_groupoid(1))});
  out.push_back({"group:z2+pair:2", disjoint_union(group_as_groupoid(cyclic_group(2)), pair_groupoid(2))});
  return out;
}

}  // namespace fixtures
