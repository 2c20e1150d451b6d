#include "doctest.h"
#include "semihom/inverse_monoid.hpp"

#include <map>

using namespace semihom;
using namespace semihom::invmon;

namespace {

Elt find_named(const InverseMonoid& m, const std::string& name) {
  for (Elt a = 0; a < m.size(); ++a)
    if (m.name(a) == name) return a;
  FAIL("no element named " << name);
  return 0;
}

// Every built-in monoid with at most 8 elements.
std::vector<InverseMonoid> small_monoids() {
  std::vector<InverseMonoid> out;
  for (std::size_t n = 1; n <= 7; ++n) out.push_back(chain_semilattice(n));
  for (std::size_t n = 2; n <= 7; ++n) out.push_back(cyclic_group(n));
  out.push_back(symmetric_inverse_monoid(1));
  out.push_back(symmetric_inverse_monoid(2));
  out.push_back(direct_product(chain_semilattice(2), cyclic_group(2)));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  out.push_back(direct_product(chain_semilattice(3), cyclic_group(2)));
  out.push_back(direct_product(chain_semilattice(2), cyclic_group(3)));
  out.push_back(direct_product(chain_semilattice(2), chain_semilattice(2)));
  out.push_back(direct_product(symmetric_inverse_monoid(1), cyclic_group(2)));
  return out;
}

// sigma from its definition: s ~ t iff some u lies below both.
bool sigma_by_definition(const InverseMonoid& m, Elt s, Elt t) {
  for (Elt u = 0; u < m.size(); ++u)
    if (natural_leq(m, u, s) && natural_leq(m, u, t)) return true;
  return false;
}

}  // namespace

TEST_CASE("from_table examples and errors") {
  const auto trivial = InverseMonoid::from_table({{0}});
  CHECK(trivial.size() == 1);
  CHECK(trivial.is_group());

  const auto z2 = InverseMonoid::from_table({{0, 1}, {1, 0}});
  CHECK(z2.inv(0) == 0);
  CHECK(z2.inv(1) == 1);

  // left-zero semigroup {a, b} (xy = x) with a unit adjoined as element 2
  CHECK_THROWS_WITH_AS(InverseMonoid::from_table({{0, 0, 0}, {1, 1, 1}, {0, 1, 2}}),
                       doctest::Contains("inverse not unique"), InputError);
  CHECK_THROWS_WITH_AS(InverseMonoid::from_table({{0, 1}, {0, 1}}), doctest::Contains("no identity"), InputError);
  CHECK_THROWS_WITH_AS(InverseMonoid::from_table({{0, 1, 2}, {1, 2, 2}, {2, 2, 1}}),
                       doctest::Contains("not associative at ("), InputError);
  CHECK_THROWS_AS(InverseMonoid::from_table({{0, 3}, {1, 0}}), InputError);
  CHECK_THROWS_AS(InverseMonoid::from_table({{0, 1}, {1}}), InputError);
}

TEST_CASE("symmetric inverse monoid") {
  CHECK(symmetric_inverse_monoid(0).size() == 1);
  CHECK(symmetric_inverse_monoid(1).size() == 2);
  const auto i2 = symmetric_inverse_monoid(2);
  CHECK(i2.size() == 7);
  CHECK(symmetric_inverse_monoid(3).size() == 34);
  CHECK(i2.idempotents().size() == 4);
  CHECK(i2.name(0) == "[]");

  const Elt swap = find_named(i2, "[1->2,2->1]");
  const Elt id = find_named(i2, "[1->1,2->2]");
  CHECK(i2.unit() == id);
  CHECK(dom_range(i2, swap) == std::pair{id, id});
  const Elt one_two = find_named(i2, "[1->2]");
  CHECK(dom_range(i2, one_two) == std::pair{find_named(i2, "[1->1]"), find_named(i2, "[2->2]")});
  // composition applies the right factor first
  CHECK(i2.mul(swap, find_named(i2, "[1->1]")) == one_two);
  for (Elt e : i2.idempotents()) CHECK(dom_range(i2, e) == std::pair{e, e});
}

TEST_CASE("chain semilattice and products") {
  CHECK(chain_semilattice(1).size() == 1);
  const auto c2 = chain_semilattice(2);
  CHECK(c2.idempotents().size() == 2);
  CHECK(natural_leq(c2, 1, 0));
  CHECK_FALSE(natural_leq(c2, 0, 1));
  CHECK(chain_semilattice(3).mul(1, 2) == 2);
  CHECK(chain_semilattice(3).idempotents().size() == 3);

  const auto p = direct_product(chain_semilattice(2), cyclic_group(2));
  CHECK(p.size() == 4);
  CHECK(is_e_unitary(p));
  CHECK(sigma_classes(p).count == 2);
  const auto gi = max_group_image(p);
  CHECK(gi.group.size() == 2);
  CHECK(find_isomorphism(gi.group, cyclic_group(2)));

  const auto triv = direct_product(chain_semilattice(1), symmetric_inverse_monoid(2));
  CHECK(find_isomorphism(triv, symmetric_inverse_monoid(2)));
  const auto klein = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(klein.is_group());
  CHECK_FALSE(find_isomorphism(klein, cyclic_group(4)));
  for (Elt a = 0; a < 4; ++a) CHECK(klein.mul(a, a) == klein.unit());
}

TEST_CASE("idempotents, order, sigma and E-unitarity examples") {
  CHECK(cyclic_group(2).idempotents() == std::vector<Elt>{0});
  const auto i2 = symmetric_inverse_monoid(2);
  for (Elt t = 0; t < i2.size(); ++t) CHECK(natural_leq(i2, 0, t));
  CHECK(sigma_classes(i2).count == 1);
  CHECK(max_group_image(i2).group.size() == 1);
  CHECK_FALSE(is_e_unitary(i2));
  CHECK(is_e_unitary(chain_semilattice(4)));
  CHECK(sigma_classes(cyclic_group(5)).count == 5);
  const auto gi = max_group_image(cyclic_group(2));
  CHECK(gi.proj == std::vector<Elt>{0, 1});
}

TEST_CASE("property: inverse, order and sigma laws on small monoids") {
  for (const auto& m : small_monoids()) {
    CAPTURE(m.size());
    const std::size_t n = m.size();
    for (Elt s = 0; s < n; ++s) {
      CHECK(m.mul({s, m.inv(s), s}) == s);
      CHECK(m.inv(m.inv(s)) == s);
      CHECK(natural_leq(m, s, s));
    }
    // natural order: antisymmetric, transitive, compatible with products
    for (Elt s = 0; s < n; ++s)
      for (Elt t = 0; t < n; ++t) {
        if (!natural_leq(m, s, t)) continue;
        if (natural_leq(m, t, s)) CHECK(s == t);
        for (Elt u = 0; u < n; ++u) {
          if (natural_leq(m, t, u)) CHECK(natural_leq(m, s, u));
          CHECK(natural_leq(m, m.mul(s, u), m.mul(t, u)));
          CHECK(natural_leq(m, m.mul(u, s), m.mul(u, t)));
        }
      }
    const Partition p = sigma_classes(m);
    for (Elt s = 0; s < n; ++s)
      for (Elt t = 0; t < n; ++t) {
        const bool same = p.class_of[s] == p.class_of[t];
        CHECK(same == sigma_by_definition(m, s, t));
        if (is_e_unitary(m)) {
          const bool crit = m.is_idempotent(m.mul(m.inv(s), t)) && m.is_idempotent(m.mul(s, m.inv(t)));
          CHECK(same == crit);
        }
      }
    // class numbering by least member
    std::size_t next = 0;
    for (Elt s = 0; s < n; ++s) {
      if (p.class_of[s] == next) ++next;
      CHECK(p.class_of[s] < next);
    }
    const auto gi = max_group_image(m);
    CHECK(gi.group.is_group());
    for (Elt s = 0; s < n; ++s)
      for (Elt t = 0; t < n; ++t) CHECK(gi.proj[m.mul(s, t)] == gi.group.mul(gi.proj[s], gi.proj[t]));
    if (m.is_group()) CHECK(find_isomorphism(gi.group, m));
  }
}

TEST_CASE("property: sigma is a congruence and I(3) is not E-unitary") {
  const auto i3 = symmetric_inverse_monoid(3);
  const Partition p = sigma_classes(i3);
  CHECK(p.count == 1);
  CHECK_FALSE(is_e_unitary(i3));
  const auto m = direct_product(chain_semilattice(3), cyclic_group(3));
  const Partition q = sigma_classes(m);
  for (Elt s = 0; s < m.size(); ++s)
    for (Elt s2 = 0; s2 < m.size(); ++s2)
      for (Elt t = 0; t < m.size(); ++t)
        if (q.class_of[s] == q.class_of[s2]) CHECK(q.class_of[m.mul(s, t)] == q.class_of[m.mul(s2, t)]);
}
