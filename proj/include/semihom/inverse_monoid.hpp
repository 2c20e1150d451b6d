#pragma once

// Finite inverse monoids given by validated Cayley tables.

#include "semihom/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace semihom::invmon {

using Elt = std::size_t;

class InverseMonoid {
 public:
  /// Validates the table: every entry in range, `unit` (or a searched-for
  /// identity when absent) two-sided, associativity, and existence and
  /// uniqueness of inverses. Errors name the witnessing elements.
  static InverseMonoid from_table(std::vector<std::vector<Elt>> table,
                                  std::optional<Elt> unit = std::nullopt,
                                  std::vector<std::string> names = {});

  std::size_t size() const { return table_.size(); }
  Elt mul(Elt a, Elt b) const { return table_[a][b]; }
  Elt mul(const std::vector<Elt>& word) const;
  Elt inv(Elt a) const { return inv_[a]; }
  Elt unit() const { return unit_; }
  bool is_idempotent(Elt a) const { return table_[a][a] == a; }
  /// s^-1 s
  Elt dom(Elt s) const { return mul(inv_[s], s); }
  /// s s^-1
  Elt ran(Elt s) const { return mul(s, inv_[s]); }

  const std::vector<std::vector<Elt>>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(Elt a) const;
  /// Sorted idempotents.
  const std::vector<Elt>& idempotents() const { return idempotents_; }
  /// Position of an idempotent in idempotents(); throws if not idempotent.
  std::size_t idempotent_index(Elt e) const;
  bool is_group() const { return idempotents_.size() == 1; }

 private:
  InverseMonoid() = default;

  std::vector<std::vector<Elt>> table_;
  std::vector<Elt> inv_;
  Elt unit_ = 0;
  std::vector<std::string> names_;
  std::vector<Elt> idempotents_;
  std::vector<std::size_t> idem_pos_;
};

/// Partial bijections of {1..n}; ordered by domain bitmask, then by the
/// image tuple (images of the domain points in increasing order) lexicographically.
/// Product is composition s∘t (apply t first) on the largest possible domain.
InverseMonoid symmetric_inverse_monoid(std::size_t n);
/// e_0 > e_1 > ... > e_{n-1}, product is the minimum; unit e_0.
InverseMonoid chain_semilattice(std::size_t n);
/// Z/n with element k standing for k mod n.
InverseMonoid cyclic_group(std::size_t n);
/// Element (a, b) has index a * |t| + b.
InverseMonoid direct_product(const InverseMonoid& s, const InverseMonoid& t);

std::pair<Elt, Elt> dom_range(const InverseMonoid& s, Elt x);
/// s <= t iff s = e t for some idempotent e (exhaustive search).
bool natural_leq(const InverseMonoid& m, Elt s, Elt t);

/// Class index of each element; classes numbered by least member.
struct Partition {
  std::vector<std::size_t> class_of;
  std::size_t count = 0;
  std::vector<std::vector<Elt>> classes() const;
};

/// The equivalence closure of the natural partial order.
Partition sigma_classes(const InverseMonoid& m);

struct GroupImage {
  InverseMonoid group;
  std::vector<Elt> proj;
};

GroupImage max_group_image(const InverseMonoid& m);
bool is_e_unitary(const InverseMonoid& m);

/// A bijection f with f(st) = f(s) f(t), or nullopt. Exhaustive backtracking;
/// intended for small monoids.
std::optional<std::vector<Elt>> find_isomorphism(const InverseMonoid& a, const InverseMonoid& b);

}  // namespace semihom::invmon
