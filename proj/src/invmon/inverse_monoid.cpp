#include "semihom/inverse_monoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace semihom::invmon {

namespace {

std::string idx(Elt a) { return std::to_string(a); }

}  // namespace

InverseMonoid InverseMonoid::from_table(std::vector<std::vector<Elt>> table, std::optional<Elt> unit,
                                        std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("empty table (a monoid needs a unit)");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw InputError("table row " + idx(i) + " has " + idx(table[i].size()) + " entries, expected " +
                       idx(n));
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] >= n)
        throw InputError("table entry (" + idx(i) + "," + idx(j) + ") = " + idx(table[i][j]) +
                         " out of range");
  }
  if (!names.empty() && names.size() != n) throw InputError("names length does not match size");

  auto is_identity = [&](Elt u) {
    for (Elt a = 0; a < n; ++a)
      if (table[u][a] != a || table[a][u] != a) return false;
    return true;
  };
  if (unit) {
    if (*unit >= n || !is_identity(*unit)) throw InputError("no identity: element " + idx(*unit) + " is not a two-sided unit");
  } else {
    for (Elt u = 0; u < n && !unit; ++u)
      if (is_identity(u)) unit = u;
    if (!unit) throw InputError("no identity");
  }

  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      for (Elt c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InputError("not associative at (" + idx(a) + "," + idx(b) + "," + idx(c) + ")");

  InverseMonoid m;
  m.table_ = std::move(table);
  m.unit_ = *unit;
  m.names_ = std::move(names);
  m.inv_.resize(n);
  const auto& t = m.table_;
  for (Elt s = 0; s < n; ++s) {
    std::vector<Elt> found;
    for (Elt x = 0; x < n; ++x)
      if (t[t[s][x]][s] == s && t[t[x][s]][x] == x) found.push_back(x);
    if (found.empty()) throw InputError("inverse missing for element " + idx(s));
    if (found.size() > 1)
      throw InputError("inverse not unique for element " + idx(s) + " (candidates " + idx(found[0]) +
                       " and " + idx(found[1]) + ")");
    m.inv_[s] = found[0];
  }
  m.idem_pos_.assign(n, n);
  for (Elt a = 0; a < n; ++a)
    if (t[a][a] == a) {
      m.idem_pos_[a] = m.idempotents_.size();
      m.idempotents_.push_back(a);
    }
  for (Elt e : m.idempotents_)
    for (Elt f : m.idempotents_)
      if (t[e][f] != t[f][e])
        throw InputError("idempotents " + idx(e) + " and " + idx(f) + " do not commute");
  return m;
}

Elt InverseMonoid::mul(const std::vector<Elt>& word) const {
  Elt r = unit_;
  for (Elt a : word) r = table_[r][a];
  return r;
}

std::string InverseMonoid::name(Elt a) const { return names_.empty() ? idx(a) : names_[a]; }

std::size_t InverseMonoid::idempotent_index(Elt e) const {
  if (e >= idem_pos_.size() || idem_pos_[e] == size())
    throw InputError("element " + idx(e) + " is not idempotent");
  return idem_pos_[e];
}

InverseMonoid symmetric_inverse_monoid(std::size_t n) {
  if (n > 6) throw CapError("symmetric_inverse_monoid: n > 6 is beyond the supported size");
  // A partial bijection is stored as an image array, -1 off the domain.
  using Map = std::vector<int>;
  std::vector<Map> elems;
  std::vector<std::string> names;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> dom;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) dom.push_back(static_cast<int>(i));
    // Image tuples in lexicographic order: injective sequences from {0..n-1}.
    std::vector<int> img(dom.size());
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned used) {
      if (k == dom.size()) {
        Map m(n, -1);
        std::string name = "[";
        for (std::size_t j = 0; j < dom.size(); ++j) {
          m[dom[j]] = img[j];
          if (j) name += ",";
          name += std::to_string(dom[j] + 1) + "->" + std::to_string(img[j] + 1);
        }
        elems.push_back(std::move(m));
        names.push_back(name + "]");
        return;
      }
      for (std::size_t v = 0; v < n; ++v)
        if (!(used & (1u << v))) {
          img[k] = static_cast<int>(v);
          rec(k + 1, used | (1u << v));
        }
    };
    rec(0, 0);
  }
  std::vector<std::vector<Elt>> table(elems.size(), std::vector<Elt>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      Map c(n, -1);
      for (std::size_t x = 0; x < n; ++x)
        if (elems[b][x] >= 0) c[x] = elems[a][elems[b][x]];
      table[a][b] = static_cast<Elt>(std::find(elems.begin(), elems.end(), c) - elems.begin());
    }
  return InverseMonoid::from_table(std::move(table), std::nullopt, std::move(names));
}

InverseMonoid chain_semilattice(std::size_t n) {
  if (n == 0) throw InputError("chain_semilattice needs n >= 1");
  std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
  std::vector<std::string> names;
  for (Elt a = 0; a < n; ++a) {
    names.push_back("e" + idx(a));
    for (Elt b = 0; b < n; ++b) table[a][b] = std::max(a, b);
  }
  return InverseMonoid::from_table(std::move(table), Elt{0}, std::move(names));
}

InverseMonoid cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic_group needs n >= 1");
  std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return InverseMonoid::from_table(std::move(table), Elt{0});
}

InverseMonoid direct_product(const InverseMonoid& s, const InverseMonoid& t) {
  const std::size_t n = s.size(), m = t.size();
  std::vector<std::vector<Elt>> table(n * m, std::vector<Elt>(n * m));
  std::vector<std::string> names;
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < m; ++b) {
      names.push_back("(" + s.name(a) + "," + t.name(b) + ")");
      for (Elt c = 0; c < n; ++c)
        for (Elt d = 0; d < m; ++d) table[a * m + b][c * m + d] = s.mul(a, c) * m + t.mul(b, d);
    }
  return InverseMonoid::from_table(std::move(table), s.unit() * m + t.unit(), std::move(names));
}

std::pair<Elt, Elt> dom_range(const InverseMonoid& s, Elt x) { return {s.dom(x), s.ran(x)}; }

bool natural_leq(const InverseMonoid& m, Elt s, Elt t) {
  for (Elt e : m.idempotents())
    if (m.mul(e, t) == s) return true;
  return false;
}

std::vector<std::vector<Elt>> Partition::classes() const {
  std::vector<std::vector<Elt>> out(count);
  for (Elt a = 0; a < class_of.size(); ++a) out[class_of[a]].push_back(a);
  return out;
}

Partition sigma_classes(const InverseMonoid& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (Elt t = 0; t < n; ++t)
    for (Elt e : m.idempotents()) {
      const std::size_t a = find(m.mul(e, t)), b = find(t);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  Partition p;
  p.class_of.assign(n, n);
  std::vector<std::size_t> label(n, n);
  for (Elt a = 0; a < n; ++a) {
    const std::size_t root = find(a);
    if (label[root] == n) label[root] = p.count++;
    p.class_of[a] = label[root];
  }
  return p;
}

GroupImage max_group_image(const InverseMonoid& m) {
  const Partition p = sigma_classes(m);
  const auto classes = p.classes();
  std::vector<std::vector<Elt>> table(p.count, std::vector<Elt>(p.count));
  for (std::size_t g = 0; g < p.count; ++g)
    for (std::size_t h = 0; h < p.count; ++h)
      table[g][h] = p.class_of[m.mul(classes[g].front(), classes[h].front())];
  for (Elt a = 0; a < m.size(); ++a)
    for (Elt b = 0; b < m.size(); ++b)
      if (table[p.class_of[a]][p.class_of[b]] != p.class_of[m.mul(a, b)])
        throw InternalError("induced table ill-defined at (" + idx(a) + "," + idx(b) + ")");
  std::vector<std::string> names;
  for (const auto& c : classes) names.push_back("[" + m.name(c.front()) + "]");
  GroupImage gi{InverseMonoid::from_table(std::move(table), p.class_of[m.unit()], std::move(names)),
                p.class_of};
  if (!gi.group.is_group()) throw InternalError("maximum group image is not a group");
  return gi;
}

bool is_e_unitary(const InverseMonoid& m) {
  for (Elt e : m.idempotents())
    for (Elt s = 0; s < m.size(); ++s)
      if (!m.is_idempotent(s) && natural_leq(m, e, s)) return false;
  return true;
}

std::optional<std::vector<Elt>> find_isomorphism(const InverseMonoid& a, const InverseMonoid& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.idempotents().size() != b.idempotents().size()) return std::nullopt;
  std::vector<Elt> f(n, n);
  std::vector<bool> used(n, false);
  // Assign in index order; check every product whose factors and result are assigned.
  std::function<bool(Elt)> rec = [&](Elt k) -> bool {
    if (k == n) return true;
    for (Elt c = 0; c < n; ++c) {
      if (used[c] || a.is_idempotent(k) != b.is_idempotent(c)) continue;
      f[k] = c;
      used[c] = true;
      bool ok = true;
      for (Elt x = 0; x <= k && ok; ++x)
        for (Elt y = 0; y <= k && ok; ++y) {
          const Elt xy = a.mul(x, y);
          if (f[xy] != n && f[xy] != b.mul(f[x], f[y])) ok = false;
          // a product landing on an already-used image must come from the same preimage
          if (f[xy] == n && used[b.mul(f[x], f[y])]) ok = false;
        }
      if (ok && rec(k + 1)) return true;
      used[c] = false;
      f[k] = n;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return f;
}

}  // namespace semihom::invmon
