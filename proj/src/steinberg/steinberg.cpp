#include "semihom/steinberg.hpp"

#include <algorithm>

namespace semihom::steinberg {

namespace {

std::string arrow_name(std::size_t a) { return std::to_string(a); }

void fail(const std::string& what) { throw InputError("groupoid axioms fail: " + what); }

Vector indicator(const FieldSpec& f, std::size_t n, std::uint32_t mask) {
  Vector v = zero_vector(f, n);
  for (std::size_t a = 0; a < n; ++a)
    if (mask >> a & 1u) v[a] = Scalar::in(f, 1);
  return v;
}

monhom::KSModule checked_left(monhom::KSModule v) {
  v.validate();
  return v;
}

}  // namespace

void FiniteGroupoid::validate() const {
  const std::size_t n = arrows();
  if (rng.size() != n || inv.size() != n || comp.size() != n) fail("table sizes differ");
  if (unit_of.size() != objects) fail("unit_of has wrong size");
  for (std::size_t a = 0; a < n; ++a) {
    if (src[a] >= objects || rng[a] >= objects) fail("arrow " + arrow_name(a) + " has an unknown end");
    if (comp[a].size() != n) fail("table sizes differ");
  }
  for (std::size_t x = 0; x < objects; ++x) {
    const std::size_t e = unit_of[x];
    if (e >= n || src[e] != x || rng[e] != x) fail("no unit at object " + std::to_string(x));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = comp[a][b];
      const std::string at = " at (" + arrow_name(a) + "," + arrow_name(b) + ")";
      if ((ab != kNoArrow) != (src[a] == rng[b])) fail("composability" + at);
      if (ab == kNoArrow) continue;
      if (ab >= n || src[ab] != src[b] || rng[ab] != rng[a]) fail("composite has wrong ends" + at);
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (comp[a][b] == kNoArrow) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (comp[b][c] != kNoArrow && comp[comp[a][b]][c] != comp[a][comp[b][c]])
          fail("not associative at (" + arrow_name(a) + "," + arrow_name(b) + "," + arrow_name(c) + ")");
    }
  for (std::size_t a = 0; a < n; ++a) {
    if (comp[unit_of[rng[a]]][a] != a || comp[a][unit_of[src[a]]] != a)
      fail("units not neutral on arrow " + arrow_name(a));
    const std::size_t i = inv[a];
    if (i >= n || src[i] != rng[a] || rng[i] != src[a] || comp[a][i] != unit_of[rng[a]] ||
        comp[i][a] != unit_of[src[a]])
      fail("bad inverse of arrow " + arrow_name(a));
  }
}

FiniteGroupoid groupoid_from_data(std::size_t objects, std::vector<std::size_t> src, std::vector<std::size_t> rng,
                                  const std::vector<std::array<std::size_t, 3>>& products,
                                  std::vector<std::size_t> inv) {
  FiniteGroupoid g;
  g.objects = objects;
  const std::size_t n = src.size();
  g.src = std::move(src);
  g.rng = std::move(rng);
  g.inv = std::move(inv);
  if (g.rng.size() != n || g.inv.size() != n) fail("table sizes differ");
  g.comp.assign(n, std::vector<std::size_t>(n, kNoArrow));
  for (const auto& [a, b, ab] : products) {
    if (a >= n || b >= n) fail("product names an unknown arrow");
    g.comp[a][b] = ab;
  }
  g.unit_of.assign(objects, kNoArrow);
  for (std::size_t a = 0; a < n; ++a)
    if (g.src[a] == g.rng[a] && g.src[a] < objects && g.comp[a][a] == a && g.unit_of[g.src[a]] == kNoArrow)
      g.unit_of[g.src[a]] = a;
  g.validate();
  return g;
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  if (n == 0) throw InputError("pair groupoid needs at least one object");
  FiniteGroupoid g;
  g.objects = n;
  g.comp.assign(n * n, std::vector<std::size_t>(n * n, kNoArrow));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g.rng.push_back(i);
      g.src.push_back(j);
      g.inv.push_back(j * n + i);
      for (std::size_t k = 0; k < n; ++k) g.comp[i * n + j][j * n + k] = i * n + k;
    }
  for (std::size_t i = 0; i < n; ++i) g.unit_of.push_back(i * n + i);
  g.validate();
  return g;
}

FiniteGroupoid group_as_groupoid(const InverseMonoid& grp) {
  if (!grp.is_group()) throw InputError("not a group");
  FiniteGroupoid g;
  g.objects = 1;
  g.src.assign(grp.size(), 0);
  g.rng.assign(grp.size(), 0);
  g.comp = grp.table();
  for (Elt a = 0; a < grp.size(); ++a) g.inv.push_back(grp.inv(a));
  g.unit_of = {grp.unit()};
  g.validate();
  return g;
}

FiniteGroupoid discrete_groupoid(std::size_t n) {
  FiniteGroupoid g;
  g.objects = n;
  g.comp.assign(n, std::vector<std::size_t>(n, kNoArrow));
  for (std::size_t x = 0; x < n; ++x) {
    g.src.push_back(x);
    g.rng.push_back(x);
    g.inv.push_back(x);
    g.unit_of.push_back(x);
    g.comp[x][x] = x;
  }
  g.validate();
  return g;
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const std::size_t na = a.arrows(), n = na + b.arrows();
  FiniteGroupoid g = a;
  g.objects += b.objects;
  for (auto& row : g.comp) row.resize(n, kNoArrow);
  g.comp.resize(n, std::vector<std::size_t>(n, kNoArrow));
  for (std::size_t x = 0; x < b.arrows(); ++x) {
    g.src.push_back(b.src[x] + a.objects);
    g.rng.push_back(b.rng[x] + a.objects);
    g.inv.push_back(b.inv[x] + na);
    for (std::size_t y = 0; y < b.arrows(); ++y)
      if (b.comp[x][y] != kNoArrow) g.comp[na + x][na + y] = b.comp[x][y] + na;
  }
  for (auto e : b.unit_of) g.unit_of.push_back(e + na);
  g.validate();
  return g;
}

std::size_t Bisections::index_of(std::uint32_t mask) const {
  const auto it = std::lower_bound(masks.begin(), masks.end(), mask);
  if (it == masks.end() || *it != mask) throw InternalError("not a bisection");
  return static_cast<std::size_t>(it - masks.begin());
}

Bisections bisections(const FiniteGroupoid& g) {
  const std::size_t n = g.arrows();
  if (n > kMaxArrows) throw CapError("enumeration cap exceeded");
  Bisections b;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::uint64_t srcs = 0, rngs = 0;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1u)) continue;
      ok = !(srcs >> g.src[a] & 1u) && !(rngs >> g.rng[a] & 1u);
      srcs |= std::uint64_t{1} << g.src[a];
      rngs |= std::uint64_t{1} << g.rng[a];
    }
    if (ok) b.masks.push_back(mask);
  }
  const std::size_t m = b.masks.size();
  std::vector<std::vector<Elt>> table(m, std::vector<Elt>(m));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      std::uint32_t prod = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (b.masks[u] >> x & 1u)
          for (std::size_t y = 0; y < n; ++y)
            if ((b.masks[v] >> y & 1u) && g.comp[x][y] != kNoArrow) prod |= 1u << g.comp[x][y];
      table[u][v] = b.index_of(prod);
    }
  std::uint32_t units = 0;
  for (auto e : g.unit_of) units |= 1u << e;
  std::vector<std::string> names;
  for (auto mask : b.masks) {
    std::string s = "{";
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1u) s += (s.size() > 1 ? "," : "") + arrow_name(a);
    names.push_back(s + "}");
  }
  b.monoid = std::make_shared<const InverseMonoid>(
      InverseMonoid::from_table(std::move(table), b.index_of(units), std::move(names)));
  return b;
}

UnitalAction induced_action_hat(const FiniteGroupoid& g, const Bisections& b, FieldSpec field) {
  UnitalAction a{b.monoid, crossprod::diagonal_algebra(field, g.objects), {}, {}};
  for (auto mask : b.masks) {
    Vector one = zero_vector(field, g.objects);
    Matrix t(field, g.objects, g.objects);
    for (std::size_t x = 0; x < g.arrows(); ++x)
      if (mask >> x & 1u) {
        one[g.rng[x]] = Scalar::in(field, 1);
        t(g.rng[x], g.src[x]) = Scalar::in(field, 1);
      }
    a.one.push_back(std::move(one));
    a.theta.push_back(std::move(t));
  }
  const crossprod::Report rep = crossprod::validate_action(a);
  if (!rep.ok()) throw InternalError("induced action invalid: " + rep.failures.front());
  return a;
}

Algebra steinberg_algebra(const FiniteGroupoid& g, FieldSpec field) {
  const std::size_t n = g.arrows();
  Algebra a{field, n, std::vector<Scalar>(n * n * n, Scalar::in(field, 0)), zero_vector(field, n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g.comp[x][y] != kNoArrow) a.c(x, y, g.comp[x][y]) = Scalar::in(field, 1);
  for (auto e : g.unit_of) a.unit[e] = Scalar::in(field, 1);
  a.validate();
  return a;
}

Matrix unit_space_inclusion(const FiniteGroupoid& g, FieldSpec field) {
  Matrix m(field, g.arrows(), g.objects);
  for (std::size_t x = 0; x < g.objects; ++x) m(g.unit_of[x], x) = Scalar::in(field, 1);
  return m;
}

SteinbergData steinberg_data(const FiniteGroupoid& g, FieldSpec field) {
  g.validate();
  Bisections b = bisections(g);
  UnitalAction act = induced_action_hat(g, b, field);
  Algebra lx = act.algebra;
  CrossedProduct c = crossprod::crossed_product(act);
  return {g, std::move(b), std::move(lx), std::move(act), steinberg_algebra(g, field), std::move(c)};
}

PsiReport psi_map(const SteinbergData& d) {
  const FiniteGroupoid& g = d.groupoid;
  const CrossedProduct& c = d.crossed;
  const FieldSpec& f = d.algebra.field;
  if (c.algebra.dim != d.algebra.dim) throw InternalError("dimension mismatch");

  Matrix on_l(f, g.arrows(), c.l_dim());
  for (std::size_t l = 0; l < c.l_dim(); ++l) {
    const Elt u = c.block_of(l);
    const Vector phi = c.ideal[u].basis().column(l - c.offset[u]);
    for (std::size_t x = 0; x < g.arrows(); ++x)
      if (d.bis.masks[u] >> x & 1u) on_l(x, l) = phi[g.rng[x]];
  }
  PsiReport r;
  r.psi = on_l * c.n_space.section;
  r.well_defined = (on_l * c.n_space.subspace_basis).is_zero();

  r.indicators = true;
  const std::size_t m = d.bis.masks.size();
  for (std::size_t u = 0; u < m && r.indicators; ++u)
    for (std::size_t v = 0; v < m && r.indicators; ++v)
      r.indicators = d.algebra.mul(indicator(f, g.arrows(), d.bis.masks[u]), indicator(f, g.arrows(), d.bis.masks[v])) ==
                     indicator(f, g.arrows(), d.bis.masks[d.bis.monoid->mul(u, v)]);

  r.bijective = mat_rank(r.psi) == d.algebra.dim;

  const std::size_t n = c.algebra.dim;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(r.psi.column(i));
  r.multiplicative = r.psi * c.algebra.unit == d.algebra.unit;
  for (std::size_t i = 0; i < n && r.multiplicative; ++i)
    for (std::size_t j = 0; j < n && r.multiplicative; ++j)
      r.multiplicative = r.psi * c.algebra.mul(c.algebra.basis_vector(i), c.algebra.basis_vector(j)) ==
                         d.algebra.mul(images[i], images[j]);

  const Matrix incl = unit_space_inclusion(g, f);
  r.bimodule_map = r.psi * c.embed_a == incl;
  for (std::size_t x = 0; x < g.objects && r.bimodule_map; ++x) {
    const Vector fx = c.embed_a.column(x), gx = incl.column(x);
    for (std::size_t i = 0; i < n && r.bimodule_map; ++i)
      r.bimodule_map = r.psi * c.algebra.mul(fx, c.algebra.basis_vector(i)) == d.algebra.mul(gx, images[i]) &&
                       r.psi * c.algebra.mul(c.algebra.basis_vector(i), fx) == d.algebra.mul(images[i], gx);
  }
  return r;
}

Bimodule transport(const Bimodule& m, const SteinbergData& d, const Matrix& psi) {
  Bimodule t{d.crossed.algebra, m.dim, {}, {}};
  for (std::size_t i = 0; i < t.algebra.dim; ++i) {
    const Vector image = psi.column(i);
    t.left.push_back(m.left_of(image));
    t.right.push_back(m.right_of(image));
  }
  t.validate();
  return t;
}

monhom::KSModule bisection_module(const Bimodule& m, const SteinbergData& d) {
  const FieldSpec& f = d.algebra.field;
  const std::size_t n = d.groupoid.arrows();
  const auto& s = *d.bis.monoid;
  monhom::KSModule v{d.bis.monoid, f, m.dim, {}, monhom::Side::Left};
  for (Elt u = 0; u < s.size(); ++u)
    v.act.push_back(m.left_of(indicator(f, n, d.bis.masks[u])) * m.right_of(indicator(f, n, d.bis.masks[s.inv(u)])));
  return checked_left(std::move(v));
}

namespace {

struct Prepared {
  SteinbergData data;
  PsiReport psi;
  Bimodule transported;
  monhom::KSModule module;
  std::vector<Matrix> commutators;  // x -> f x - x f for the basis idempotents f of L(X)
};

Prepared prepare(const FiniteGroupoid& g, const Bimodule& m) {
  SteinbergData d = steinberg_data(g, m.algebra.field);
  if (!(m.algebra == d.algebra)) throw InputError("bimodule axioms fail: bimodule is not over the Steinberg algebra");
  m.validate();
  PsiReport psi = psi_map(d);
  if (!psi.ok()) throw InternalError("psi is not an isomorphism of L(X)-bimodules");
  Bimodule t = transport(m, d, psi.psi);
  monhom::KSModule v = bisection_module(m, d);
  const Matrix incl = unit_space_inclusion(g, m.algebra.field);
  std::vector<Matrix> comm;
  for (std::size_t x = 0; x < g.objects; ++x) {
    const Vector fx = incl.column(x);
    comm.push_back(m.left_of(fx) - m.right_of(fx));
  }
  return {std::move(d), std::move(psi), std::move(t), std::move(v), std::move(comm)};
}

}  // namespace

SteinbergHomologyReport verify_steinberg_homology(const FiniteGroupoid& g, const Bimodule& m, std::size_t max_degree,
                                                  std::size_t cap) {
  const Prepared p = prepare(g, m);
  std::vector<Vector> span;
  for (const auto& c : p.commutators)
    for (std::size_t j = 0; j < m.dim; ++j) span.push_back(c.column(j));
  const QuotientSpace q = quotient_space(m.dim, Matrix::from_columns(m.algebra.field, m.dim, span));
  monhom::KSModule co{p.module.monoid, p.module.field, q.dim(), {}, monhom::Side::Left};
  for (const auto& a : p.module.act) co.act.push_back(induced_map(a, q, q));
  co = checked_left(std::move(co));

  const crossprod::Coinvariants other = crossprod::coinvariants(p.transported, p.data.crossed);
  SteinbergHomologyReport r;
  r.transport_agrees = other.quotient.projection == q.projection && other.module.act == co.act;
  r.coefficient_dim = q.dim();
  r.lhs = monhom::homology(co, max_degree, cap);
  r.rhs = crossprod::hochschild_homology(m, max_degree, cap);
  return r;
}

bool SteinbergCohomologyReport::lx_vanishes() const {
  return std::all_of(lx_cohomology.begin() + (lx_cohomology.empty() ? 0 : 1), lx_cohomology.end(),
                     [](std::size_t b) { return b == 0; });
}

SteinbergCohomologyReport verify_steinberg_cohomology(const FiniteGroupoid& g, const Bimodule& m,
                                                      std::size_t max_degree, std::size_t cap) {
  const Prepared p = prepare(g, m);
  Matrix stacked(m.algebra.field, 0, m.dim);
  for (const auto& c : p.commutators) stacked = stacked.vstack(c);
  const SubspaceCoordinates sub(kernel_basis(stacked));
  monhom::KSModule inv{p.module.monoid, p.module.field, sub.dim(), {}, monhom::Side::Left};
  for (const auto& a : p.module.act) inv.act.push_back(sub.coords(a * sub.basis()));
  inv = checked_left(std::move(inv));

  const crossprod::Invariants other = crossprod::invariants_sub(p.transported, p.data.crossed);
  Bimodule restricted{p.data.lx, m.dim, {}, {}};
  const Matrix incl = unit_space_inclusion(g, m.algebra.field);
  for (std::size_t x = 0; x < g.objects; ++x) {
    restricted.left.push_back(m.left_of(incl.column(x)));
    restricted.right.push_back(m.right_of(incl.column(x)));
  }

  SteinbergCohomologyReport r;
  r.transport_agrees = other.basis == sub.basis() && other.module.act == inv.act;
  r.coefficient_dim = sub.dim();
  r.lhs = monhom::cohomology(inv, max_degree, cap);
  r.rhs = crossprod::hochschild_cohomology(m, max_degree, cap);
  r.lx_cohomology = crossprod::hochschild_cohomology(restricted, max_degree, cap);
  return r;
}

}  // namespace semihom::steinberg
