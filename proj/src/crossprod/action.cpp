#include "semihom/action.hpp"

#include <algorithm>

namespace semihom::crossprod {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

Vector one_minus(const Algebra& a, const Vector& e) {
  Vector out = a.unit;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= e[i];
  return out;
}

bool same_column_space(const Matrix& x, const Matrix& y) {
  const std::size_t r = mat_rank(x);
  return r == mat_rank(y) && r == mat_rank(x.hstack(y));
}

bool multiplicative_on_basis(const Algebra& a, const Matrix& t) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      const Vector lhs = t * a.mul(a.basis_vector(i), a.basis_vector(j));
      if (lhs != a.mul(t.column(i), t.column(j))) return false;
    }
  return true;
}

}  // namespace

Matrix ideal_basis(const Algebra& a, std::span<const Scalar> idempotent) {
  return image_basis(a.left_mult(idempotent));
}

Report validate_action(const UnitalAction& act) {
  Report rep;
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
  const auto& m = *act.monoid;
  const Algebra& a = act.algebra;
  const std::size_t n = m.size();
  if (act.one.size() != n || act.theta.size() != n) {
    fail("need one idempotent and one matrix per monoid element");
    return rep;
  }
  for (Elt s = 0; s < n; ++s) {
    if (act.one[s].size() != a.dim) fail("1_" + str(s) + " has the wrong length");
    if (act.theta[s].rows() != a.dim || act.theta[s].cols() != a.dim) fail("T_" + str(s) + " has the wrong shape");
  }
  if (!rep.ok()) return rep;

  std::vector<Matrix> mult_one;
  for (Elt s = 0; s < n; ++s) {
    const Vector& e = act.one[s];
    mult_one.push_back(a.left_mult(e));
    if (a.mul(e, e) != e) fail("1_" + str(s) + " is not idempotent");
    if (!(mult_one[s] == a.right_mult(e))) fail("1_" + str(s) + " is not central");
  }
  if (act.one[m.unit()] != a.unit) fail("1_unit != 1_A");
  if (!act.theta[m.unit()].is_identity()) fail("T_unit != identity");

  for (Elt s = 0; s < n; ++s) {
    const Matrix& t = act.theta[s];
    const Elt si = m.inv(s);
    if (!same_column_space(t, mult_one[s])) fail("image(T_" + str(s) + ") != 1_" + str(s) + "A");
    if (!(t * mult_one[si] == t)) fail("T_" + str(s) + " does not vanish off 1_" + str(si) + "A");
    if (mat_rank(t) != mat_rank(mult_one[si]))
      fail("T_" + str(s) + " is not injective on 1_" + str(si) + "A");
    if (!multiplicative_on_basis(a, t)) fail("T_" + str(s) + " is not multiplicative");
  }
  for (Elt s = 0; s < n; ++s)
    for (Elt t = 0; t < n; ++t) {
      const Elt st = m.mul(s, t);
      const Matrix dom = a.left_mult(a.mul(act.one[m.inv(t)], act.one[m.inv(st)]));
      if (!(act.theta[s] * act.theta[t] * dom == act.theta[st] * dom))
        fail("T_" + str(s) + " T_" + str(t) + " != T_" + str(st) + " on 1_" + str(m.inv(t)) + "1_" + str(m.inv(st)) + "A");
      if (invmon::natural_leq(m, s, t) && a.mul(act.one[s], act.one[t]) != act.one[s])
        fail("1_" + str(s) + " 1_" + str(t) + " != 1_" + str(s) + " although " + str(s) + " <= " + str(t));
      if (act.theta[s] * act.one[t] != a.mul(act.one[s], act.one[st]))
        fail("T_" + str(s) + "(1_" + str(t) + ") != 1_" + str(s) + " 1_" + str(st));
    }
  for (Elt s = 0; s < n; ++s)
    if (act.one[m.ran(s)] != act.one[s]) fail("1_" + str(m.ran(s)) + " != 1_" + str(s) + " (ss^-1 vs s)");
  for (Elt e : m.idempotents())
    for (Elt f : m.idempotents())
      if (act.one[m.mul(e, f)] != a.mul(act.one[e], act.one[f]))
        fail("1_" + str(m.mul(e, f)) + " != 1_" + str(e) + " 1_" + str(f));
  return rep;
}

bool is_compatible(const UnitalAction& act) {
  const auto& m = *act.monoid;
  const auto p = invmon::sigma_classes(m);
  for (Elt s = 0; s < m.size(); ++s)
    for (Elt t = s + 1; t < m.size(); ++t) {
      if (p.class_of[s] != p.class_of[t]) continue;
      const Matrix dom = act.algebra.left_mult(act.algebra.mul(act.one[m.inv(s)], act.one[m.inv(t)]));
      if (!(act.theta[s] * dom == act.theta[t] * dom)) return false;
    }
  return true;
}

UnitalAction trivial_action(std::shared_ptr<const InverseMonoid> s, const Algebra& a) {
  const std::size_t n = s->size();
  return {s, a, std::vector<Vector>(n, a.unit), std::vector<Matrix>(n, Matrix::identity(a.field, a.dim))};
}

UnitalAction i1_on_pair(FieldSpec field) {
  auto s = std::make_shared<const InverseMonoid>(invmon::symmetric_inverse_monoid(1));
  const Algebra a = diagonal_algebra(field, 2);
  UnitalAction act{s, a, {unit_vector(field, 2, 0), a.unit}, {}};
  act.theta.push_back(Matrix::from_ints(field, 2, 2, {1, 0, 0, 0}));
  act.theta.push_back(Matrix::identity(field, 2));
  return act;
}

UnitalAction conjugation_action(std::shared_ptr<const InverseMonoid> s, FieldSpec field) {
  const auto& m = *s;
  const Algebra a = semilattice_algebra(m, field);
  const auto& idem = m.idempotents();
  UnitalAction act{s, a, {}, {}};
  for (Elt x = 0; x < m.size(); ++x) {
    act.one.push_back(unit_vector(field, a.dim, m.idempotent_index(m.ran(x))));
    Matrix t(field, a.dim, a.dim);
    for (std::size_t j = 0; j < idem.size(); ++j)
      t(m.idempotent_index(m.mul({x, idem[j], m.inv(x)})), j) = Scalar::in(field, 1);
    act.theta.push_back(std::move(t));
  }
  return act;
}

Vector ideal_sum_unit(const Algebra& a, const std::vector<Vector>& idempotents) {
  std::vector<Vector> u;
  for (const auto& e : idempotents)
    if (std::find(u.begin(), u.end(), e) == u.end()) u.push_back(e);

  // u + e - ue, folded over the list
  Vector fold = zero_vector(a.field, a.dim);
  for (const auto& e : u) {
    const Vector prod = a.mul(fold, e);
    for (std::size_t i = 0; i < a.dim; ++i) fold[i] = fold[i] + e[i] - prod[i];
  }
  if (u.size() > 16) return fold;

  const std::size_t m = u.size();
  std::vector<Vector> prod(std::size_t{1} << m);
  Vector ie = zero_vector(a.field, a.dim);
  for (std::size_t mask = 1; mask < prod.size(); ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    prod[mask] = rest ? a.mul(prod[rest], u[low]) : u[low];
    const bool odd = __builtin_popcountll(mask) % 2 == 1;
    for (std::size_t i = 0; i < a.dim; ++i) ie[i] += odd ? prod[mask][i] : -prod[mask][i];
  }
  if (ie != fold) throw InternalError("inclusion-exclusion unit disagrees with the iterated unit");
  return ie;
}

Report PartialGroupAction::check() const {
  Report rep;
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
  const auto& g = *group;
  const Algebra& a = algebra;
  const std::size_t n = g.size();
  if (!g.is_group()) fail("acting monoid is not a group");
  if (domain_unit.size() != n || maps.size() != n) {
    fail("need one domain and one map per group element");
    return rep;
  }
  std::vector<Matrix> mult;
  for (Elt x = 0; x < n; ++x) {
    const Vector& e = domain_unit[x];
    mult.push_back(a.left_mult(e));
    if (a.mul(e, e) != e || !(mult[x] == a.right_mult(e))) fail("e_" + str(x) + " is not a central idempotent");
  }
  if (!rep.ok()) return rep;
  if (domain_unit[g.unit()] != a.unit) fail("D_1 != A");
  if (!maps[g.unit()].is_identity()) fail("theta_1 != id");
  for (Elt x = 0; x < n; ++x) {
    const Elt xi = g.inv(x);
    if (!(maps[x] * mult[xi] == maps[x])) fail("theta_" + str(x) + " does not vanish off D_" + str(xi));
    if (!same_column_space(maps[x], mult[x])) fail("image(theta_" + str(x) + ") != D_" + str(x));
    if (!(maps[x] * maps[xi] == mult[x])) fail("theta_" + str(x) + " theta_" + str(xi) + " != id on D_" + str(x));
    if (!multiplicative_on_basis(a, maps[x])) fail("theta_" + str(x) + " is not multiplicative");
  }
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      const Elt xy = g.mul(x, y);
      if (maps[x] * a.mul(domain_unit[g.inv(x)], domain_unit[y]) != a.mul(domain_unit[x], domain_unit[xy]))
        fail("theta_" + str(x) + "(D_" + str(g.inv(x)) + " D_" + str(y) + ") != D_" + str(x) + " D_" + str(xy));
      const Matrix dom = a.left_mult(a.mul(domain_unit[g.inv(y)], domain_unit[g.inv(xy)]));
      if (!(maps[x] * maps[y] * dom == maps[xy] * dom))
        fail("theta_" + str(x) + " theta_" + str(y) + " != theta_" + str(xy) + " on D_" + str(g.inv(y)) + " D_" +
             str(g.inv(xy)));
    }
  return rep;
}

InducedAction induced_partial_action(const UnitalAction& act) {
  if (!is_compatible(act)) throw InputError("action not compatible");
  const auto& m = *act.monoid;
  const Algebra& a = act.algebra;
  invmon::GroupImage gi = invmon::max_group_image(m);
  const std::size_t ng = gi.group.size();
  std::vector<std::vector<Elt>> members(ng);
  for (Elt s = 0; s < m.size(); ++s) members[gi.proj[s]].push_back(s);

  PartialGroupAction p{std::make_shared<const InverseMonoid>(gi.group), a, {}, {}};
  for (std::size_t g = 0; g < ng; ++g) {
    std::vector<Vector> ones;
    for (Elt s : members[g]) ones.push_back(act.one[s]);
    p.domain_unit.push_back(ideal_sum_unit(a, ones));

    // x -> sum_k T_{s_k}(x f_k), f_k = prod_{i<k} (1 - 1_{s_i^-1}) 1_{s_k^-1}
    Matrix map(a.field, a.dim, a.dim);
    Vector outside = a.unit;
    for (Elt s : members[g]) {
      const Vector& d = act.one[m.inv(s)];
      const Vector f = a.mul(outside, d);
      map += act.theta[s] * a.right_mult(f);
      outside = a.mul(outside, one_minus(a, d));
    }
    p.maps.push_back(std::move(map));
  }
  const Report r = p.check();
  if (!r.ok()) throw InternalError("induced partial action invalid: " + r.failures.front());
  return {std::move(gi), std::move(p)};
}

}  // namespace semihom::crossprod
