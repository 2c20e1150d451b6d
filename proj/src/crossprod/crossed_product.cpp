#include "semihom/crossed_product.hpp"

#include <algorithm>

namespace semihom::crossprod {

namespace {

Vector place(const FieldSpec& f, std::size_t total, std::size_t offset, const Vector& block) {
  Vector v = zero_vector(f, total);
  std::copy(block.begin(), block.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
  return v;
}

std::vector<std::size_t> offsets_of(const std::vector<SubspaceCoordinates>& blocks) {
  std::vector<std::size_t> off{0};
  for (const auto& b : blocks) off.push_back(off.back() + b.dim());
  return off;
}

Elt block_index(const std::vector<std::size_t>& offset, std::size_t i) {
  return static_cast<Elt>(std::upper_bound(offset.begin(), offset.end(), i) - offset.begin() - 1);
}

// Structure constants of an algebra on the columns of `section`, with products
// computed by `mul` and read back through `projection`.
template <typename Mul>
Algebra quotient_algebra(const FieldSpec& f, const Matrix& projection, const Matrix& section, Mul mul,
                         Vector unit) {
  const std::size_t d = section.cols();
  Algebra q{f, d, std::vector<Scalar>(d * d * d, Scalar::in(f, 0)), std::move(unit)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector p = projection * mul(section.column(i), section.column(j));
      for (std::size_t k = 0; k < d; ++k) q.c(i, j, k) = p[k];
    }
  return q;
}

}  // namespace

Vector CrossedProduct::lift(Elt s, std::span<const Scalar> a) const {
  return place(algebra.field, l_dim(), offset[s], ideal[s].coords(a));
}

Elt CrossedProduct::block_of(std::size_t i) const { return block_index(offset, i); }

Vector CrossedProduct::l_mul(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const auto& m = *action.monoid;
  const Algebra& a = action.algebra;
  Vector out = zero_vector(a.field, l_dim());
  for (Elt s = 0; s < m.size(); ++s) {
    Vector xs = zero_vector(a.field, ideal[s].dim());
    bool any = false;
    for (std::size_t i = 0; i < xs.size(); ++i) any |= !(xs[i] = x[offset[s] + i]).is_zero();
    if (!any) continue;
    const Vector av = ideal[s].basis() * xs;
    for (Elt t = 0; t < m.size(); ++t) {
      Vector yt = zero_vector(a.field, ideal[t].dim());
      bool anyy = false;
      for (std::size_t j = 0; j < yt.size(); ++j) anyy |= !(yt[j] = y[offset[t] + j]).is_zero();
      if (!anyy) continue;
      // a delta_s . b delta_t = a T_s(b) delta_st
      const Vector prod = a.mul(av, action.theta[s] * (ideal[t].basis() * yt));
      const Elt st = m.mul(s, t);
      const Vector c = ideal[st].coords(prod);
      for (std::size_t k = 0; k < c.size(); ++k) out[offset[st] + k] += c[k];
    }
  }
  return out;
}

CrossedProduct crossed_product(const UnitalAction& act) {
  const Report rep = validate_action(act);
  if (!rep.ok()) throw InputError("action invalid: " + rep.failures.front());
  const auto& m = *act.monoid;
  const Algebra& a = act.algebra;
  const FieldSpec& f = a.field;

  CrossedProduct c;
  c.action = act;
  for (Elt s = 0; s < m.size(); ++s) c.ideal.emplace_back(ideal_basis(a, act.one[s]));
  c.offset = offsets_of(c.ideal);
  c.algebra.field = f;

  // a delta_s - a delta_t for s < t and a over the basis of 1_sA
  std::vector<Vector> gens;
  for (Elt s = 0; s < m.size(); ++s)
    for (Elt t = 0; t < m.size(); ++t) {
      if (s == t || !invmon::natural_leq(m, s, t)) continue;
      for (std::size_t j = 0; j < c.ideal[s].dim(); ++j) {
        const Vector av = c.ideal[s].basis().column(j);
        Vector g = c.lift(s, av);
        const Vector h = c.lift(t, av);
        for (std::size_t k = 0; k < g.size(); ++k) g[k] -= h[k];
        gens.push_back(std::move(g));
      }
    }
  c.n_space = quotient_space(c.l_dim(), Matrix::from_columns(f, c.l_dim(), gens));
  const QuotientSpace& q = c.n_space;

  for (std::size_t g = 0; g < q.subspace_basis.cols(); ++g) {
    const Vector gv = q.subspace_basis.column(g);
    for (std::size_t b = 0; b < c.l_dim(); ++b) {
      const Vector bv = unit_vector(f, c.l_dim(), b);
      if (!is_zero(q.projection * c.l_mul(gv, bv)) || !is_zero(q.projection * c.l_mul(bv, gv)))
        throw InternalError("induced multiplication ill-defined");
    }
  }

  auto mul = [&](const Vector& x, const Vector& y) { return c.l_mul(x, y); };
  c.algebra = quotient_algebra(f, q.projection, q.section, mul, q.projection * c.lift(m.unit(), a.unit));
  try {
    c.algebra.validate();
  } catch (const InputError& e) {
    throw InternalError(std::string("crossed product is not an algebra: ") + e.what());
  }

  c.embed_a = Matrix(f, q.dim(), a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) c.embed_a.set_column(i, q.projection * c.lift(m.unit(), a.basis_vector(i)));
  for (Elt s = 0; s < m.size(); ++s) c.gamma.push_back(q.projection * c.lift(s, act.one[s]));

  if (mat_rank(c.embed_a) != a.dim) throw InternalError("A -> A x S is not injective");
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (c.embed_a * a.mul(a.basis_vector(i), a.basis_vector(j)) !=
          c.algebra.mul(c.embed_a.column(i), c.embed_a.column(j)))
        throw InternalError("A -> A x S is not multiplicative");
  for (Elt s = 0; s < m.size(); ++s)
    for (Elt t = 0; t < m.size(); ++t)
      if (c.algebra.mul(c.gamma[s], c.gamma[t]) != c.gamma[m.mul(s, t)])
        throw InternalError("gamma is not multiplicative");
  return c;
}

Vector SkewGroupAlgebra::lift(Elt g, std::span<const Scalar> a) const {
  return place(algebra.field, offset.back(), offset[g], domain[g].coords(a));
}

SkewGroupAlgebra skew_group_algebra(const PartialGroupAction& p) {
  const auto& g = *p.group;
  const Algebra& a = p.algebra;
  SkewGroupAlgebra out;
  out.action = p;
  for (Elt x = 0; x < g.size(); ++x) out.domain.emplace_back(ideal_basis(a, p.domain_unit[x]));
  out.offset = offsets_of(out.domain);
  const std::size_t n = out.offset.back();
  out.algebra.field = a.field;

  // a delta_x . b delta_y = T_x(T_{x^-1}(a) b) delta_xy
  auto mul = [&](const Vector& u, const Vector& v) {
    Vector r = zero_vector(a.field, n);
    for (Elt x = 0; x < g.size(); ++x)
      for (Elt y = 0; y < g.size(); ++y) {
        Vector ux(u.begin() + out.offset[x], u.begin() + out.offset[x + 1]);
        Vector vy(v.begin() + out.offset[y], v.begin() + out.offset[y + 1]);
        if (is_zero(ux) || is_zero(vy)) continue;
        const Vector av = out.domain[x].basis() * ux, bv = out.domain[y].basis() * vy;
        const Vector prod = p.maps[x] * a.mul(p.maps[g.inv(x)] * av, bv);
        const Elt xy = g.mul(x, y);
        const Vector c = out.domain[xy].coords(prod);
        for (std::size_t k = 0; k < c.size(); ++k) r[out.offset[xy] + k] += c[k];
      }
    return r;
  };
  const Matrix id = Matrix::identity(a.field, n);
  out.algebra = quotient_algebra(a.field, id, id, mul, out.lift(g.unit(), a.unit));
  out.algebra.validate();
  return out;
}

PhiReport phi_map(const UnitalAction& act) {
  if (!is_compatible(act)) throw InputError("action not compatible");
  PhiReport r{crossed_product(act), induced_partial_action(act), {}, {}};
  r.skew = skew_group_algebra(r.induced.action);
  const CrossedProduct& c = r.crossed;
  const SkewGroupAlgebra& k = r.skew;
  const Algebra& a = act.algebra;
  const FieldSpec& f = a.field;
  const std::size_t target = k.offset.back();

  Matrix phi_l(f, target, c.l_dim());
  for (std::size_t i = 0; i < c.l_dim(); ++i) {
    const Elt s = c.block_of(i);
    const Vector av = c.ideal[s].basis().column(i - c.offset[s]);
    phi_l.set_column(i, k.lift(r.induced.image.proj[s], av));
  }
  r.phi = phi_l * c.n_space.section;

  bool hom = (phi_l * c.n_space.subspace_basis).is_zero() && r.phi * c.algebra.unit == k.algebra.unit;
  const std::size_t d = c.algebra.dim;
  for (std::size_t i = 0; i < d && hom; ++i)
    for (std::size_t j = 0; j < d && hom; ++j) {
      const Vector ei = unit_vector(f, d, i), ej = unit_vector(f, d, j);
      hom = r.phi * c.algebra.mul(ei, ej) == k.algebra.mul(r.phi.column(i), r.phi.column(j));
    }
  r.homomorphism = hom;
  r.surjective = mat_rank(r.phi) == target;
  r.bijective = r.surjective && d == target;

  bool bimod = true;
  for (std::size_t i = 0; i < a.dim && bimod; ++i) {
    const Vector ai = c.embed_a.column(i);
    const Vector ai_skew = k.lift(r.induced.image.proj[act.monoid->unit()], a.basis_vector(i));
    for (std::size_t j = 0; j < d && bimod; ++j) {
      const Vector x = unit_vector(f, d, j);
      bimod = r.phi * c.algebra.mul(ai, x) == k.algebra.mul(ai_skew, r.phi * x) &&
              r.phi * c.algebra.mul(x, ai) == k.algebra.mul(r.phi * x, ai_skew);
    }
  }
  r.bimodule_map = bimod;
  return r;
}

KsReport ks_as_crossed_product(std::shared_ptr<const InverseMonoid> sp, FieldSpec field) {
  const auto& m = *sp;
  if (!invmon::is_e_unitary(m)) throw InputError("not E-unitary");
  const Algebra a = semilattice_algebra(m, field);
  invmon::GroupImage gi = invmon::max_group_image(m);
  const std::size_t ng = gi.group.size();
  std::vector<std::vector<Elt>> members(ng);
  for (Elt s = 0; s < m.size(); ++s) members[gi.proj[s]].push_back(s);
  auto idem_vec = [&](Elt e) { return unit_vector(field, a.dim, m.idempotent_index(e)); };

  PartialGroupAction p{std::make_shared<const InverseMonoid>(gi.group), a, {}, {}};
  for (std::size_t g = 0; g < ng; ++g) {
    std::vector<Vector> gens;
    for (Elt s : members[g]) gens.push_back(idem_vec(m.ran(s)));
    p.domain_unit.push_back(ideal_sum_unit(a, gens));
  }
  for (std::size_t g = 0; g < ng; ++g) {
    // tau_g(s^-1 s) = s s^-1 on D_{g^-1} = span{s^-1 s : s in g}
    const Vector& dom = p.domain_unit[gi.group.inv(g)];
    Matrix map(field, a.dim, a.dim);
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vector y = a.mul(dom, a.basis_vector(j));
      Vector img = zero_vector(field, a.dim);
      for (Elt s : members[g]) {
        const std::size_t d = m.idempotent_index(m.dom(s));
        img[m.idempotent_index(m.ran(s))] += y[d];
        y[d] = Scalar::in(field, 0);
      }
      if (!is_zero(y)) throw InternalError("D_{g^-1} is not spanned by the domains of g");
      map.set_column(j, img);
    }
    p.maps.push_back(std::move(map));
  }
  const Report rep = p.check();
  if (!rep.ok()) throw InternalError("partial action on KE(S) invalid: " + rep.failures.front());

  KsReport r{{std::move(gi), std::move(p)}, {}, {}};
  r.skew = skew_group_algebra(r.induced.action);
  const auto& k = r.skew;
  const std::size_t target = k.offset.back();
  r.phi = Matrix(field, target, m.size());
  for (Elt s = 0; s < m.size(); ++s) r.phi.set_column(s, k.lift(r.induced.image.proj[s], idem_vec(m.ran(s))));
  r.bijective = target == m.size() && mat_rank(r.phi) == target;

  bool hom = r.phi.column(m.unit()) == k.algebra.unit;
  bool bimod = true;
  for (Elt s = 0; s < m.size(); ++s) {
    for (Elt t = 0; t < m.size(); ++t)
      hom = hom && r.phi.column(m.mul(s, t)) == k.algebra.mul(r.phi.column(s), r.phi.column(t));
    for (Elt e : m.idempotents()) {
      const Vector e1 = k.lift(r.induced.image.proj[m.unit()], idem_vec(e));
      bimod = bimod && r.phi.column(m.mul(e, s)) == k.algebra.mul(e1, r.phi.column(s)) &&
              r.phi.column(m.mul(s, e)) == k.algebra.mul(r.phi.column(s), e1);
    }
  }
  r.homomorphism = hom;
  r.bimodule_map = bimod;
  return r;
}

Matrix sigma_sum_map(const CrossedProduct& c) {
  const auto p = invmon::sigma_classes(*c.action.monoid);
  const std::size_t da = c.action.algebra.dim;
  Matrix sums(c.algebra.field, p.count * da, c.l_dim());
  for (std::size_t i = 0; i < c.l_dim(); ++i) {
    const Elt s = c.block_of(i);
    const Vector av = c.ideal[s].basis().column(i - c.offset[s]);
    for (std::size_t k = 0; k < da; ++k) sums(p.class_of[s] * da + k, i) = av[k];
  }
  return sums;
}

bool sigma_class_sums_vanish(const CrossedProduct& c, std::span<const Scalar> x) {
  return is_zero(sigma_sum_map(c) * x);
}

}  // namespace semihom::crossprod
