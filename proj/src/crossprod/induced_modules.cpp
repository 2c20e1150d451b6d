#include "semihom/induced_modules.hpp"

namespace semihom::crossprod {

monhom::KSModule module_as_ks(const Bimodule& m, const CrossedProduct& c) {
  if (!(m.algebra == c.algebra)) throw InputError("bimodule axioms fail: bimodule is over a different algebra");
  m.validate();
  const auto& s = *c.action.monoid;
  monhom::KSModule v{c.action.monoid, c.algebra.field, m.dim, {}, monhom::Side::Left};
  for (Elt x = 0; x < s.size(); ++x) v.act.push_back(m.left_of(c.gamma[x]) * m.right_of(c.gamma[s.inv(x)]));
  try {
    v.validate();
  } catch (const InputError& e) {
    throw InputError(std::string("bimodule axioms fail: ") + e.what());
  }
  return v;
}

Bimodule bimodule_from_l(const CrossedProduct& c, std::size_t dim, const std::vector<Matrix>& left_l,
                         const std::vector<Matrix>& right_l) {
  if (left_l.size() != c.l_dim() || right_l.size() != c.l_dim())
    throw InputError("bimodule axioms fail: expected one matrix per L basis element");
  const FieldSpec& f = c.algebra.field;
  auto combine = [&](const std::vector<Matrix>& ms, std::span<const Scalar> coeffs) {
    Matrix out(f, dim, dim);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) out += ms[i].scaled(coeffs[i]);
    return out;
  };
  const Matrix& n = c.n_space.subspace_basis;
  for (std::size_t j = 0; j < n.cols(); ++j) {
    const Vector v = n.column(j);
    if (!combine(left_l, v).is_zero() || !combine(right_l, v).is_zero()) throw InputError("N does not act by zero");
  }
  Bimodule m{c.algebra, dim, {}, {}};
  for (std::size_t k = 0; k < c.algebra.dim; ++k) {
    const Vector rep = c.n_space.section.column(k);
    m.left.push_back(combine(left_l, rep));
    m.right.push_back(combine(right_l, rep));
  }
  m.validate();
  return m;
}

Coinvariants coinvariants(const Bimodule& m, const CrossedProduct& c) {
  const monhom::KSModule v = module_as_ks(m, c);
  const std::size_t da = c.action.algebra.dim;
  std::vector<Vector> span;
  for (std::size_t i = 0; i < da; ++i) {
    const Vector a = c.embed_a.column(i);
    const Matrix comm = m.left_of(a) - m.right_of(a);
    for (std::size_t j = 0; j < m.dim; ++j) span.push_back(comm.column(j));
  }
  Coinvariants out{quotient_space(m.dim, Matrix::from_columns(c.algebra.field, m.dim, span)), {}};
  out.module = {v.monoid, v.field, out.quotient.dim(), {}, monhom::Side::Left};
  for (const auto& a : v.act) out.module.act.push_back(induced_map(a, out.quotient, out.quotient));
  out.module.validate();
  return out;
}

Invariants invariants_sub(const Bimodule& m, const CrossedProduct& c) {
  const monhom::KSModule v = module_as_ks(m, c);
  const std::size_t da = c.action.algebra.dim;
  Matrix stacked(c.algebra.field, 0, m.dim);
  for (std::size_t i = 0; i < da; ++i) {
    const Vector a = c.embed_a.column(i);
    stacked = stacked.vstack(m.left_of(a) - m.right_of(a));
  }
  const SubspaceCoordinates sub(kernel_basis(stacked));
  Invariants out{sub.basis(), {v.monoid, v.field, sub.dim(), {}, monhom::Side::Left}};
  // coords() asserts that each act(s) maps M^A into itself
  for (const auto& a : v.act) out.module.act.push_back(sub.coords(a * sub.basis()));
  out.module.validate();
  return out;
}

}  // namespace semihom::crossprod
