#include "semihom/ks_module.hpp"

#include <string>

namespace semihom::monhom {

void KSModule::validate() const {
  if (!monoid) throw InputError("module has no monoid");
  const auto& m = *monoid;
  if (act.size() != m.size())
    throw InputError("module/monoid mismatch: " + std::to_string(act.size()) + " action matrices for a monoid of size " +
                     std::to_string(m.size()));
  for (std::size_t s = 0; s < act.size(); ++s) {
    if (act[s].rows() != dim || act[s].cols() != dim)
      throw InputError("action matrix of element " + std::to_string(s) + " is not " + std::to_string(dim) + "x" +
                       std::to_string(dim));
    if (!(act[s].field() == field)) throw InputError("action matrix field mismatch");
  }
  if (!act[m.unit()].is_identity()) throw InputError("unit does not act as the identity");
  for (Elt s = 0; s < m.size(); ++s)
    for (Elt t = 0; t < m.size(); ++t) {
      const Matrix prod = side == Side::Left ? act[s] * act[t] : act[t] * act[s];
      if (!(prod == act[m.mul(s, t)]))
        throw InputError(std::string(side == Side::Left ? "not a left module" : "not a right module") + " at (" +
                         std::to_string(s) + "," + std::to_string(t) + ")");
    }
}

KSModule trivial_module_ke(std::shared_ptr<const InverseMonoid> s, FieldSpec field, Side side) {
  const auto& m = *s;
  const auto& idem = m.idempotents();
  KSModule v{s, field, idem.size(), {}, side};
  for (Elt x = 0; x < m.size(); ++x) {
    Matrix a(field, idem.size(), idem.size());
    for (std::size_t j = 0; j < idem.size(); ++j) {
      const Elt e = idem[j];
      const Elt img = side == Side::Left ? m.mul(m.mul(x, e), m.inv(x)) : m.mul(m.mul(m.inv(x), e), x);
      a(m.idempotent_index(img), j) = Scalar::in(field, 1);
    }
    v.act.push_back(std::move(a));
  }
  return v;
}

KSModule regular_module(std::shared_ptr<const InverseMonoid> s, FieldSpec field) {
  const auto& m = *s;
  KSModule v{s, field, m.size(), {}, Side::Left};
  for (Elt x = 0; x < m.size(); ++x) {
    Matrix a(field, m.size(), m.size());
    for (Elt t = 0; t < m.size(); ++t) a(m.mul(x, t), t) = Scalar::in(field, 1);
    v.act.push_back(std::move(a));
  }
  return v;
}

KSModule trivial_character(std::shared_ptr<const InverseMonoid> s, FieldSpec field) {
  KSModule v{s, field, 1, {}, Side::Left};
  v.act.assign(s->size(), Matrix::identity(field, 1));
  return v;
}

KSModule direct_sum(const KSModule& a, const KSModule& b) {
  if (a.monoid != b.monoid || a.side != b.side || !(a.field == b.field))
    throw InputError("direct_sum: modules over different monoids, sides or fields");
  KSModule v{a.monoid, a.field, a.dim + b.dim, {}, a.side};
  for (std::size_t s = 0; s < a.act.size(); ++s) {
    Matrix m(a.field, v.dim, v.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) m(i, j) = a.act[s](i, j);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b.act[s](i, j);
    v.act.push_back(std::move(m));
  }
  return v;
}

}  // namespace semihom::monhom
