#include "semihom/algebra.hpp"

#include <string>

namespace semihom::crossprod {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

Matrix combine(const std::vector<Matrix>& mats, std::span<const Scalar> a, const FieldSpec& f, std::size_t n) {
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) out += mats[i].scaled(a[i]);
  return out;
}

}  // namespace

void Algebra::validate() const {
  if (sc.size() != dim * dim * dim)
    throw InputError("structure constants: expected " + std::to_string(dim * dim * dim) + " entries, got " +
                     std::to_string(sc.size()));
  if (unit.size() != dim) throw InputError("unit vector has wrong length");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Vector bij = mul(basis_vector(i), basis_vector(j));
      for (std::size_t k = 0; k < dim; ++k) {
        const Vector bk = basis_vector(k);
        if (mul(bij, bk) != mul(basis_vector(i), mul(basis_vector(j), bk)))
          throw InputError("not associative at " + triple(i, j, k));
      }
    }
  for (std::size_t i = 0; i < dim; ++i) {
    const Vector b = basis_vector(i);
    if (mul(unit, b) != b || mul(b, unit) != b)
      throw InputError("unit is not a two-sided identity (fails on basis element " + std::to_string(i) + ")");
  }
}

Vector Algebra::mul(std::span<const Scalar> a, std::span<const Scalar> b) const {
  Vector out = zero_vector(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (!c(i, j, k).is_zero()) out[k] += ab * c(i, j, k);
    }
  }
  return out;
}

Matrix Algebra::left_mult(std::span<const Scalar> a) const {
  Matrix m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_column(j, mul(a, basis_vector(j)));
  return m;
}

Matrix Algebra::right_mult(std::span<const Scalar> a) const {
  Matrix m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_column(j, mul(basis_vector(j), a));
  return m;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (c(i, j, k) != c(j, i, k)) return false;
  return true;
}

Algebra algebra_from_products(FieldSpec field, std::size_t dim, const std::vector<std::vector<Vector>>& products,
                              Vector unit) {
  Algebra a{field, dim, std::vector<Scalar>(dim * dim * dim, Scalar::in(field, 0)), std::move(unit)};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) a.c(i, j, k) = products[i][j][k] + Scalar::in(field, 0);
  for (auto& u : a.unit) u += Scalar::in(field, 0);
  return a;
}

Algebra ground_field(FieldSpec field) { return diagonal_algebra(field, 1); }

Algebra diagonal_algebra(FieldSpec field, std::size_t n) {
  Algebra a{field, n, std::vector<Scalar>(n * n * n, Scalar::in(field, 0)), Vector(n, Scalar::in(field, 1))};
  for (std::size_t i = 0; i < n; ++i) a.c(i, i, i) = Scalar::in(field, 1);
  return a;
}

Algebra matrix_algebra(FieldSpec field, std::size_t n) {
  const std::size_t d = n * n;
  Algebra a{field, d, std::vector<Scalar>(d * d * d, Scalar::in(field, 0)), zero_vector(field, d)};
  for (std::size_t i = 0; i < n; ++i) {
    a.unit[i * n + i] = Scalar::in(field, 1);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) a.c(i * n + j, j * n + l, i * n + l) = Scalar::in(field, 1);
  }
  return a;
}

Algebra dual_numbers(FieldSpec field) {
  Algebra a{field, 2, std::vector<Scalar>(8, Scalar::in(field, 0)), unit_vector(field, 2, 0)};
  a.c(0, 0, 0) = Scalar::in(field, 1);
  a.c(0, 1, 1) = Scalar::in(field, 1);
  a.c(1, 0, 1) = Scalar::in(field, 1);
  return a;
}

Algebra semigroup_algebra(const InverseMonoid& s, FieldSpec field) {
  const std::size_t n = s.size();
  Algebra a{field, n, std::vector<Scalar>(n * n * n, Scalar::in(field, 0)), unit_vector(field, n, s.unit())};
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) a.c(x, y, s.mul(x, y)) = Scalar::in(field, 1);
  return a;
}

Algebra semilattice_algebra(const InverseMonoid& s, FieldSpec field) {
  const auto& e = s.idempotents();
  const std::size_t n = e.size();
  Algebra a{field, n, std::vector<Scalar>(n * n * n, Scalar::in(field, 0)),
            unit_vector(field, n, s.idempotent_index(s.unit()))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.c(i, j, s.idempotent_index(s.mul(e[i], e[j]))) = Scalar::in(field, 1);
  return a;
}

void Bimodule::validate() const {
  const std::size_t n = algebra.dim;
  auto fail = [](const std::string& what) { throw InputError("bimodule axioms fail: " + what); };
  if (left.size() != n || right.size() != n) fail("need one left and one right matrix per algebra basis element");
  for (std::size_t i = 0; i < n; ++i)
    if (left[i].rows() != dim || left[i].cols() != dim || right[i].rows() != dim || right[i].cols() != dim)
      fail("action matrix " + std::to_string(i) + " has the wrong shape");
  if (!left_of(algebra.unit).is_identity()) fail("unit does not act as the identity on the left");
  if (!right_of(algebra.unit).is_identity()) fail("unit does not act as the identity on the right");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector bij = algebra.mul(algebra.basis_vector(i), algebra.basis_vector(j));
      if (!(left[i] * left[j] == left_of(bij))) fail("left action not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!(right[j] * right[i] == right_of(bij))) fail("right action not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!(left[i] * right[j] == right[j] * left[i])) fail("left and right actions do not commute at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

Matrix Bimodule::left_of(std::span<const Scalar> a) const { return combine(left, a, algebra.field, dim); }
Matrix Bimodule::right_of(std::span<const Scalar> a) const { return combine(right, a, algebra.field, dim); }

Bimodule regular_bimodule(const Algebra& a) {
  Bimodule m{a, a.dim, {}, {}};
  for (std::size_t i = 0; i < a.dim; ++i) {
    m.left.push_back(a.left_mult(a.basis_vector(i)));
    m.right.push_back(a.right_mult(a.basis_vector(i)));
  }
  return m;
}

}  // namespace semihom::crossprod
