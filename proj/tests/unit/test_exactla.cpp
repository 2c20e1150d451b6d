#include "doctest.h"
#include "semihom/matrix.hpp"
#include "semihom/quotient.hpp"
#include "semihom/sparse.hpp"

#include <random>

using namespace semihom;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

Matrix random_matrix(std::mt19937& rng, FieldSpec f, std::size_t r, std::size_t c, int density) {
  std::uniform_int_distribution<int> coin(0, 99), val(-3, 3);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) < density) m(i, j) = Scalar::in(f, val(rng));
  return m;
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(Scalar::parse(Q, "3/6") == Scalar::from_rational(mpq_class(1, 2)));
  CHECK(Scalar::parse(Q, "-4/2").to_string() == "-2");
  const FieldSpec f5 = FieldSpec::prime(5);
  CHECK(Scalar::in(f5, 7).residue() == 2);
  CHECK((Scalar::in(f5, 2) * Scalar::in(f5, 3)).residue() == 1);
  CHECK((Scalar::in(f5, 2).inverse()).residue() == 3);
  CHECK(Scalar::in(f5, -1).to_string() == "4");
  CHECK_THROWS_AS(Scalar::in(f5, 0).inverse(), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::prime(4), InputError);
  CHECK(FieldSpec::parse("fp:3") == FieldSpec::prime(3));
  CHECK(FieldSpec::parse("q") == Q);
  CHECK_THROWS_AS(FieldSpec::parse("fp:x"), InputError);
  // integer literals adapt to the characteristic of the other operand
  CHECK((Scalar::in(f5, 3) + Scalar(4)).residue() == 2);
}

TEST_CASE("rank examples") {
  CHECK(mat_rank(Matrix::identity(Q, 2)) == 2);
  CHECK(mat_rank(Matrix(Q, 3, 4)) == 0);
  CHECK(mat_rank(Matrix::from_ints(Q, 2, 2, {1, 2, 2, 4})) == 1);
  CHECK(mat_rank(Matrix::from_ints(F2, 2, 2, {1, 2, 2, 4})) == 1);
  // rank drops mod p when a determinant vanishes only there
  CHECK(mat_rank(Matrix::from_ints(Q, 2, 2, {1, 1, 1, 3})) == 2);
  CHECK(mat_rank(Matrix::from_ints(F2, 2, 2, {1, 1, 1, 3})) == 1);
  CHECK_THROWS_AS(Matrix(Q, 2, 2, std::vector<Scalar>(3, Scalar(0))), InputError);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(Q, 3)).cols() == 0);
  const Matrix k = kernel_basis(Matrix(Q, 2, 3));
  CHECK(k.cols() == 3);
  CHECK(mat_rank(k) == 3);
  const Matrix k1 = kernel_basis(Matrix::from_ints(Q, 1, 2, {1, 1}));
  REQUIRE(k1.cols() == 1);
  CHECK(k1(0, 0) == -k1(1, 0));
  CHECK(!k1(0, 0).is_zero());
}

TEST_CASE("quotient examples") {
  const QuotientSpace a = quotient_space(3, Matrix(Q, 3, 0));
  CHECK(a.dim() == 3);
  CHECK(a.projection.is_identity());
  CHECK(quotient_space(3, Matrix::identity(Q, 3)).dim() == 0);
  const QuotientSpace c = quotient_space(2, Matrix::from_ints(Q, 2, 1, {1, 1}));
  CHECK(c.dim() == 1);
  CHECK(c.representatives == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(quotient_space(3, Matrix(Q, 2, 1)), InputError);
}

TEST_CASE("induced map examples") {
  const QuotientSpace q = quotient_space(2, Matrix::from_ints(Q, 2, 1, {1, 1}));
  CHECK(induced_map(Matrix::identity(Q, 2), q, q).is_identity());
  CHECK(induced_map(Matrix(Q, 2, 2), q, q).is_zero());
  // the swap fixes (1,1); (1,0) goes to (0,1) = (1,1) - (1,0)
  const Matrix g = induced_map(Matrix::from_ints(Q, 2, 2, {0, 1, 1, 0}), q, q);
  REQUIRE(g.rows() == 1);
  CHECK(g(0, 0) == Scalar(-1));
  const QuotientSpace zero = quotient_space(2, Matrix(Q, 2, 0));
  CHECK_THROWS_WITH_AS(induced_map(Matrix::identity(Q, 2), q, zero), "subspace not preserved", InputError);
}

TEST_CASE("solve and inverse") {
  const Matrix m = Matrix::from_ints(Q, 2, 2, {2, 1, 1, 1});
  const Matrix inv = inverse(m);
  CHECK((m * inv).is_identity());
  const Vector b{Scalar(3), Scalar(2)};
  const auto x = solve(m, b);
  REQUIRE(x);
  CHECK(m * *x == b);
  CHECK_FALSE(solve(Matrix::from_ints(Q, 2, 1, {1, 1}), Vector{Scalar(1), Scalar(0)}));
  CHECK_THROWS_AS(inverse(Matrix::from_ints(Q, 2, 2, {1, 2, 2, 4})), InputError);
}

TEST_CASE("property: rank-nullity, quotient and sparse agreement on random matrices") {
  std::mt19937 rng(20240611);
  for (FieldSpec f : {Q, F2, FieldSpec::prime(3), FieldSpec::prime(7)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(0, 7);
      const std::size_t r = dim(rng), c = dim(rng);
      const Matrix m = random_matrix(rng, f, r, c, 45);
      const std::size_t rk = mat_rank(m);
      const Matrix k = kernel_basis(m);
      CHECK(rk + k.cols() == c);
      CHECK((m * k).is_zero());
      CHECK(mat_rank(k) == k.cols());
      CHECK(image_basis(m).cols() == rk);
      CHECK(SparseMatrix::from_dense(m).rank() == rk);
      CHECK(SparseMatrix::from_dense(m).to_dense() == m);

      const QuotientSpace q = quotient_space(r, m);
      CHECK(q.dim() == r - rk);
      CHECK((q.projection * q.section).is_identity());
      CHECK((q.projection * m).is_zero());

      SubspaceCoordinates sc(image_basis(m));
      for (std::size_t j = 0; j < c; ++j) {
        const Vector col = m.column(j);
        CHECK(sc.contains(col));
        CHECK(sc.basis() * sc.coords(col) == col);
      }
    }
  }
}

TEST_CASE("property: induced maps commute with projections") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    // f preserves W = span(w) when f = P D P^-1 style; use block upper-triangular maps
    // in a basis whose first columns span W.
    const std::size_t n = 5, k = 2;
    Matrix p;
    do p = random_matrix(rng, Q, n, n, 70);
    while (mat_rank(p) < n);
    Matrix t = random_matrix(rng, Q, n, n, 60);
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) t(i, j) = Scalar(0);
    const Matrix f = p * t * inverse(p);
    std::vector<std::size_t> first{0, 1};
    const QuotientSpace q = quotient_space(n, p.select_columns(first));
    const Matrix g = induced_map(f, q, q);
    CHECK(g * q.projection == q.projection * f);
  }
}

TEST_CASE("sparse arithmetic") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(rng, FieldSpec::prime(5), 4, 6, 40);
    const Matrix b = random_matrix(rng, FieldSpec::prime(5), 6, 3, 40);
    const Matrix c = random_matrix(rng, FieldSpec::prime(5), 6, 3, 40);
    const auto sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b), sc = SparseMatrix::from_dense(c);
    CHECK((sa * sb).to_dense() == a * b);
    CHECK((sb + sc).to_dense() == b + c);
  }
  const auto t = SparseMatrix::from_triplets(Q, 2, 2, {{0, 0, Scalar(1)}, {0, 0, Scalar(-1)}, {1, 1, Scalar(2)}});
  CHECK(t.nonzeros() == 1);
}
