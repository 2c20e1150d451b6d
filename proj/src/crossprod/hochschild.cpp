#include "semihom/hochschild.hpp"

namespace semihom::crossprod {

namespace {

using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

std::size_t checked_space(std::size_t base, std::size_t n, std::size_t factor, std::size_t cap) {
  std::size_t r = factor;
  for (std::size_t i = 0; i < n; ++i) {
    if (base != 0 && r > cap / base) throw CapError("size cap exceeded");
    r *= base;
  }
  if (r > cap) throw CapError("size cap exceeded");
  return r;
}

std::vector<std::size_t> digits(std::size_t code, std::size_t n, std::size_t base) {
  std::vector<std::size_t> d(n);
  for (std::size_t i = n; i-- > 0;) {
    d[i] = code % base;
    code /= base;
  }
  return d;
}

std::size_t code_of(const std::vector<std::size_t>& d, std::size_t base) {
  std::size_t c = 0;
  for (auto x : d) c = c * base + x;
  return c;
}

std::vector<Sparse> sparse_columns(const Matrix& m) {
  std::vector<Sparse> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) out[j].emplace_back(i, m(i, j));
  return out;
}

struct Tables {
  std::vector<std::vector<Sparse>> left, right;  // [a][x] -> sparse column
  std::vector<std::vector<Sparse>> product;      // [p][q] -> coefficients of b_p b_q
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> factors;  // [k] -> (p, q, c_pq^k)
};

Tables tables(const Bimodule& m) {
  const Algebra& a = m.algebra;
  Tables t;
  for (std::size_t i = 0; i < a.dim; ++i) {
    t.left.push_back(sparse_columns(m.left[i]));
    t.right.push_back(sparse_columns(m.right[i]));
  }
  t.product.assign(a.dim, std::vector<Sparse>(a.dim));
  t.factors.assign(a.dim, {});
  for (std::size_t p = 0; p < a.dim; ++p)
    for (std::size_t q = 0; q < a.dim; ++q)
      for (std::size_t k = 0; k < a.dim; ++k)
        if (!a.c(p, q, k).is_zero()) {
          t.product[p][q].emplace_back(k, a.c(p, q, k));
          t.factors[k].emplace_back(p, q, a.c(p, q, k));
        }
  return t;
}

monhom::ChainComplexData frame(const Bimodule& m, std::size_t top, std::size_t cap,
                               monhom::ChainComplexData::Direction dir) {
  m.validate();
  monhom::ChainComplexData c;
  c.direction = dir;
  c.field = m.algebra.field;
  c.max_degree = top;
  for (std::size_t n = 0; n <= top; ++n) c.space_dims.push_back(checked_space(m.algebra.dim, n, m.dim, cap));
  return c;
}

}  // namespace

monhom::ChainComplexData hochschild_chain_complex(const Bimodule& m, std::size_t top, std::size_t cap) {
  auto c = frame(m, top, cap, monhom::ChainComplexData::Direction::Homological);
  const std::size_t da = m.algebra.dim;
  const Tables t = tables(m);
  const FieldSpec& f = c.field;
  c.maps.emplace_back(f, 0, c.space_dims[0]);
  for (std::size_t n = 1; n <= top; ++n) {
    const std::size_t width = c.space_dims[n] / m.dim, lower = c.space_dims[n - 1] / m.dim;
    std::vector<Triplet> trip;
    for (std::size_t x = 0; x < m.dim; ++x)
      for (std::size_t w = 0; w < width; ++w) {
        const auto a = digits(w, n, da);
        const std::size_t col = x * width + w;
        const std::vector<std::size_t> tail(a.begin() + 1, a.end()), head(a.begin(), a.end() - 1);
        for (const auto& [r, v] : t.right[a[0]][x]) trip.push_back({r * lower + code_of(tail, da), col, v});
        for (std::size_t i = 1; i < n; ++i)
          for (const auto& [k, v] : t.product[a[i - 1]][a[i]]) {
            std::vector<std::size_t> merged(a.begin(), a.begin() + (i - 1));
            merged.push_back(k);
            merged.insert(merged.end(), a.begin() + (i + 1), a.end());
            trip.push_back({x * lower + code_of(merged, da), col, i % 2 ? -v : v});
          }
        for (const auto& [r, v] : t.left[a[n - 1]][x])
          trip.push_back({r * lower + code_of(head, da), col, n % 2 ? -v : v});
      }
    c.maps.push_back(SparseMatrix::from_triplets(f, c.space_dims[n - 1], c.space_dims[n], std::move(trip)));
  }
  return c;
}

monhom::ChainComplexData hochschild_cochain_complex(const Bimodule& m, std::size_t top, std::size_t cap) {
  auto c = frame(m, top, cap, monhom::ChainComplexData::Direction::Cohomological);
  const std::size_t da = m.algebra.dim, dm = m.dim;
  const Tables t = tables(m);
  const FieldSpec& f = c.field;
  for (std::size_t n = 0; n < top; ++n) {
    const std::size_t width = c.space_dims[n] / dm;
    std::vector<Triplet> trip;
    for (std::size_t w = 0; w < width; ++w) {
      const auto u = digits(w, n, da);
      for (std::size_t j = 0; j < dm; ++j) {
        const std::size_t col = w * dm + j;
        for (std::size_t a = 0; a < da; ++a) {
          std::vector<std::size_t> front{a};
          front.insert(front.end(), u.begin(), u.end());
          for (const auto& [r, v] : t.left[a][j]) trip.push_back({code_of(front, da) * dm + r, col, v});
          std::vector<std::size_t> back(u);
          back.push_back(a);
          for (const auto& [r, v] : t.right[a][j])
            trip.push_back({code_of(back, da) * dm + r, col, (n + 1) % 2 ? -v : v});
        }
        for (std::size_t i = 1; i <= n; ++i)
          for (const auto& [p, q, v] : t.factors[u[i - 1]]) {
            std::vector<std::size_t> split(u.begin(), u.begin() + (i - 1));
            split.push_back(p);
            split.push_back(q);
            split.insert(split.end(), u.begin() + i, u.end());
            trip.push_back({code_of(split, da) * dm + j, col, i % 2 ? -v : v});
          }
      }
    }
    c.maps.push_back(SparseMatrix::from_triplets(f, c.space_dims[n + 1], c.space_dims[n], std::move(trip)));
  }
  return c;
}

std::vector<std::size_t> hochschild_homology(const Bimodule& m, std::size_t max_degree, std::size_t cap) {
  return monhom::betti_numbers(hochschild_chain_complex(m, max_degree + 1, cap));
}

std::vector<std::size_t> hochschild_cohomology(const Bimodule& m, std::size_t max_degree, std::size_t cap) {
  return monhom::betti_numbers(hochschild_cochain_complex(m, max_degree + 1, cap));
}

std::optional<Vector> separability_idempotent(const Algebra& a) {
  const std::size_t d = a.dim;
  // unknown e_ij at column i * d + j
  Matrix sys(a.field, d + d * d * d, d * d);
  Vector rhs = zero_vector(a.field, sys.rows());
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) sys(k, i * d + j) = a.c(i, j, k);
    rhs[k] = a.unit[k];
  }
  // (b_l (x) 1) e - e (1 (x) b_l), coefficient of b_p (x) b_q
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t col = i * d + j;
        for (std::size_t p = 0; p < d; ++p) sys(d + (l * d + p) * d + j, col) += a.c(l, i, p);
        for (std::size_t q = 0; q < d; ++q) sys(d + (l * d + i) * d + q, col) -= a.c(j, l, q);
      }
  return solve(sys, rhs);
}

bool is_separable(const Algebra& a) { return separability_idempotent(a).has_value(); }

CollapseReport verify_separable_collapse_homology(const CrossedProduct& c, const Bimodule& m, std::size_t max_degree,
                                                  std::size_t cap) {
  if (!is_separable(c.action.algebra)) throw InputError("A not separable");
  const Coinvariants co = coinvariants(m, c);
  return {monhom::homology(co.module, max_degree, cap), hochschild_homology(m, max_degree, cap), co.module.dim};
}

CollapseReport verify_separable_collapse_cohomology(const CrossedProduct& c, const Bimodule& m,
                                                    std::size_t max_degree, std::size_t cap) {
  if (!is_separable(c.action.algebra)) throw InputError("A not separable");
  const Invariants inv = invariants_sub(m, c);
  return {monhom::cohomology(inv.module, max_degree, cap), hochschild_cohomology(m, max_degree, cap), inv.module.dim};
}

}  // namespace semihom::crossprod
