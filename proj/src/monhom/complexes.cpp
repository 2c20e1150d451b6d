#include "semihom/complexes.hpp"

#include <limits>
#include <string>

namespace semihom::monhom {

namespace {

using Tuple = std::vector<Elt>;

// Enumerating the tuples themselves is bounded independently of the
// summand dimensions, which may be zero for most of them.
constexpr std::size_t kTupleFactor = 20;

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) throw CapError("size cap exceeded");
    r *= base;
  }
  if (r > limit) throw CapError("size cap exceeded");
  return r;
}

Tuple decode(std::size_t index, std::size_t length, std::size_t base) {
  Tuple t(length);
  for (std::size_t i = length; i-- > 0;) {
    t[i] = index % base;
    index /= base;
  }
  return t;
}

std::size_t encode(const Tuple& t, std::size_t base) {
  std::size_t k = 0;
  for (Elt a : t) k = k * base + a;
  return k;
}

struct Projectors {
  std::vector<SubspaceCoordinates> by_idempotent;  // indexed like idempotents()
};

Projectors make_projectors(const KSModule& v) {
  Projectors p;
  for (Elt e : v.monoid->idempotents()) p.by_idempotent.emplace_back(image_basis(v.act[e]));
  return p;
}

void check_left(const KSModule& v) {
  if (v.side != Side::Left) throw InputError("homology and cohomology take a left module");
  v.validate();
}

void emit_block(std::vector<Triplet>& out, const Matrix& block, std::size_t row0, std::size_t col0,
                const Scalar& sign) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      if (!block(i, j).is_zero()) out.push_back({row0 + i, col0 + j, sign * block(i, j)});
}

// Shared frame: degree spaces and block offsets, given which idempotent
// labels each tuple.
template <typename Label>
ChainComplexData frame(const KSModule& v, std::size_t max_degree, std::size_t cap,
                       ChainComplexData::Direction dir, const Projectors& proj, Label label) {
  const auto& m = *v.monoid;
  ChainComplexData c;
  c.direction = dir;
  c.field = v.field;
  c.max_degree = max_degree;
  c.monoid_size = m.size();
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const std::size_t count = checked_power(m.size(), n, cap * kTupleFactor);
    std::vector<std::size_t> offsets(count + 1, 0);
    for (std::size_t k = 0; k < count; ++k) {
      const Elt e = label(decode(k, n, m.size()));
      offsets[k + 1] = offsets[k] + proj.by_idempotent[m.idempotent_index(e)].dim();
      if (offsets[k + 1] > cap) throw CapError("size cap exceeded");
    }
    c.space_dims.push_back(offsets.back());
    c.block_offsets.push_back(std::move(offsets));
  }
  return c;
}

}  // namespace

std::vector<Elt> ChainComplexData::tuple(std::size_t degree, std::size_t block) const {
  return decode(block, degree, monoid_size);
}

bool ChainComplexData::composites_vanish() const {
  if (direction == Direction::Homological) {
    for (std::size_t n = 2; n < maps.size(); ++n)
      if (!(maps[n - 1] * maps[n]).is_zero()) return false;
  } else {
    for (std::size_t n = 1; n < maps.size(); ++n)
      if (!(maps[n] * maps[n - 1]).is_zero()) return false;
  }
  return true;
}

ChainComplexData homology_complex(const KSModule& v, std::size_t max_degree, std::size_t column_cap) {
  check_left(v);
  const auto& m = *v.monoid;
  const std::size_t base = m.size();
  const Projectors proj = make_projectors(v);
  auto label = [&](const Tuple& t) { return m.dom(m.mul(t)); };
  ChainComplexData c =
      frame(v, max_degree, column_cap, ChainComplexData::Direction::Homological, proj, label);
  auto coords_of = [&](const Tuple& t) -> const SubspaceCoordinates& {
    return proj.by_idempotent[m.idempotent_index(label(t))];
  };

  c.maps.emplace_back(v.field, 0, c.space_dims[0]);
  for (std::size_t n = 1; n <= max_degree; ++n) {
    std::vector<Triplet> trip;
    const auto& cols = c.block_offsets[n];
    const auto& rows = c.block_offsets[n - 1];
    for (std::size_t k = 0; k + 1 < cols.size(); ++k) {
      if (cols[k + 1] == cols[k]) continue;
      // u = (s_n, ..., s_1), so s_i sits at position n - i.
      const Tuple u = decode(k, n, base);
      const Matrix& b = coords_of(u).basis();
      auto add = [&](const Tuple& target, const Matrix& image, long sign) {
        const Matrix block = coords_of(target).coords(image);
        emit_block(trip, block, rows[encode(target, base)], cols[k], Scalar::in(v.field, sign));
      };
      add(Tuple(u.begin(), u.end() - 1), v.act[u[n - 1]] * b, 1);
      for (std::size_t i = 1; i < n; ++i) {
        Tuple t;
        t.reserve(n - 1);
        for (std::size_t p = 0; p < n; ++p) {
          if (p == n - 1 - i) {
            t.push_back(m.mul(u[p], u[p + 1]));
            ++p;
          } else {
            t.push_back(u[p]);
          }
        }
        add(t, b, i % 2 ? -1 : 1);
      }
      add(Tuple(u.begin() + 1, u.end()), b, n % 2 ? -1 : 1);
    }
    c.maps.push_back(
        SparseMatrix::from_triplets(v.field, c.space_dims[n - 1], c.space_dims[n], std::move(trip)));
  }
  return c;
}

ChainComplexData cohomology_complex(const KSModule& v, std::size_t max_degree, std::size_t column_cap) {
  check_left(v);
  const auto& m = *v.monoid;
  const std::size_t base = m.size();
  const Projectors proj = make_projectors(v);
  auto label = [&](const Tuple& t) { return m.ran(m.mul(t)); };
  ChainComplexData c =
      frame(v, max_degree, column_cap, ChainComplexData::Direction::Cohomological, proj, label);
  auto coords_of = [&](const Tuple& t) -> const SubspaceCoordinates& {
    return proj.by_idempotent[m.idempotent_index(label(t))];
  };

  // Row-block by row-block: each target tuple (s_1..s_{n+1}) reads n+2 source summands.
  for (std::size_t n = 0; n < max_degree; ++n) {
    std::vector<Triplet> trip;
    const auto& rows = c.block_offsets[n + 1];
    const auto& cols = c.block_offsets[n];
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
      if (rows[k + 1] == rows[k]) continue;
      const Tuple t = decode(k, n + 1, base);
      const SubspaceCoordinates& target = coords_of(t);
      auto add = [&](const Tuple& source, const Matrix* map, long sign) {
        const std::size_t src = encode(source, base);
        if (cols[src + 1] == cols[src]) return;
        const Matrix& b = coords_of(source).basis();
        const Matrix block = target.coords(map ? *map * b : b);
        emit_block(trip, block, rows[k], cols[src], Scalar::in(v.field, sign));
      };
      add(Tuple(t.begin() + 1, t.end()), &v.act[t[0]], 1);
      for (std::size_t i = 1; i <= n; ++i) {
        Tuple s;
        s.reserve(n);
        for (std::size_t p = 0; p <= n; ++p) {
          if (p == i - 1) {
            s.push_back(m.mul(t[p], t[p + 1]));
            ++p;
          } else {
            s.push_back(t[p]);
          }
        }
        add(s, nullptr, i % 2 ? -1 : 1);
      }
      add(Tuple(t.begin(), t.end() - 1), &v.act[label(t)], (n + 1) % 2 ? -1 : 1);
    }
    c.maps.push_back(
        SparseMatrix::from_triplets(v.field, c.space_dims[n + 1], c.space_dims[n], std::move(trip)));
  }
  return c;
}

std::vector<std::size_t> betti_numbers(const ChainComplexData& c) {
  std::vector<std::size_t> ranks;
  for (const auto& d : c.maps) ranks.push_back(d.rank());
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < c.max_degree; ++n) {
    std::size_t in = 0, outgoing = 0;
    if (c.direction == ChainComplexData::Direction::Homological) {
      outgoing = ranks[n];   // d_n : C_n -> C_{n-1}
      in = ranks[n + 1];     // d_{n+1}
    } else {
      outgoing = ranks[n];          // delta^n
      in = n ? ranks[n - 1] : 0;    // delta^{n-1}
    }
    out.push_back(c.space_dims[n] - outgoing - in);
  }
  return out;
}

std::vector<std::size_t> homology(const KSModule& v, std::size_t max_degree, std::size_t column_cap) {
  return betti_numbers(homology_complex(v, max_degree + 1, column_cap));
}

std::vector<std::size_t> cohomology(const KSModule& v, std::size_t max_degree, std::size_t column_cap) {
  return betti_numbers(cohomology_complex(v, max_degree + 1, column_cap));
}

// ---------------------------------------------------------------------------
// Projective resolution

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Degree {
  std::vector<ResolutionComplex::Generator> gens;
  std::vector<std::size_t> index;  // tuple code * |S| + t -> generator, or kNone
};

}  // namespace

bool ResolutionComplex::composites_vanish() const {
  for (std::size_t n = 1; n < boundary.size(); ++n)
    if (!(boundary[n - 1] * boundary[n]).is_zero()) return false;
  return true;
}

bool ResolutionComplex::homotopy_identity_holds() const {
  auto is_identity = [](const SparseMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& col = a.column(j);
      if (col.size() != 1 || col[0].first != j || !col[0].second.is_one()) return false;
    }
    return true;
  };
  if (!is_identity(boundary[0] * homotopy[0])) return false;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    // boundary[n + 1] * sigma_n + sigma_{n-1} * boundary[n]
    const SparseMatrix lhs = boundary[n + 1] * homotopy[n + 1] + homotopy[n] * boundary[n];
    if (!is_identity(lhs)) return false;
  }
  return true;
}

ResolutionComplex build_resolution(std::shared_ptr<const InverseMonoid> s, FieldSpec field,
                                   std::size_t max_degree, std::size_t column_cap) {
  const auto& m = *s;
  const std::size_t base = m.size();
  ResolutionComplex r;
  r.monoid = s;
  r.field = field;
  r.max_degree = max_degree;

  // Degrees 0..max_degree+2 are enumerated; the top one only as the target of
  // sigma_{max_degree+1}, which is not stored, so stop at max_degree+1.
  const std::size_t top = max_degree + 1;
  std::vector<Degree> deg(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t count = checked_power(base, n, column_cap * kTupleFactor);
    deg[n].index.assign(count * base, kNone);
    for (std::size_t k = 0; k < count; ++k) {
      Tuple tuple = decode(k, n, base);
      const Elt rr = m.ran(m.mul(tuple));
      for (Elt t = 0; t < base; ++t) {
        // d(t) <= r  iff  d(t) r = d(t)
        if (m.mul(m.dom(t), rr) != m.dom(t)) continue;
        deg[n].index[k * base + t] = deg[n].gens.size();
        deg[n].gens.push_back({t, tuple});
      }
    }
    if (deg[n].gens.size() > column_cap) throw CapError("size cap exceeded");
  }
  for (auto& d : deg) r.bases.push_back(d.gens);

  const Scalar one = Scalar::in(field, 1);
  const Scalar minus = Scalar::in(field, -1);
  // u(tuple) rewritten as (u r(prod tuple))(tuple)
  auto normal = [&](std::size_t n, Elt u, const Tuple& tuple) {
    const Elt t = m.mul(u, m.ran(m.mul(tuple)));
    const std::size_t i = deg[n].index[encode(tuple, base) * base + t];
    if (i == kNone) throw InternalError("normalised generator missing from basis");
    return i;
  };

  const std::size_t ne = m.idempotents().size();
  {
    std::vector<Triplet> trip;
    for (std::size_t j = 0; j < deg[0].gens.size(); ++j)
      trip.push_back({m.idempotent_index(m.ran(deg[0].gens[j].t)), j, one});
    r.boundary.push_back(SparseMatrix::from_triplets(field, ne, deg[0].gens.size(), std::move(trip)));
  }
  for (std::size_t n = 1; n <= top; ++n) {
    std::vector<Triplet> trip;
    for (std::size_t j = 0; j < deg[n].gens.size(); ++j) {
      const auto& [t, x] = deg[n].gens[j];
      trip.push_back({normal(n - 1, m.mul(t, x[0]), Tuple(x.begin() + 1, x.end())), j, one});
      for (std::size_t i = 1; i < n; ++i) {
        Tuple y(x.begin(), x.begin() + (i - 1));
        y.push_back(m.mul(x[i - 1], x[i]));
        y.insert(y.end(), x.begin() + (i + 1), x.end());
        trip.push_back({normal(n - 1, t, y), j, i % 2 ? minus : one});
      }
      trip.push_back({normal(n - 1, t, Tuple(x.begin(), x.end() - 1)), j, n % 2 ? minus : one});
    }
    r.boundary.push_back(
        SparseMatrix::from_triplets(field, deg[n - 1].gens.size(), deg[n].gens.size(), std::move(trip)));
  }

  {
    std::vector<Triplet> trip;
    for (std::size_t j = 0; j < ne; ++j)
      trip.push_back({normal(0, m.idempotents()[j], {}), j, one});
    r.homotopy.push_back(SparseMatrix::from_triplets(field, deg[0].gens.size(), ne, std::move(trip)));
  }
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::vector<Triplet> trip;
    for (std::size_t j = 0; j < deg[n].gens.size(); ++j) {
      const auto& [t, x] = deg[n].gens[j];
      Tuple y{t};
      y.insert(y.end(), x.begin(), x.end());
      trip.push_back({normal(n + 1, m.unit(), y), j, one});
    }
    r.homotopy.push_back(
        SparseMatrix::from_triplets(field, deg[n + 1].gens.size(), deg[n].gens.size(), std::move(trip)));
  }
  return r;
}

}  // namespace semihom::monhom
