#include "doctest.h"
#include "oracles/group_bar.hpp"
#include "semihom/steinberg.hpp"
#include "support/groupoids.hpp"

using namespace semihom;
using namespace semihom::steinberg;
using Betti = std::vector<std::size_t>;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Bimodule regular(const FiniteGroupoid& g, FieldSpec f = Q) {
  return crossprod::regular_bimodule(steinberg_algebra(g, f));
}

}  // namespace

TEST_CASE("groupoid constructors") {
  const FiniteGroupoid p = pair_groupoid(2);
  CHECK(p.objects == 2);
  CHECK(p.arrows() == 4);
  const FiniteGroupoid z = group_as_groupoid(invmon::cyclic_group(2));
  CHECK(z.objects == 1);
  CHECK(z.arrows() == 2);
  const FiniteGroupoid u = disjoint_union(discrete_groupoid(1), discrete_groupoid(1));
  CHECK(u.objects == 2);
  CHECK(u.arrows() == 2);
  CHECK(u.comp[0][1] == kNoArrow);

  CHECK_THROWS_WITH_AS(group_as_groupoid(invmon::chain_semilattice(2)), "not a group", InputError);
  // two objects, one arrow each way, but the arrows do not compose to units
  CHECK_THROWS_AS(groupoid_from_data(2, {0, 1, 0, 1}, {0, 1, 1, 0}, {{0, 0, 0}, {1, 1, 1}}, {0, 1, 3, 2}),
                  InputError);
  const FiniteGroupoid back = groupoid_from_data(
      2, p.src, p.rng,
      [&] {
        std::vector<std::array<std::size_t, 3>> t;
        for (std::size_t a = 0; a < 4; ++a)
          for (std::size_t b = 0; b < 4; ++b)
            if (p.comp[a][b] != kNoArrow) t.push_back({a, b, p.comp[a][b]});
        return t;
      }(),
      p.inv);
  CHECK(back.comp == p.comp);
  CHECK(back.unit_of == p.unit_of);
}

TEST_CASE("bisection monoids") {
  const Bisections p = bisections(pair_groupoid(2));
  CHECK(p.monoid->size() == 7);
  CHECK(invmon::find_isomorphism(*p.monoid, invmon::symmetric_inverse_monoid(2)).has_value());
  CHECK(invmon::find_isomorphism(*bisections(pair_groupoid(1)).monoid, invmon::symmetric_inverse_monoid(1)));
  CHECK(bisections(group_as_groupoid(invmon::cyclic_group(2))).monoid->size() == 3);
  const Bisections d = bisections(discrete_groupoid(2));
  CHECK(d.monoid->size() == 4);
  CHECK(d.monoid->idempotents().size() == 4);
  // pair:3 has as many bisections as partial bijections of three points
  CHECK(bisections(pair_groupoid(3)).monoid->size() == 34);
  CHECK_THROWS_WITH_AS(bisections(pair_groupoid(5)), "enumeration cap exceeded", CapError);

  for (const auto& [name, g] : fixtures::small_groupoids()) {
    CAPTURE(name);
    const Bisections b = bisections(g);
    const auto& s = *b.monoid;
    std::uint32_t units = 0;
    for (auto e : g.unit_of) units |= 1u << e;
    CHECK(b.masks[s.unit()] == units);
    // idempotents are exactly the subsets of the unit space
    for (Elt x = 0; x < s.size(); ++x) CHECK(s.is_idempotent(x) == ((b.masks[x] & ~units) == 0));
  }
}

TEST_CASE("induced action on the unit space") {
  const FiniteGroupoid p = pair_groupoid(2);
  const Bisections b = bisections(p);
  const UnitalAction a = induced_action_hat(p, b, Q);
  // arrow from object 0 to object 1 is (1, 0), index 2
  const Elt u = b.index_of(1u << 2);
  CHECK(a.one[u] == Vector{Scalar(0), Scalar(1)});
  CHECK(a.theta[u] * unit_vector(Q, 2, 0) == unit_vector(Q, 2, 1));
  CHECK(is_zero(a.theta[u] * unit_vector(Q, 2, 1)));
  const Elt empty = b.index_of(0);
  CHECK(is_zero(a.one[empty]));
  CHECK(a.theta[empty].is_zero());

  const FiniteGroupoid d = discrete_groupoid(3);
  const Bisections db = bisections(d);
  const UnitalAction da = induced_action_hat(d, db, Q);
  for (Elt s = 0; s < db.monoid->size(); ++s) {
    Matrix diag(Q, 3, 3);
    for (std::size_t x = 0; x < 3; ++x) diag(x, x) = da.one[s][x];
    CHECK(da.theta[s] == diag);
  }
}

TEST_CASE("steinberg algebras") {
  CHECK(steinberg_algebra(pair_groupoid(2), Q) == crossprod::matrix_algebra(Q, 2));
  CHECK(steinberg_algebra(pair_groupoid(3), Q) == crossprod::matrix_algebra(Q, 3));
  CHECK(steinberg_algebra(group_as_groupoid(invmon::cyclic_group(3)), Q) ==
        crossprod::semigroup_algebra(invmon::cyclic_group(3), Q));
  CHECK(steinberg_algebra(discrete_groupoid(3), Q) == crossprod::diagonal_algebra(Q, 3));
}

TEST_CASE("psi examples") {
  const PsiReport one = psi_map(steinberg_data(discrete_groupoid(1), Q));
  CHECK(one.psi == Matrix::identity(Q, 1));

  const SteinbergData p = steinberg_data(pair_groupoid(2), Q);
  CHECK(p.crossed.algebra.dim == 4);
  CHECK(p.crossed.l_dim() - p.crossed.n_space.subspace_basis.cols() == 4);
  CHECK(psi_map(p).ok());

  const SteinbergData d = steinberg_data(discrete_groupoid(2), Q);
  CHECK(d.crossed.algebra.dim == 2);
  CHECK(d.algebra.dim == 2);
  CHECK(psi_map(d).ok());
}

TEST_CASE("psi is an isomorphism of L(X)-bimodules on every small groupoid") {
  for (const FieldSpec f : {Q, FieldSpec::prime(2), FieldSpec::prime(3)})
    for (const auto& [name, g] : fixtures::small_groupoids()) {
      CAPTURE(name);
      CAPTURE(f.to_string());
      const PsiReport r = psi_map(steinberg_data(g, f));
      CHECK(r.well_defined);
      CHECK(r.indicators);
      CHECK(r.bijective);
      CHECK(r.multiplicative);
      CHECK(r.bimodule_map);
    }
}

TEST_CASE("bisections act on a bimodule through indicators") {
  const FiniteGroupoid g = pair_groupoid(2);
  const SteinbergData d = steinberg_data(g, Q);
  const PsiReport psi = psi_map(d);
  const Bimodule m = regular(g);
  const monhom::KSModule direct = bisection_module(m, d);
  const monhom::KSModule routed = crossprod::module_as_ks(transport(m, d, psi.psi), d.crossed);
  CHECK(direct.act == routed.act);
}

TEST_CASE("steinberg homology examples") {
  const auto pair = verify_steinberg_homology(pair_groupoid(2), regular(pair_groupoid(2)), 2);
  CHECK(pair.lhs == Betti{1, 0, 0});
  CHECK(pair.rhs == Betti{1, 0, 0});
  CHECK(pair.coefficient_dim == 2);
  CHECK(pair.pass());

  const auto disc = verify_steinberg_homology(discrete_groupoid(2), regular(discrete_groupoid(2)), 2);
  CHECK(disc.lhs == Betti{2, 0, 0});
  CHECK(disc.rhs == Betti{2, 0, 0});

  // HH_*(QG, QG) for abelian G is |G| copies of H_*(G; Q)
  const auto z2 = std::make_shared<const invmon::InverseMonoid>(invmon::cyclic_group(2));
  const FiniteGroupoid gz = group_as_groupoid(*z2);
  Betti expected = oracle::group_homology(monhom::trivial_character(z2, Q), 2);
  for (auto& b : expected) b *= 2;
  CHECK(expected == Betti{2, 0, 0});
  const auto grp = verify_steinberg_homology(gz, regular(gz), 2);
  CHECK(grp.lhs == expected);
  CHECK(grp.rhs == expected);
}

TEST_CASE("steinberg cohomology examples") {
  const auto pair = verify_steinberg_cohomology(pair_groupoid(2), regular(pair_groupoid(2)), 2);
  CHECK(pair.lhs == Betti{1, 0, 0});
  CHECK(pair.rhs == Betti{1, 0, 0});
  CHECK(pair.coefficient_dim == 2);
  CHECK(pair.lx_cohomology[1] == 0);
  CHECK(pair.lx_cohomology[2] == 0);
  CHECK(pair.pass());

  const auto disc = verify_steinberg_cohomology(discrete_groupoid(2), regular(discrete_groupoid(2)), 2);
  CHECK(disc.lhs == Betti{2, 0, 0});
  CHECK(disc.rhs == Betti{2, 0, 0});

  const auto one = verify_steinberg_cohomology(discrete_groupoid(1), regular(discrete_groupoid(1)), 2);
  CHECK(one.lhs == Betti{1, 0, 0});
  CHECK(one.rhs == Betti{1, 0, 0});
}

TEST_CASE("steinberg verifiers reject foreign bimodules") {
  CHECK_THROWS_AS(verify_steinberg_homology(pair_groupoid(2), regular(discrete_groupoid(2)), 1), InputError);
}

TEST_CASE("both steinberg verifiers pass on every small groupoid") {
  for (const FieldSpec f : {Q, FieldSpec::prime(2)})
    for (const auto& [name, g] : fixtures::small_groupoids()) {
      CAPTURE(name);
      CAPTURE(f.to_string());
      const Bimodule m = regular(g, f);
      const auto h = verify_steinberg_homology(g, m, 2);
      CHECK(h.transport_agrees);
      CHECK(h.lhs == h.rhs);
      const auto c = verify_steinberg_cohomology(g, m, 2);
      CHECK(c.transport_agrees);
      CHECK(c.lx_vanishes());
      CHECK(c.lhs == c.rhs);
    }
}
