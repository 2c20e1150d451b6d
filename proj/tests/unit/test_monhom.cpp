#include "doctest.h"
#include "oracles/group_bar.hpp"
#include "semihom/complexes.hpp"
#include "support/catalog.hpp"

using namespace semihom;
using namespace semihom::monhom;
using Betti = std::vector<std::size_t>;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

Elt named(const InverseMonoid& m, const std::string& n) {
  for (Elt a = 0; a < m.size(); ++a)
    if (m.name(a) == n) return a;
  FAIL("missing element " << n);
  return 0;
}

}  // namespace

TEST_CASE("trivial module KE(S)") {
  const auto z3 = fixtures::share(invmon::cyclic_group(3));
  const KSModule g = trivial_module_ke(z3, Q);
  CHECK(g.dim == 1);
  for (const auto& a : g.act) CHECK(a.is_identity());

  const auto i2 = fixtures::share(invmon::symmetric_inverse_monoid(2));
  const KSModule v = trivial_module_ke(i2, Q);
  CHECK(v.dim == 4);
  const std::size_t p1 = i2->idempotent_index(named(*i2, "[1->1]"));
  const std::size_t p2 = i2->idempotent_index(named(*i2, "[2->2]"));
  const Matrix& swap = v.act[named(*i2, "[1->2,2->1]")];
  CHECK(swap(p2, p1) == Scalar(1));
  CHECK(swap(p1, p2) == Scalar(1));
  CHECK(swap(p1, p1).is_zero());

  const auto c2 = fixtures::share(invmon::chain_semilattice(2));
  const KSModule w = trivial_module_ke(c2, Q);
  CHECK(w.dim == 2);
  CHECK(w.act[1] == Matrix::from_ints(Q, 2, 2, {0, 0, 1, 1}));
  CHECK_NOTHROW(trivial_module_ke(i2, Q, Side::Right).validate());
  CHECK_NOTHROW(regular_module(i2, Q).validate());
}

TEST_CASE("module validation errors") {
  const auto c2 = fixtures::share(invmon::chain_semilattice(2));
  KSModule bad = trivial_character(c2, Q);
  bad.act[1] = Matrix::from_ints(Q, 1, 1, {2});
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("not a left module"), InputError);
  KSModule short_module = trivial_character(c2, Q);
  short_module.act.pop_back();
  CHECK_THROWS_WITH_AS(short_module.validate(), doctest::Contains("module/monoid mismatch"), InputError);
  CHECK_THROWS_AS(homology(trivial_module_ke(c2, Q, Side::Right), 1), InputError);
}

TEST_CASE("homology examples") {
  const auto one = fixtures::share(invmon::cyclic_group(1));
  const ChainComplexData c = homology_complex(trivial_character(one, Q), 3);
  CHECK(c.space_dims == Betti{1, 1, 1, 1});
  CHECK(homology(trivial_character(one, Q), 2) == Betti{1, 0, 0});

  const auto c2 = fixtures::share(invmon::chain_semilattice(2));
  CHECK(homology(trivial_module_ke(c2, Q), 2) == Betti{2, 0, 0});
  CHECK(homology_complex(trivial_module_ke(c2, Q), 4).composites_vanish());

  const auto z2 = fixtures::share(invmon::cyclic_group(2));
  const ChainComplexData z = homology_complex(trivial_module_ke(z2, F2), 4);
  CHECK(z.space_dims == Betti{1, 2, 4, 8, 16});
  CHECK(homology(trivial_module_ke(z2, F2), 3) == Betti{1, 1, 1, 1});
  CHECK(homology(trivial_module_ke(z2, Q), 3) == Betti{1, 0, 0, 0});
}

TEST_CASE("cohomology examples") {
  const auto one = fixtures::share(invmon::cyclic_group(1));
  const ChainComplexData c = cohomology_complex(trivial_module_ke(one, Q), 3);
  CHECK(c.maps[0].is_zero());
  CHECK(c.space_dims == Betti{1, 1, 1, 1});
  CHECK(cohomology(trivial_character(one, Q), 2) == Betti{1, 0, 0});

  const auto i2 = fixtures::share(invmon::symmetric_inverse_monoid(2));
  CHECK(cohomology_complex(trivial_module_ke(i2, Q), 3).composites_vanish());

  const auto z2 = fixtures::share(invmon::cyclic_group(2));
  const ChainComplexData z = cohomology_complex(trivial_module_ke(z2, Q), 2);
  CHECK(z.maps[0].is_zero());
  // Z^1 is the space of homomorphisms Z/2 -> Q, which is zero, so the
  // coboundary out of the 2-dimensional C^1 is injective.
  CHECK(z.maps[1].rank() == 2);
  CHECK(cohomology_complex(trivial_module_ke(z2, F2), 2).maps[1].rank() == 1);
  CHECK(cohomology(trivial_module_ke(z2, Q), 2) == Betti{1, 0, 0});
  CHECK(cohomology(trivial_module_ke(z2, F2), 3) == Betti{1, 1, 1, 1});
}

TEST_CASE("block layout") {
  const auto c2 = fixtures::share(invmon::chain_semilattice(2));
  // d(e_1)V for V = KE(S) is the line through e_1, so the tuples holding e_1 are thin.
  const ChainComplexData c = homology_complex(trivial_module_ke(c2, Q), 2);
  CHECK(c.space_dims == Betti{2, 3, 5});
  CHECK(c.block_offsets[2] == std::vector<std::size_t>{0, 2, 3, 4, 5});
  CHECK(c.tuple(2, 2) == std::vector<Elt>{1, 0});
}

TEST_CASE("size cap") {
  const auto z3 = fixtures::share(invmon::cyclic_group(3));
  CHECK_THROWS_WITH_AS(homology(regular_module(z3, Q), 3, 100), "size cap exceeded", CapError);
  CHECK_THROWS_WITH_AS(build_resolution(z3, Q, 3, 50), "size cap exceeded", CapError);
}

TEST_CASE("resolution examples") {
  const auto one = fixtures::share(invmon::cyclic_group(1));
  const ResolutionComplex t = build_resolution(one, Q, 3);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(t.dim(n) == 1);
  CHECK(t.homotopy_identity_holds());
  CHECK(t.composites_vanish());

  const auto c2 = fixtures::share(invmon::chain_semilattice(2));
  const ResolutionComplex r = build_resolution(c2, Q, 2);
  CHECK(r.composites_vanish());
  CHECK(r.homotopy_identity_holds());

  const auto i1 = fixtures::share(invmon::symmetric_inverse_monoid(1));
  const ResolutionComplex p = build_resolution(i1, Q, 2);
  CHECK(p.dim(1) == 3);
  CHECK(p.homotopy_identity_holds());
}

TEST_CASE("property: group specialization matches the bar-complex oracle") {
  for (FieldSpec f : {Q, F2, FieldSpec::prime(3)}) {
    for (const auto& nm : fixtures::small_monoids()) {
      if (!nm.monoid->is_group() || nm.monoid->size() > 4) continue;
      for (const auto& mod : fixtures::test_modules(nm.monoid, f)) {
        CAPTURE(nm.name);
        CAPTURE(mod.name);
        CHECK(homology(mod.module, 2) == oracle::group_homology(mod.module, 2));
        CHECK(cohomology(mod.module, 2) == oracle::group_cohomology(mod.module, 2));
      }
    }
  }
}

TEST_CASE("property: complexes square to zero, semilattices are acyclic, shapes are field independent") {
  for (const auto& nm : fixtures::small_monoids()) {
    if (nm.monoid->size() > 4) continue;
    for (const auto& mod : fixtures::test_modules(nm.monoid, Q)) {
      CAPTURE(nm.name);
      CAPTURE(mod.name);
      const auto h = homology_complex(mod.module, 3);
      const auto c = cohomology_complex(mod.module, 3);
      CHECK(h.composites_vanish());
      CHECK(c.composites_vanish());
      const auto in_f2 = fixtures::test_modules(nm.monoid, F2);
      for (const auto& other : in_f2)
        if (other.name == mod.name) CHECK(homology_complex(other.module, 3).space_dims == h.space_dims);
      if (nm.monoid->idempotents().size() == nm.monoid->size()) {
        const Betti hb = betti_numbers(h);
        CHECK(hb == Betti{mod.module.dim, 0, 0});
      }
    }
  }
}

TEST_CASE("property: resolution homotopy on every monoid of order at most 4") {
  for (const auto& nm : fixtures::small_monoids()) {
    if (nm.monoid->size() > 4) continue;
    CAPTURE(nm.name);
    const ResolutionComplex r = build_resolution(nm.monoid, FieldSpec::prime(3), 2);
    CHECK(r.composites_vanish());
    CHECK(r.homotopy_identity_holds());
  }
}
