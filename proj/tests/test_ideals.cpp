#include <random>

#include "doctest.h"
#include "glab/error.hpp"
#include "glab/ideals.hpp"
#include "glab/structure.hpp"
#include "instances.hpp"
#include "sweep.hpp"

using namespace glab;

namespace {

// The block whose idempotent has the largest weight on the given unit.
std::size_t block_at(CStarAlgebra const& a, Index unit, std::size_t dim) {
  std::size_t best = npos;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    auto const& b = a.decomposition().blocks[i];
    if (b.dimension == dim && std::abs(b.idempotent[unit]) > 1e-6) best = i;
  }
  return best;
}

ElementSubset elements_over(FiniteGroupoid const& g, UnitSubset const& u) {
  ElementSubset s(g.size());
  for (Index e = 0; e < g.size(); ++e) s[e] = u.test(g.source_pos(e)) && u.test(g.range_pos(e));
  return s;
}

}  // namespace

TEST_CASE("all ideals examples") {
  CHECK(CStarAlgebra(inst::z2_bundle()).all_ideals().size() == 4);
  CHECK(CStarAlgebra(inst::pair(3)).all_ideals().size() == 2);
  CHECK(CStarAlgebra(inst::swap_and_fix()).all_ideals().size() == 8);
  CStarAlgebra const empty(inst::ptr(FiniteGroupoid{}));
  CHECK(empty.block_count() == 0);
  CHECK(empty.all_ideals().size() == 1);
}

TEST_CASE("all ideals respects the block cap") {
  AlgebraOptions opts;
  opts.max_blocks = 1;
  CStarAlgebra const a(inst::swap_and_fix(), opts);
  CHECK_THROWS_AS(a.all_ideals(), CapExceeded);
}

TEST_CASE("diagonal part and support examples") {
  auto const z = inst::z2_bundle();
  CStarAlgebra const a(z);
  Ideal one = a.zero_ideal();
  one.blocks.set(0);
  CHECK(a.diagonal_part(one).empty());
  CHECK(a.support(one).all());
  CHECK(a.diagonal_part(a.full_ideal()).size() == 1);
  CHECK(a.support(a.full_ideal()).all());

  auto const sf = inst::swap_and_fix();
  CStarAlgebra const b(sf);
  auto const ab = inst::units(*sf, {"a", "b"});
  Ideal m2 = b.zero_ideal();
  m2.blocks.set(block_at(b, sf->index_of("(a,e,a)"), 2));
  CHECK(b.diagonal_part(m2).size() == 2);
  CHECK(b.diagonal_support(m2) == ab);
  CHECK(b.support(m2) == elements_over(*sf, ab));
  CHECK(b.source_of_support(m2) == ab);
}

TEST_CASE("dynamical ideal examples") {
  auto const sf = inst::swap_and_fix();
  CStarAlgebra const a(sf);
  auto const c = inst::units(*sf, {"c"});
  auto const ic = a.dynamical_ideal_of(c);
  CHECK(ic.blocks.count() == 2);
  for (std::size_t i = 0; i < a.block_count(); ++i)
    if (ic.blocks.test(i)) CHECK(a.decomposition().blocks[i].dimension == 1);
  CHECK(a.diagonal_support(ic) == c);
  CHECK(a.dynamical_ideal_of(sf->no_units()) == a.zero_ideal());
  CHECK(a.dynamical_ideal_of(sf->all_units()) == a.full_ideal());
  CHECK_THROWS_AS(a.dynamical_ideal_of(inst::units(*sf, {"a"})), PreconditionError);

  CStarAlgebra const z(inst::z2_bundle());
  Ideal one = z.zero_ideal();
  one.blocks.set(1);
  CHECK_FALSE(z.is_dynamical(one));
  CHECK(z.is_purely_non_dynamical(one));
  CHECK_FALSE(z.is_purely_non_dynamical(z.zero_ideal()));
}

TEST_CASE("generated ideals") {
  auto const sf = inst::swap_and_fix();
  CStarAlgebra const a(sf);
  auto const dc = AlgebraElement::delta(sf, sf->index_of("(c,e,c)"));
  CHECK(a.generated_ideal(dc) == a.dynamical_ideal_of(inst::units(*sf, {"c"})));
  CHECK(a.generated_ideal(AlgebraElement(sf)) == a.zero_ideal());
  CHECK(a.generated_ideal(AlgebraElement::one(sf)) == a.full_ideal());
}

TEST_CASE("property: ideals are block sets and the dynamical lattice is isomorphic to the invariant sets") {
  std::mt19937_64 eng(21);
  std::normal_distribution<double> d;
  for (auto const& item : sweep::instances(40, 48, 8)) {
    CAPTURE(item.seed);
    auto const& g = *item.groupoid;
    CStarAlgebra const a(item.groupoid);
    auto const ideals = a.all_ideals();
    CHECK(ideals.size() == (std::size_t{1} << a.block_count()));

    // Ideals generated by random elements are block sets containing them.
    for (int rep = 0; rep < 5; ++rep) {
      CVector c(g.size());
      for (auto& x : c) x = rep % 2 ? Complex{d(eng), d(eng)} : Complex{};
      if (rep % 2 == 0) c[eng() % g.size()] = 1.0;
      AlgebraElement const x(item.groupoid, c);
      auto const gen = a.generated_ideal(x);
      CHECK(a.contains(gen, x));
      for (std::size_t i = 0; i < a.block_count(); ++i) {
        if (!gen.blocks.test(i)) continue;
        Ideal smaller = gen;
        smaller.blocks.reset(i);
        CHECK_FALSE(a.contains(smaller, x));
      }
    }

    InvariantLattice const lat(g);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      auto const iu = a.dynamical_ideal_of(lat[i]);
      CHECK(a.is_dynamical(iu));
      CHECK(a.diagonal_support(iu) == lat[i]);
      CHECK(a.diagonal_part(iu).size() == lat[i].count());
      CHECK(a.support(iu) == elements_over(g, lat[i]));
      for (std::size_t j = 0; j < lat.size(); ++j) {
        auto const iv = a.dynamical_ideal_of(lat[j]);
        CHECK((i == j) == (iu == iv));
        CHECK(lat[i].is_subset_of(lat[j]) == iu.contained_in(iv));
        CHECK(a.dynamical_ideal_of(lat[i] & lat[j]) == (iu & iv));
        CHECK(a.dynamical_ideal_of(lat[i] | lat[j]) == (iu | iv));
      }
    }

    // Supports are closed under inversion and composition.
    for (auto const& ideal : ideals) {
      auto const s = a.support(ideal);
      for (Index e = 0; e < g.size(); ++e) {
        if (!s.test(e)) continue;
        CHECK(s.test(g.inverse(e)));
        for (Index f = 0; f < g.size(); ++f)
          if (s.test(f) && g.compose(e, f) != npos) CHECK(s.test(g.compose(e, f)));
      }
      CHECK(a.is_dynamical(ideal) == (ideal == a.dynamical_ideal_of(a.diagonal_support(ideal))));
    }
  }
}
