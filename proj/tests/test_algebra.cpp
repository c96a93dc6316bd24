#include <cmath>
#include <random>

#include "doctest.h"
#include "glab/error.hpp"
#include "glab/ideals.hpp"
#include "glab/structure.hpp"
#include "instances.hpp"
#include "sweep.hpp"

using namespace glab;

namespace {

AlgebraElement random_element(GroupoidPtr const& g, std::mt19937_64& eng) {
  std::normal_distribution<double> d;
  CVector c(g->size());
  for (auto& x : c) x = {d(eng), d(eng)};
  return {g, c};
}

double distance(AlgebraElement const& a, AlgebraElement const& b) { return (a - b).coefficient_norm(); }

std::vector<GroupoidPtr> zoo() {
  std::vector<GroupoidPtr> out{inst::z2_bundle(), inst::swap_and_fix(), inst::pair(1), inst::pair(3)};
  out.push_back(inst::ptr(group_bundle({{"x", "y"}, {FiniteGroup::symmetric(3), FiniteGroup::dihedral(4)}})));
  Rng rng(1);
  out.push_back(inst::ptr(action_groupoid(random_action(rng, FiniteGroup::symmetric(3), 4))));
  return out;
}

}  // namespace

TEST_CASE("convolution examples") {
  auto const z = inst::z2_bundle();
  Index const u = z->index_of("(u,e,u)"), g = z->index_of("(u,r1,u)");
  auto const du = AlgebraElement::delta(z, u), dg = AlgebraElement::delta(z, g);
  CHECK(distance(convolve(du, dg), dg) == 0.0);
  CHECK(distance(convolve(dg, dg), du) == 0.0);

  auto const p = inst::pair(2);
  auto const e12 = AlgebraElement::delta(p, p->index_of("(1,2)"));
  auto const e21 = AlgebraElement::delta(p, p->index_of("(2,1)"));
  CHECK(distance(convolve(e12, e21), AlgebraElement::delta(p, p->index_of("(1,1)"))) == 0.0);
  CHECK(convolve(e12, e12).coefficient_norm() == 0.0);

  CHECK_THROWS_AS(convolve(du, e12), PreconditionError);
}

TEST_CASE("involution") {
  auto const p = inst::pair(2);
  AlgebraElement f(p);
  f[p->index_of("(1,2)")] = {2.0, 3.0};
  auto const s = involute(f);
  CHECK(s[p->index_of("(2,1)")] == Complex{2.0, -3.0});
  CHECK(s[p->index_of("(1,2)")] == Complex{});
}

TEST_CASE("regular representation examples") {
  auto const z = inst::z2_bundle();
  auto const m = fiber_representation(AlgebraElement::delta(z, z->index_of("(u,r1,u)")), 0);
  CHECK(m == CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));

  auto const p = inst::pair(2);
  auto const e12 = AlgebraElement::delta(p, p->index_of("(1,2)"));
  for (std::size_t k = 0; k < 2; ++k) {
    auto const fk = fiber_representation(e12, k);
    CHECK(fk.rows() == 2);
    CHECK((fk * fk).max_abs() == 0.0);
    CHECK(fk.frobenius_norm() == doctest::Approx(1.0));
  }
  auto const sf = inst::swap_and_fix();
  auto const dc = full_representation(AlgebraElement::delta(sf, sf->index_of("(c,e,c)")));
  CHECK((dc * dc - dc).max_abs() == 0.0);
  CHECK(dc.hermitian_defect() == 0.0);
  for (std::size_t i = 0; i < dc.rows(); ++i)
    for (std::size_t j = 0; j < dc.cols(); ++j)
      if (i != j) CHECK(dc(i, j) == Complex{});
}

TEST_CASE("expectation and j map") {
  auto const z = inst::z2_bundle();
  Index const u = z->index_of("(u,e,u)"), g = z->index_of("(u,r1,u)");
  CHECK(expectation(AlgebraElement::delta(z, g)).coefficient_norm() == 0.0);
  CHECK(distance(expectation(AlgebraElement::delta(z, u)), AlgebraElement::delta(z, u)) == 0.0);
  auto const h = 0.5 * (AlgebraElement::delta(z, u) + AlgebraElement::delta(z, g));
  CHECK(distance(expectation(h), 0.5 * AlgebraElement::delta(z, u)) == 0.0);
  CHECK(jmap(h) == h.coefficients());
}

TEST_CASE("property: regular representation is a faithful *-homomorphism") {
  std::mt19937_64 eng(5);
  for (auto const& g : zoo()) {
    for (int rep = 0; rep < 200; ++rep) {
      auto const f = random_element(g, eng), h = random_element(g, eng);
      auto const pf = full_representation(f), ph = full_representation(h);
      CHECK((full_representation(convolve(f, h)) - pf * ph).max_abs() <= 1e-8);
      CHECK((full_representation(involute(f)) - pf.adjoint()).max_abs() <= 1e-8);
    }
    auto const f = random_element(g, eng);
    CHECK(norm(f) > 0.0);
    CHECK(regular_trace(convolve(involute(f), f)).real() > 0.0);
  }
}

TEST_CASE("property: E is faithful") {
  std::mt19937_64 eng(9);
  for (auto const& g : zoo()) {
    for (int rep = 0; rep < 20; ++rep) {
      auto const a = random_element(g, eng);
      auto const e = expectation(convolve(involute(a), a));
      // E(a*a)(x) is the squared norm of a on the r-fiber of x.
      CHECK(e.coefficient_norm() > 1e-9);
      for (Index x = 0; x < g->size(); ++x)
        if (!g->is_unit(x)) CHECK(e[x] == Complex{});
    }
    AlgebraElement const zero(g);
    CHECK(expectation(convolve(involute(zero), zero)).is_zero(1e-9));
    CHECK(norm(zero) <= 1e-9);
  }
}

TEST_CASE("wedderburn examples") {
  auto const z = inst::z2_bundle();
  auto const dz = wedderburn(z);
  CHECK(dz.dimensions() == std::vector<std::size_t>{1, 1});
  Index const u = z->index_of("(u,e,u)"), g = z->index_of("(u,r1,u)");
  auto const plus = 0.5 * (AlgebraElement::delta(z, u) + AlgebraElement::delta(z, g));
  auto const minus = 0.5 * (AlgebraElement::delta(z, u) - AlgebraElement::delta(z, g));
  bool const order = distance(dz.blocks[0].idempotent, plus) < 1e-9;
  CHECK(distance(dz.blocks[order ? 0 : 1].idempotent, plus) < 1e-9);
  CHECK(distance(dz.blocks[order ? 1 : 0].idempotent, minus) < 1e-9);

  CHECK(wedderburn(inst::pair(2)).dimensions() == std::vector<std::size_t>{2});
  CHECK(wedderburn(inst::swap_and_fix()).dimensions() == std::vector<std::size_t>{2, 1, 1});
  CHECK(wedderburn(inst::ptr(FiniteGroupoid{})).size() == 0);
}

TEST_CASE("wedderburn is independent of the seed") {
  auto const g = zoo()[4];
  WedderburnOptions a, b;
  b.seed = 12345;
  auto const da = wedderburn(g, a), db = wedderburn(g, b);
  REQUIRE(da.size() == db.size());
  for (std::size_t i = 0; i < da.size(); ++i)
    CHECK(distance(da.blocks[i].idempotent, db.blocks[i].idempotent) < 1e-9);
}

TEST_CASE("property: block decomposition invariants") {
  auto items = sweep::instances(40, 48, 10);
  for (auto const& g : zoo()) items.push_back({0, "zoo", {}, g});
  for (auto const& item : items) {
    auto const& g = item.groupoid;
    CAPTURE(item.seed);
    auto const dec = wedderburn(g);
    std::size_t sq = 0;
    auto sum = AlgebraElement(g);
    for (std::size_t i = 0; i < dec.size(); ++i) {
      auto const& b = dec.blocks[i];
      sq += b.dimension * b.dimension;
      sum += b.idempotent;
      CHECK(b.dimension_rounding_error < 1e-6);
      CHECK(distance(involute(b.idempotent), b.idempotent) < 1e-9);
      CHECK(distance(convolve(b.idempotent, b.idempotent), b.idempotent) < 1e-9);
      for (std::size_t j = i + 1; j < dec.size(); ++j)
        CHECK(convolve(b.idempotent, dec.blocks[j].idempotent).coefficient_norm() < 1e-9);
      for (Index e = 0; e < g->size(); ++e) {
        auto const d = AlgebraElement::delta(g, e);
        CHECK(distance(convolve(b.idempotent, d), convolve(d, b.idempotent)) < 1e-9);
      }
    }
    CHECK(sq == g->size());
    CHECK(distance(sum, AlgebraElement::one(g)) < 1e-9);
    CHECK(dec.size() == central_classes(*g).size());
  }
}

TEST_CASE("property: matrix units multiply like matrix units") {
  for (auto const& g : zoo()) {
    auto const dec = wedderburn(g);
    for (auto const& b : dec.blocks) {
      std::size_t const n = b.dimension;
      REQUIRE(b.matrix_units.size() == n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          auto const& eij = b.matrix_units[i * n + j];
          CHECK(distance(involute(eij), b.matrix_units[j * n + i]) < 1e-8);
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              auto const prod = convolve(eij, b.matrix_units[k * n + l]);
              if (j == k) CHECK(distance(prod, b.matrix_units[i * n + l]) < 1e-8);
              else CHECK(prod.coefficient_norm() < 1e-8);
            }
        }
    }
  }
}
