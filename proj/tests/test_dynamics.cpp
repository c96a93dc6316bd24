#include <algorithm>
#include <set>

#include "doctest.h"
#include "glab/dynamics.hpp"
#include "glab/error.hpp"
#include "glab/random.hpp"

using namespace glab;

namespace {

PointSet bits(std::size_t n, std::vector<std::size_t> const& on) {
  PointSet s(n);
  for (auto i : on) s.set(i);
  return s;
}

DirectedGraph graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  DirectedGraph g;
  for (std::size_t v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
  g.edges = std::move(edges);
  return g;
}

}  // namespace

TEST_CASE("periodic loci examples") {
  auto const cyc = make_dynsys({1, 2, 0});
  CHECK(periodic_locus(cyc, 1).none());
  CHECK(periodic_locus(cyc, 3).all());
  CHECK(script_p(cyc).all());
  auto const id = make_dynsys({0, 1, 2});
  CHECK(periodic_locus(id, 1).all());
  auto const into = make_dynsys({1, 1});
  CHECK(script_p(into) == bits(2, {1}));
  CHECK_THROWS_AS(periodic_locus(cyc, 0), PreconditionError);
}

TEST_CASE("non-effective locus examples") {
  auto const cyc = noneffective_locus(make_dynsys({1, 2, 0}));
  CHECK(cyc.orbit_meets_p.all());
  CHECK(cyc.eventually_periodic.all());
  CHECK(cyc.agree);
  auto const into = noneffective_locus(make_dynsys({1, 1}));
  CHECK(into.orbit_meets_p.all());
  CHECK(into.agree);
  auto const empty = noneffective_locus(make_dynsys({}));
  CHECK(empty.orbit_meets_p.size() == 0);
  CHECK(empty.agree);
}

TEST_CASE("invariant sets examples") {
  CHECK(dr_invariant_sets(make_dynsys({1, 2, 0})).size() == 2);
  CHECK(dr_invariant_sets(make_dynsys({0, 1})).size() == 4);
  auto const into = dr_invariant_sets(make_dynsys({1, 1}));
  CHECK(into == std::vector<PointSet>{bits(2, {}), bits(2, {0, 1})});
}

TEST_CASE("dynsys validation") {
  CHECK_THROWS_AS(check(FiniteDynSystem{{"a"}, {1}}), ValidationError);
  CHECK_THROWS_AS(check(FiniteDynSystem{{"a", "b"}, {0}}), ValidationError);
}

TEST_CASE("property: periodic loci and invariant sets") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Rng rng(seed);
    auto const s = random_dynsys(rng, 1 + rng.below(30));
    std::size_t const n = s.size();
    PointSet all_p(n);
    for (std::size_t p = 1; p <= n; ++p) {
      auto const fp = periodic_locus(s, p);
      all_p |= fp;
      for (std::size_t k = 2; k * p <= 2 * n; ++k) CHECK(fp.is_subset_of(periodic_locus(s, k * p)));
    }
    CHECK(all_p == script_p(s));
    CHECK(periodic_locus(s, 2 * n + 1).is_subset_of(script_p(s)));
    auto const loc = noneffective_locus(s);
    CHECK(loc.agree);
    CHECK(loc.orbit_meets_p == loc.eventually_periodic);
    CHECK(loc.orbit_meets_p.all());

    auto const comps = dr_components(s);
    if (comps.size() > 8) continue;
    auto const sets = dr_invariant_sets(s);
    CHECK(sets.size() == (std::size_t{1} << comps.size()));
    std::set<PointSet> const members(sets.begin(), sets.end());
    for (auto const& u : sets) {
      for (std::size_t x = 0; x < n; ++x) CHECK(u.test(x) == u.test(s.map[x]));
      for (auto const& v : sets) {
        CHECK(members.count(u & v) == 1);
        CHECK(members.count(u | v) == 1);
      }
    }
  }
}

TEST_CASE("cycles and condition L examples") {
  auto const loop = graph(1, {{0, 0}});
  CHECK(graph_cycles(loop).size() == 1);
  CHECK_FALSE(cycle_has_exit(loop, graph_cycles(loop)[0]));
  CHECK_FALSE(condition_l(loop));

  auto const two = graph(1, {{0, 0}, {0, 0}});
  CHECK(graph_cycles(two).size() == 2);
  for (auto const& c : graph_cycles(two)) CHECK(cycle_has_exit(two, c));
  CHECK(condition_l(two));

  auto const path = graph(3, {{0, 1}, {1, 2}});
  CHECK(graph_cycles(path).empty());
  CHECK(condition_l(path));

  auto const tri = graph(3, {{0, 1}, {1, 2}, {2, 0}});
  REQUIRE(graph_cycles(tri).size() == 1);
  CHECK(cycle_vertices(tri, graph_cycles(tri)[0]) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("lattice and obstruction examples") {
  auto const loop = graph(1, {{0, 0}});
  CHECK(hereditary_saturated_lattice(loop).size() == 2);
  CHECK(obstruction_vertex_set(loop) == bits(1, {0}));
  auto const two = graph(1, {{0, 0}, {0, 0}});
  CHECK(hereditary_saturated_lattice(two).size() == 2);
  CHECK(obstruction_vertex_set(two).none());
  auto const uv = graph(2, {{0, 1}, {1, 0}, {1, 1}});
  CHECK(condition_l(uv));
  CHECK(obstruction_vertex_set(uv).none());
  CHECK(hereditary_saturated_lattice(uv) == std::vector<VertexSet>{bits(2, {}), bits(2, {0, 1})});
}

TEST_CASE("sinks are rejected") {
  auto const path = graph(2, {{0, 1}});
  try {
    require_no_sinks(path);
    FAIL("expected UnsupportedInput");
  } catch (UnsupportedInput const& e) {
    CHECK(std::string(e.what()).find("'v1'") != std::string::npos);
  }
  CHECK_THROWS_AS(hereditary_saturated_lattice(path), UnsupportedInput);
  CHECK_THROWS_AS(check(graph(1, {{0, 3}})), ValidationError);
}

TEST_CASE("property: graph layer on random sink-free graphs") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    auto const g = random_graph(rng, 1 + rng.below(10), rng.below(3));
    auto const outs = out_degrees(g);
    CHECK(std::none_of(outs.begin(), outs.end(), [](std::size_t d) { return d == 0; }));
    auto const lat = hereditary_saturated_lattice(g);
    CHECK(obstruction_vertex_set(g).none() == condition_l(g));

    // Exit-less cycle vertices found directly from the cycle list.
    VertexSet exitless(g.vertex_count());
    for (auto const& c : graph_cycles(g))
      if (!cycle_has_exit(g, c))
        for (auto v : cycle_vertices(g, c)) exitless.set(v);
    CHECK(exitless == exitless_cycle_vertices(g));
    auto const ob = obstruction_vertex_set(g);
    CHECK(std::binary_search(lat.begin(), lat.end(), ob));
    CHECK(exitless.is_subset_of(ob));

    std::size_t const n = g.vertex_count();
    CHECK(lat.front().none());
    CHECK(lat.back() == VertexSet(n).set());
    for (auto const& h : lat) {
      CHECK(is_hereditary(g, h));
      CHECK(is_saturated(g, h));
      CHECK(saturated_hereditary_closure(g, h) == h);
    }

    // Adding an edge never produces new saturated hereditary sets that fail
    // the definition; the lattice is recomputed, not assumed.
    auto bigger = g;
    bigger.edges.emplace_back(rng.below(n), rng.below(n));
    for (auto const& h : hereditary_saturated_lattice(bigger)) {
      CHECK(is_hereditary(bigger, h));
      CHECK(is_saturated(bigger, h));
    }
  }
}
