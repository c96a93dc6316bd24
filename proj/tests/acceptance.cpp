// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "glab/construct.hpp"
#include "glab/dynamics.hpp"
#include "glab/ideal_structure.hpp"
#include "glab/random.hpp"
#include "instances.hpp"
#include "oracle.hpp"
#include "sweep.hpp"

using namespace glab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, std::string const& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

int report(int id, char const* name, Line const& l) {
  std::printf("[%s] criterion %d  %-34s %s\n", l.pass ? "PASS" : "FAIL", id, name, l.detail.c_str());
  for (auto const& f : l.failures) std::printf("         %s\n", f.c_str());
  return l.pass ? 0 : 1;
}

template <class F>
void parallel_for(std::size_t n, F const& f) {
  std::atomic<std::size_t> next{0};
  unsigned const workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  for (auto& t : pool) t.join();
}

struct Inventory {
  std::vector<std::size_t> dims;
  std::size_t ideals = 0, dynamical = 0, pnd = 0, triples = 0;
};

Inventory inventory(GroupoidPtr g) {
  IdealStructure s(std::move(g));
  auto const& a = s.algebra();
  Inventory inv;
  inv.dims = a.decomposition().dimensions();
  for (auto const& i : a.all_ideals()) {
    ++inv.ideals;
    inv.dynamical += a.is_dynamical(i);
    inv.pnd += a.is_purely_non_dynamical(i);
  }
  inv.triples = s.enumerate_triples().size();
  return inv;
}

std::string dims_text(std::vector<std::size_t> const& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

Line criterion_inventory() {
  Line l;
  std::size_t checked = 0;
  double worst = 0.0;
  auto check = [&](std::string const& name, GroupoidPtr g, oracle::Counts const& want,
                   std::vector<std::size_t> const& dims) {
    auto const t0 = Clock::now();
    auto const inv = inventory(std::move(g));
    double const dt = seconds_since(t0);
    worst = std::max(worst, dt);
    ++checked;
    l.require(inv.dims.size() == want.blocks, name + ": blocks " + std::to_string(inv.dims.size()));
    if (!dims.empty()) l.require(inv.dims == dims, name + ": dimensions " + dims_text(inv.dims));
    l.require(inv.ideals == want.ideals, name + ": ideals " + std::to_string(inv.ideals));
    l.require(inv.dynamical == want.dynamical, name + ": dynamical " + std::to_string(inv.dynamical));
    l.require(inv.pnd == want.purely_non_dynamical, name + ": purely non-dynamical " + std::to_string(inv.pnd));
    l.require(inv.triples == want.triples, name + ": triples " + std::to_string(inv.triples));
    l.require(dt < 1.0, name + ": took " + std::to_string(dt) + " s");
  };
  auto const z2 = oracle::cyclic_table(2);
  auto const bundle = oracle::counts(oracle::bundle_orbits({z2}));
  check("Z/2 bundle", inst::z2_bundle(), bundle, {1, 1});
  auto const spec = inst::swap_and_fix_spec();
  auto const sf = oracle::counts(oracle::action_orbits(z2, spec.action));
  check("swap-and-fix", inst::swap_and_fix(), sf, {2, 1, 1});
  // The oracle must reproduce the stated inventory on its own.
  l.require(bundle.blocks == 2 && bundle.ideals == 4 && bundle.dynamical == 2 && bundle.purely_non_dynamical == 2 &&
                bundle.triples == 4,
            "oracle disagrees with the Z/2 bundle inventory");
  l.require(sf.blocks == 3 && sf.ideals == 8 && sf.dynamical == 4 && sf.purely_non_dynamical == 2 && sf.triples == 8,
            "oracle disagrees with the swap-and-fix inventory");
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const want = oracle::counts(oracle::pair_orbits(n));
    l.require(want.ideals == 2 && want.purely_non_dynamical == 0, "oracle disagrees on the pair groupoid");
    check("pair(" + std::to_string(n) + ")", inst::pair(n), want, {n});
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu instances, slowest %.3f s", checked, worst);
  l.detail = buf;
  return l;
}

struct SweepResult {
  bool sandwich = true, bijection = true, obstruction = true, lattice = true, numeric = true, oracle = true;
  std::string witness;
  double residual = 0.0, rounding = 0.0;
  std::size_t blocks = 0;
};

oracle::Counts oracle_counts(sweep::Item const& item, bool& applicable) {
  applicable = true;
  auto const& spec = item.instance.groupoid_spec().value;
  if (auto const* a = std::get_if<GroupActionSpec>(&spec))
    return oracle::counts(oracle::action_orbits(a->group.table(), a->action));
  if (auto const* b = std::get_if<GroupBundleSpec>(&spec)) {
    std::vector<oracle::Table> groups;
    for (auto const& g : b->groups) groups.push_back(g.table());
    return oracle::counts(oracle::bundle_orbits(groups));
  }
  if (auto const* p = std::get_if<PairSpec>(&spec)) return oracle::counts(oracle::pair_orbits(p->points.size()));
  applicable = false;
  return {};
}

SweepResult run_sweep_item(sweep::Item const& item) {
  SweepResult r;
  IdealStructure s(item.groupoid);
  auto const& a = s.algebra();
  auto const& dec = a.decomposition();
  r.blocks = a.block_count();
  std::string const tag = "seed " + std::to_string(item.seed) + " (" + item.type + ", |G|=" +
                          std::to_string(item.groupoid->size()) + "): ";
  auto note = [&](TheoremVerdict const& v) {
    if (!v.pass && r.witness.empty()) r.witness = tag + v.theorem + ": " + (v.witnesses.empty() ? v.detail : v.witnesses[0]);
    return v.pass;
  };
  r.sandwich = note(s.verify_sandwich());
  r.bijection = note(s.verify_bijection());
  r.obstruction = note(s.verify_obstruction());
  r.lattice = note(s.verify_lattice_iso());

  std::size_t sq = 0;
  for (auto const& b : dec.blocks) {
    sq += b.dimension * b.dimension;
    r.rounding = std::max(r.rounding, b.dimension_rounding_error);
  }
  r.residual = dec.max_eig_residual;
  r.numeric = sq == item.groupoid->size() && r.residual <= 1e-10 && r.rounding < 1e-6;
  if (!r.numeric && r.witness.empty()) r.witness = tag + "numerical kernel";

  bool applicable = false;
  auto const want = oracle_counts(item, applicable);
  if (applicable) {
    r.oracle = want.blocks == a.block_count() && want.elements == item.groupoid->size() &&
               want.triples == s.enumerate_triples().size();
    if (!r.oracle && r.witness.empty()) r.witness = tag + "oracle count mismatch";
  }
  return r;
}

Line criterion_partial_actions() {
  Line l;
  std::size_t instances = 0, points = 0;
  for (std::uint64_t seed = 1; instances < 120; ++seed) {
    Rng rng(seed);
    auto const g = random_group(rng, 8);
    std::size_t const n = 1 + rng.below(10);
    auto const spec = random_partial_action(rng, g, n);
    auto const gt = partial_action_groupoid(spec);
    ++instances;
    for (std::size_t x = 0; x < n; ++x) {
      ++points;
      std::size_t const k = gt.unit_position(gt.index_of("(" + spec.points[x] + "," + g.name(g.identity()) + "," + spec.points[x] + ")"));
      bool const tf = topological_freeness_at(spec, x);
      bool const stf = strong_topological_freeness_at(spec, x);
      l.require(tf == is_effective_at(gt, k), "seed " + std::to_string(seed) + " point " + spec.points[x] +
                                                  ": topological freeness vs effectiveness");
      l.require(stf == is_jointly_effective_at(gt, k), "seed " + std::to_string(seed) + " point " + spec.points[x] +
                                                            ": strong freeness vs joint effectiveness");
    }
  }
  l.detail = std::to_string(instances) + " partial actions, " + std::to_string(points) + " points";
  return l;
}

Line criterion_dynsys() {
  Line l;
  std::size_t points = 0;
  std::size_t const count = 150;
  for (std::uint64_t seed = 1; seed <= count; ++seed) {
    Rng rng(seed);
    auto const s = random_dynsys(rng, 1 + rng.below(50));
    auto const loc = noneffective_locus(s);
    points += s.size();
    for (std::size_t x = 0; x < s.size(); ++x)
      l.require(loc.orbit_meets_p.test(x) == loc.eventually_periodic.test(x),
                "seed " + std::to_string(seed) + " point " + std::to_string(x));
    l.require(loc.agree, "seed " + std::to_string(seed) + ": agreement flag");
  }
  l.detail = std::to_string(count) + " systems, " + std::to_string(points) + " points";
  return l;
}

// Saturated hereditary sets by brute force over all vertex subsets.
std::vector<VertexSet> brute_lattice(DirectedGraph const& g) {
  std::vector<VertexSet> out;
  std::size_t const n = g.vertex_count();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    VertexSet h(n, m);
    if (is_hereditary(g, h) && is_saturated(g, h)) out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Line criterion_graphs() {
  Line l;
  DirectedGraph loop{{"v"}, {{0, 0}}};
  DirectedGraph two{{"v"}, {{0, 0}, {0, 0}}};
  l.require(obstruction_vertex_set(loop) == VertexSet(1, 1), "single loop: obstruction is not {v}");
  l.require(hereditary_saturated_lattice(loop).size() == 2, "single loop: lattice size is not 2");
  l.require(obstruction_vertex_set(two).none(), "two loops: obstruction is not empty");
  l.require(!condition_l(loop) && condition_l(two), "condition L on the loop graphs");

  std::size_t const count = 150;
  std::size_t with_l = 0;
  for (std::uint64_t seed = 1; seed <= count; ++seed) {
    Rng rng(seed);
    std::size_t const n = 1 + rng.below(12);
    auto const g = random_graph(rng, n, rng.below(3));
    std::string const tag = "seed " + std::to_string(seed) + ": ";
    bool const cond = condition_l(g);
    with_l += cond;
    l.require(obstruction_vertex_set(g).none() == cond, tag + "obstruction empty iff condition L");
    auto const lat = hereditary_saturated_lattice(g);
    l.require(lat == brute_lattice(g), tag + "lattice differs from brute force");
    for (auto const& a : lat) {
      for (auto const& b : lat) {
        l.require(std::binary_search(lat.begin(), lat.end(), a & b), tag + "not closed under meet");
        auto const join = saturated_hereditary_closure(g, a | b);
        l.require(std::binary_search(lat.begin(), lat.end(), join), tag + "not closed under join");
        l.require(a.is_subset_of(join) && b.is_subset_of(join), tag + "join is not an upper bound");
      }
    }
  }
  l.detail = std::to_string(count) + " random graphs (" + std::to_string(with_l) + " with condition L)";
  return l;
}

}  // namespace

int main() {
  int failures = 0;
  auto const t_all = Clock::now();

  failures += report(1, "worked-instance inventory", criterion_inventory());

  std::size_t const n = 220;
  auto const t0 = Clock::now();
  auto const items = sweep::instances(n);
  std::vector<SweepResult> results(items.size());
  parallel_for(items.size(), [&](std::size_t i) { results[i] = run_sweep_item(items[i]); });
  double const sweep_time = seconds_since(t0);

  auto summarize = [&](std::function<bool(SweepResult const&)> ok) {
    Line l;
    for (std::size_t i = 0; i < results.size(); ++i) l.require(ok(results[i]), results[i].witness);
    return l;
  };
  std::size_t max_blocks = 0;
  std::size_t max_elements = 0;
  double residual = 0.0, rounding = 0.0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    max_blocks = std::max(max_blocks, results[i].blocks);
    max_elements = std::max(max_elements, items[i].groupoid->size());
    residual = std::max(residual, results[i].residual);
    rounding = std::max(rounding, results[i].rounding);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu instances, |G| <= %zu, blocks <= %zu, %.1f s", items.size(), max_elements,
                max_blocks, sweep_time);
  std::string const sweep_detail = buf;

  auto l2 = summarize([](SweepResult const& r) { return r.sandwich; });
  l2.detail = sweep_detail;
  l2.require(sweep_time < 300.0, "sweep exceeded 5 minutes");
  failures += report(2, "sandwiching lemma sweep", l2);
  auto l3 = summarize([](SweepResult const& r) { return r.bijection && r.oracle; });
  l3.detail = "both round trips, |triples| = |ideals| = 2^blocks, oracle counts";
  failures += report(3, "triple bijection", l3);
  auto l4 = summarize([](SweepResult const& r) { return r.obstruction; });
  l4.detail = "pnd ideals inside J^ob, collapse kernel support";
  failures += report(4, "obstruction ideal", l4);
  auto l5 = summarize([](SweepResult const& r) { return r.lattice; });
  l5.detail = "meet, join, diagonal and support identities";
  failures += report(5, "dynamical ideal lattice", l5);

  failures += report(6, "freeness vs effectiveness", criterion_partial_actions());
  failures += report(7, "non-effective locus", criterion_dynsys());
  failures += report(8, "graph layer", criterion_graphs());

  auto l9 = summarize([](SweepResult const& r) { return r.numeric; });
  std::snprintf(buf, sizeof buf, "max residual/|M| %.2e, max rounding %.2e, sum n^2 = |G|", residual, rounding);
  l9.detail = buf;
  failures += report(9, "numerical kernel", l9);

  std::printf("%d of 9 criteria failed, %.1f s total\n", failures, seconds_since(t_all));
  return failures == 0 ? 0 : 1;
}
