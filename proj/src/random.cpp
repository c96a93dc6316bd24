#include "glab/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "glab/error.hpp"

namespace glab {

namespace {

std::vector<std::string> labels(char const* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

template <class T>
void shuffle(Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

FiniteGroup random_group(Rng& rng, std::size_t max_order) {
  if (max_order == 0) throw PreconditionError("random_group: no group of order 0");
  struct Candidate {
    char kind;
    std::size_t arg;
  };
  std::vector<Candidate> c;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_order, 8); ++n) c.push_back({'c', n});
  for (std::size_t k = 2; 2 * k <= std::min<std::size_t>(max_order, 12); ++k) c.push_back({'d', k});
  if (max_order >= 6) c.push_back({'s', 3});
  if (max_order >= 24) c.push_back({'s', 4});
  auto const pick = c[rng.below(c.size())];
  switch (pick.kind) {
    case 'c':
      return FiniteGroup::cyclic(pick.arg);
    case 'd':
      return FiniteGroup::dihedral(pick.arg);
    default:
      return FiniteGroup::symmetric(pick.arg);
  }
}

GroupActionSpec random_action(Rng& rng, FiniteGroup const& g, std::size_t n) {
  GroupActionSpec spec{g, labels("x", n), std::vector<std::vector<std::size_t>>(g.order(), std::vector<std::size_t>(n))};
  std::size_t next = 0;
  while (next < n) {
    std::vector<std::size_t> gens;
    std::size_t const k = rng.below(3);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(rng.below(g.order()));
    auto h = g.generated_subgroup(gens);
    if (g.order() / h.size() > n - next) {
      h.resize(g.order());
      std::iota(h.begin(), h.end(), std::size_t{0});
    }
    // Left cosets aH, numbered in order of first appearance.
    std::map<std::vector<std::size_t>, std::size_t> coset_id;
    std::vector<std::size_t> coset_of(g.order());
    for (std::size_t a = 0; a < g.order(); ++a) {
      std::vector<std::size_t> c;
      for (auto x : h) c.push_back(g.multiply(a, x));
      std::sort(c.begin(), c.end());
      auto [it, fresh] = coset_id.emplace(c, next + coset_id.size());
      coset_of[a] = it->second;
    }
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t a = 0; a < g.order(); ++a) spec.action[x][coset_of[a]] = coset_of[g.multiply(x, a)];
    next += coset_id.size();
  }
  return spec;
}

PartialActionSpec random_partial_action(Rng& rng, FiniteGroup const& g, std::size_t n) {
  std::size_t const m = n + rng.below(n / 2 + 2);
  auto const global = random_action(rng, g, m);
  std::vector<std::size_t> pts(m);
  std::iota(pts.begin(), pts.end(), std::size_t{0});
  shuffle(rng, pts);
  pts.resize(n);
  std::sort(pts.begin(), pts.end());
  std::vector<std::size_t> local(m, npos);
  for (std::size_t i = 0; i < n; ++i) local[pts[i]] = i;
  PartialActionSpec spec{g, labels("x", n), std::vector<std::vector<std::size_t>>(g.order(), std::vector<std::size_t>(n, npos))};
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < n; ++i) spec.maps[x][i] = local[global.action[x][pts[i]]];
  return spec;
}

DirectedGraph random_graph(Rng& rng, std::size_t n, std::size_t loops) {
  DirectedGraph g{labels("v", n), {}};
  if (n == 0) return g;
  double const p = n > 1 ? std::min(1.0, 1.5 / static_cast<double>(n - 1)) : 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && rng.chance(p)) g.edges.emplace_back(a, b);
  for (std::size_t i = 0; i < loops; ++i) {
    auto const v = rng.below(n);
    g.edges.emplace_back(v, v);
  }
  auto const deg = out_degrees(g);
  for (std::size_t v = 0; v < n; ++v)
    if (deg[v] == 0) g.edges.emplace_back(v, rng.below(n));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

FiniteDynSystem random_dynsys(Rng& rng, std::size_t n) {
  FiniteDynSystem s{labels("p", n), std::vector<std::size_t>(n)};
  for (auto& t : s.map) t = rng.below(n);
  return s;
}

Instance random_instance(std::string const& type, std::size_t size, std::uint64_t seed, RandomOptions const& opts) {
  Rng rng(seed);
  auto group_bound = [&](std::size_t per) {
    std::size_t const bound = std::min(opts.max_group_order, per == 0 ? opts.max_group_order : opts.max_elements / per);
    if (bound == 0)
      throw PreconditionError("random: size " + std::to_string(size) + " cannot fit within " +
                              std::to_string(opts.max_elements) + " elements");
    return bound;
  };
  if (type == "action") {
    auto const g = random_group(rng, group_bound(size));
    return {type, GroupoidSpec{random_action(rng, g, size)}};
  }
  if (type == "partial-action") {
    auto const g = random_group(rng, group_bound(size));
    return {type, GroupoidSpec{random_partial_action(rng, g, size)}};
  }
  if (type == "group-bundle") {
    GroupBundleSpec s{labels("u", size), {}};
    std::size_t const bound = group_bound(size);
    for (std::size_t i = 0; i < size; ++i) s.groups.push_back(random_group(rng, bound));
    return {type, GroupoidSpec{s}};
  }
  if (type == "pair") {
    if (size * size > opts.max_elements)
      throw PreconditionError("random: pair groupoid on " + std::to_string(size) + " points exceeds " +
                              std::to_string(opts.max_elements) + " elements");
    return {type, GroupoidSpec{PairSpec{labels("x", size)}}};
  }
  if (type == "graph") return {type, random_graph(rng, size, opts.loops)};
  if (type == "dynsys") return {type, random_dynsys(rng, size)};
  throw PreconditionError("random: unknown type '" + type + "'");
}

}  // namespace glab
