#include "glab/dynamics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "glab/error.hpp"

namespace glab {

void check(FiniteDynSystem const& s) {
  if (!s.points.empty() && s.points.size() != s.map.size())
    throw ValidationError("dynsys: " + std::to_string(s.points.size()) + " point names for " +
                          std::to_string(s.map.size()) + " points");
  for (std::size_t x = 0; x < s.map.size(); ++x)
    if (s.map[x] >= s.map.size())
      throw ValidationError("dynsys: T(" + std::to_string(x) + ") = " + std::to_string(s.map[x]) + " is not a point");
}

FiniteDynSystem make_dynsys(std::vector<std::size_t> map) {
  FiniteDynSystem s;
  for (std::size_t x = 0; x < map.size(); ++x) s.points.push_back(std::to_string(x));
  s.map = std::move(map);
  check(s);
  return s;
}

PointSet periodic_locus(FiniteDynSystem const& s, std::size_t p) {
  if (p == 0) throw PreconditionError("periodic_locus: p must be positive");
  PointSet out(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    std::size_t y = x;
    for (std::size_t k = 0; k < p; ++k) y = s.map[y];
    if (y == x) out.set(x);
  }
  return out;
}

PointSet script_p(FiniteDynSystem const& s) {
  PointSet out(s.size());
  for (std::size_t p = 1; p <= s.size(); ++p) out |= periodic_locus(s, p);
  return out;
}

NoneffectiveLocus noneffective_locus(FiniteDynSystem const& s) {
  std::size_t const n = s.size();
  NoneffectiveLocus out{PointSet(n), PointSet(n), true};
  auto const p = script_p(s);
  std::vector<std::size_t> first(n, n + 1);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = x;
    for (std::size_t k = 0; k <= n; ++k, y = s.map[y]) {
      if (p.test(y)) {
        out.orbit_meets_p.set(x);
        break;
      }
    }
    // T^k x = T^l x for some k != l.
    std::fill(first.begin(), first.end(), n + 1);
    y = x;
    for (std::size_t k = 0; k <= n; ++k, y = s.map[y]) {
      if (first[y] != n + 1) {
        out.eventually_periodic.set(x);
        break;
      }
      first[y] = k;
    }
  }
  out.agree = out.orbit_meets_p == out.eventually_periodic;
  return out;
}

std::vector<std::vector<std::size_t>> dr_components(FiniteDynSystem const& s) {
  std::size_t const n = s.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t x = 0; x < n; ++x) {
    auto const a = find(x);
    auto const b = find(s.map[x]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    auto const r = find(x);
    if (slot[r] == n) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(x);
  }
  return comps;
}

std::vector<PointSet> dr_invariant_sets(FiniteDynSystem const& s, std::size_t max_components) {
  auto const comps = dr_components(s);
  if (comps.size() > max_components || comps.size() >= 63)
    throw CapExceeded("dr_invariant_sets: " + std::to_string(comps.size()) + " components exceed the cap of " +
                      std::to_string(max_components));
  std::vector<PointSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << comps.size()); ++m) {
    PointSet u(s.size());
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (m >> c & 1U)
        for (auto x : comps[c]) u.set(x);
    out.push_back(std::move(u));
  }
  return out;
}

void check(DirectedGraph const& g) {
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto const [a, b] = g.edges[e];
    if (a >= g.vertex_count() || b >= g.vertex_count())
      throw ValidationError("graph: edge " + std::to_string(e) + " has an endpoint that is not a vertex");
  }
}

std::vector<std::size_t> out_degrees(DirectedGraph const& g) {
  std::vector<std::size_t> d(g.vertex_count(), 0);
  for (auto const& [a, b] : g.edges) ++d[a];
  return d;
}

namespace {

std::vector<std::vector<std::size_t>> out_edges(DirectedGraph const& g) {
  std::vector<std::vector<std::size_t>> out(g.vertex_count());
  for (std::size_t e = 0; e < g.edges.size(); ++e) out[g.edges[e].first].push_back(e);
  return out;
}

}  // namespace

std::vector<Cycle> graph_cycles(DirectedGraph const& g, std::size_t max_cycles) {
  auto const adj = out_edges(g);
  std::size_t const n = g.vertex_count();
  std::vector<Cycle> out;
  std::vector<bool> on_path(n, false);
  Cycle path;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t v) {
    for (auto e : adj[v]) {
      auto const w = g.edges[e].second;
      if (w < start) continue;
      if (w == start) {
        path.push_back(e);
        out.push_back(path);
        path.pop_back();
        if (out.size() > max_cycles)
          throw CapExceeded("graph_cycles: more than " + std::to_string(max_cycles) + " simple cycles");
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = true;
      path.push_back(e);
      dfs(start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  return out;
}

std::vector<std::size_t> cycle_vertices(DirectedGraph const& g, Cycle const& c) {
  std::vector<std::size_t> v;
  for (auto e : c) v.push_back(g.edges[e].first);
  return v;
}

bool cycle_has_exit(DirectedGraph const& g, Cycle const& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto const v = g.edges[c[i]].first;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (g.edges[e].first == v && e != c[i]) return true;
  }
  return false;
}

bool condition_l(DirectedGraph const& g) {
  auto const cycles = graph_cycles(g);
  return std::all_of(cycles.begin(), cycles.end(), [&](Cycle const& c) { return cycle_has_exit(g, c); });
}

VertexSet exitless_cycle_vertices(DirectedGraph const& g) {
  std::size_t const n = g.vertex_count();
  auto const deg = out_degrees(g);
  std::vector<std::size_t> next(n, n);
  for (auto const& [a, b] : g.edges)
    if (deg[a] == 1) next[a] = b;
  VertexSet out(n);
  for (std::size_t v = 0; v < n; ++v) {
    // v lies on an exit-less cycle iff following unique out-edges returns to v.
    std::size_t w = v;
    for (std::size_t k = 0; k < n; ++k) {
      w = next[w];
      if (w == n) break;
      if (w == v) {
        out.set(v);
        break;
      }
    }
  }
  return out;
}

bool is_hereditary(DirectedGraph const& g, VertexSet const& h) {
  return std::all_of(g.edges.begin(), g.edges.end(),
                     [&](auto const& e) { return !h.test(e.first) || h.test(e.second); });
}

bool is_saturated(DirectedGraph const& g, VertexSet const& h) {
  auto const deg = out_degrees(g);
  std::vector<bool> escapes(g.vertex_count(), false);
  for (auto const& [a, b] : g.edges)
    if (!h.test(b)) escapes[a] = true;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (deg[v] > 0 && !escapes[v] && !h.test(v)) return false;
  return true;
}

VertexSet saturated_hereditary_closure(DirectedGraph const& g, VertexSet const& s) {
  VertexSet h = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto const& [a, b] : g.edges) {
      if (h.test(a) && !h.test(b)) {
        h.set(b);
        changed = true;
      }
    }
  }
  auto const deg = out_degrees(g);
  changed = true;
  while (changed) {
    changed = false;
    std::vector<bool> escapes(g.vertex_count(), false);
    for (auto const& [a, b] : g.edges)
      if (!h.test(b)) escapes[a] = true;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (deg[v] > 0 && !escapes[v] && !h.test(v)) {
        h.set(v);
        changed = true;
      }
    }
  }
  return h;
}

void require_no_sinks(DirectedGraph const& g) {
  auto const deg = out_degrees(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (deg[v] == 0) throw UnsupportedInput("graph: vertex '" + g.vertices[v] + "' is a sink");
}

namespace {

// Strongly connected components, each listed after every component it can
// reach.
std::vector<std::vector<std::size_t>> sccs(DirectedGraph const& g) {
  std::size_t const n = g.vertex_count();
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto const& [a, b] : g.edges) succ[a].push_back(b);
  std::vector<std::size_t> index(n, n), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : succ[v]) {
      if (index[w] == n) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == n) visit(v);
  return out;
}

}  // namespace

std::vector<VertexSet> hereditary_saturated_lattice(DirectedGraph const& g, std::size_t max_sets) {
  require_no_sinks(g);
  std::size_t const n = g.vertex_count();
  auto const comps = sccs(g);
  std::vector<std::size_t> comp_of(n);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) comp_of[v] = c;
  std::vector<std::vector<std::size_t>> comp_succ(comps.size());
  for (auto const& [a, b] : g.edges)
    if (comp_of[a] != comp_of[b]) comp_succ[comp_of[a]].push_back(comp_of[b]);

  std::vector<VertexSet> out;
  std::vector<bool> chosen(comps.size(), false);
  VertexSet h(n);
  std::size_t visited = 0;
  // Components are decided in Tarjan order, so successors are decided first.
  std::function<void(std::size_t)> go = [&](std::size_t c) {
    if (c == comps.size()) {
      if (++visited > max_sets)
        throw CapExceeded("hereditary_saturated_lattice: more than " + std::to_string(max_sets) +
                          " hereditary sets");
      if (is_saturated(g, h)) out.push_back(h);
      return;
    }
    go(c + 1);
    bool const allowed =
        std::all_of(comp_succ[c].begin(), comp_succ[c].end(), [&](std::size_t d) { return chosen[d]; });
    if (!allowed) return;
    chosen[c] = true;
    for (auto v : comps[c]) h.set(v);
    go(c + 1);
    for (auto v : comps[c]) h.reset(v);
    chosen[c] = false;
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet obstruction_vertex_set(DirectedGraph const& g) {
  require_no_sinks(g);
  return saturated_hereditary_closure(g, exitless_cycle_vertices(g));
}

std::string format_points(std::vector<std::string> const& names, boost::dynamic_bitset<> const& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s.test(i)) continue;
    if (!first) out += ",";
    out += i < names.size() ? names[i] : std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace glab
