#include "glab/construct.hpp"

#include <map>
#include <set>

#include "glab/error.hpp"

namespace glab {

namespace {

std::string triple_name(std::string const& x, std::string const& g, std::string const& y) {
  return "(" + x + "," + g + "," + y + ")";
}

void check_points(std::vector<std::string> const& points, char const* what) {
  std::set<std::string> seen;
  for (auto const& p : points)
    if (!seen.insert(p).second) throw SpecError(std::string(what) + ": duplicate point name '" + p + "'");
}

}  // namespace

void check_action(GroupActionSpec const& spec) {
  auto const& grp = spec.group;
  std::size_t const n = spec.points.size();
  check_points(spec.points, "action");
  if (spec.action.size() != grp.order()) {
    throw SpecError("action: " + std::to_string(spec.action.size()) + " maps for a group of order " +
                    std::to_string(grp.order()));
  }
  for (std::size_t g = 0; g < grp.order(); ++g) {
    if (spec.action[g].size() != n) throw SpecError("action: map of " + grp.name(g) + " has wrong length");
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t const gx = spec.action[g][x];
      if (gx >= n) throw SpecError("action: " + grp.name(g) + " sends " + spec.points[x] + " outside the space");
      if (hit[gx]) throw SpecError("action: " + grp.name(g) + " is not a bijection");
      hit[gx] = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (spec.action[grp.identity()][x] != x) throw SpecError("action: identity moves " + spec.points[x]);
  }
  for (std::size_t g = 0; g < grp.order(); ++g)
    for (std::size_t h = 0; h < grp.order(); ++h)
      for (std::size_t x = 0; x < n; ++x)
        if (spec.action[g][spec.action[h][x]] != spec.action[grp.multiply(g, h)][x]) {
          throw SpecError("action: not a homomorphism at pair (" + grp.name(g) + ", " + grp.name(h) + ")");
        }
}

void check_partial_action(PartialActionSpec const& spec) {
  auto const& grp = spec.group;
  std::size_t const n = spec.points.size();
  check_points(spec.points, "partial action");
  if (spec.maps.size() != grp.order()) {
    throw SpecError("partial action: " + std::to_string(spec.maps.size()) + " maps for a group of order " +
                    std::to_string(grp.order()));
  }
  for (std::size_t g = 0; g < grp.order(); ++g) {
    if (spec.maps[g].size() != n) throw SpecError("partial action: map of " + grp.name(g) + " has wrong length");
    std::vector<bool> hit(n, false);
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t const x = spec.maps[g][y];
      if (x == npos) continue;
      if (x >= n) throw SpecError("partial action: theta_" + grp.name(g) + " leaves the space");
      if (hit[x]) throw SpecError("partial action: theta_" + grp.name(g) + " is not injective");
      hit[x] = true;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    if (spec.maps[grp.identity()][y] != y) {
      throw SpecError("partial action: theta_e is not the identity at " + spec.points[y]);
    }
  }
  for (std::size_t g = 0; g < grp.order(); ++g) {
    std::size_t const gi = grp.inverse(g);
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t const x = spec.maps[g][y];
      if (x != npos && spec.maps[gi][x] != y) {
        throw SpecError("partial action: theta_" + grp.name(gi) + " is not the inverse of theta_" + grp.name(g));
      }
    }
  }
  for (std::size_t g = 0; g < grp.order(); ++g) {
    for (std::size_t h = 0; h < grp.order(); ++h) {
      std::size_t const gh = grp.multiply(g, h);
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t const hy = spec.maps[h][y];
        if (hy == npos) continue;
        std::size_t const ghy = spec.maps[g][hy];
        if (ghy == npos) continue;
        if (spec.maps[gh][y] != ghy) {
          throw SpecError("partial action: theta_" + grp.name(g) + " theta_" + grp.name(h) +
                          " is not contained in theta_" + grp.name(gh) + " (pair (" + grp.name(g) + ", " +
                          grp.name(h) + "))");
        }
      }
    }
  }
}

PartialActionSpec as_partial_action(GroupActionSpec const& spec) {
  check_action(spec);
  return PartialActionSpec{spec.group, spec.points, spec.action};
}

FiniteGroupoid partial_action_groupoid(PartialActionSpec const& spec) {
  check_partial_action(spec);
  auto const& grp = spec.group;
  std::size_t const n = spec.points.size();
  // Element (x,g,y) is keyed by (g,y); units first so that unit positions
  // follow the point order.
  std::vector<std::size_t> order_g{grp.identity()};
  for (std::size_t g = 0; g < grp.order(); ++g)
    if (g != grp.identity()) order_g.push_back(g);
  std::vector<Index> key(grp.order() * n, npos);
  std::vector<std::size_t> elem_g, elem_y;
  std::vector<std::string> names;
  for (auto g : order_g) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!spec.in_domain(g, y)) continue;
      key[g * n + y] = names.size();
      elem_g.push_back(g);
      elem_y.push_back(y);
      names.push_back(triple_name(spec.points[spec.maps[g][y]], grp.name(g), spec.points[y]));
    }
  }
  std::size_t const m = names.size();
  auto const unit_of = [&](std::size_t x) { return key[grp.identity() * n + x]; };
  std::vector<Index> source(m), range(m), inverse(m);
  for (Index e = 0; e < m; ++e) {
    std::size_t const g = elem_g[e];
    std::size_t const y = elem_y[e];
    std::size_t const x = spec.maps[g][y];
    source[e] = unit_of(y);
    range[e] = unit_of(x);
    inverse[e] = key[grp.inverse(g) * n + x];
  }
  auto tables = make_tables(std::move(names), std::move(source), std::move(range), std::move(inverse),
                            [&](Index a, Index b) {
                              // (x,g,y)(y,h,z) = (x,gh,z)
                              return key[grp.multiply(elem_g[a], elem_g[b]) * n + elem_y[b]];
                            });
  return FiniteGroupoid::from_tables(std::move(tables));
}

FiniteGroupoid action_groupoid(GroupActionSpec const& spec) {
  return partial_action_groupoid(as_partial_action(spec));
}

FiniteGroupoid group_bundle(GroupBundleSpec const& spec) {
  check_points(spec.units, "group bundle");
  if (spec.units.size() != spec.groups.size()) throw SpecError("group bundle: one group per unit required");
  std::vector<std::string> names;
  std::vector<std::size_t> elem_u, elem_g;
  // Units first.
  for (std::size_t u = 0; u < spec.units.size(); ++u) {
    auto const& grp = spec.groups[u];
    names.push_back(triple_name(spec.units[u], grp.name(grp.identity()), spec.units[u]));
    elem_u.push_back(u);
    elem_g.push_back(grp.identity());
  }
  for (std::size_t u = 0; u < spec.units.size(); ++u) {
    auto const& grp = spec.groups[u];
    for (std::size_t g = 0; g < grp.order(); ++g) {
      if (g == grp.identity()) continue;
      names.push_back(triple_name(spec.units[u], grp.name(g), spec.units[u]));
      elem_u.push_back(u);
      elem_g.push_back(g);
    }
  }
  std::size_t const m = names.size();
  std::map<std::pair<std::size_t, std::size_t>, Index> key;
  for (Index e = 0; e < m; ++e) key[{elem_u[e], elem_g[e]}] = e;
  std::vector<Index> source(m), range(m), inverse(m);
  for (Index e = 0; e < m; ++e) {
    source[e] = range[e] = elem_u[e];
    inverse[e] = key.at({elem_u[e], spec.groups[elem_u[e]].inverse(elem_g[e])});
  }
  auto tables = make_tables(std::move(names), std::move(source), std::move(range), std::move(inverse),
                            [&](Index a, Index b) {
                              auto const u = elem_u[a];
                              return key.at({u, spec.groups[u].multiply(elem_g[a], elem_g[b])});
                            });
  return FiniteGroupoid::from_tables(std::move(tables));
}

FiniteGroupoid pair_groupoid(std::vector<std::string> const& points) {
  check_points(points, "pair groupoid");
  std::size_t const n = points.size();
  // Units (x,x) first, then (x,y) for x != y in lexicographic order.
  std::vector<std::size_t> ex, ey;
  for (std::size_t x = 0; x < n; ++x) {
    ex.push_back(x);
    ey.push_back(x);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) {
        ex.push_back(x);
        ey.push_back(y);
      }
  std::size_t const m = ex.size();
  std::vector<Index> key(n * n);
  std::vector<std::string> names(m);
  for (Index e = 0; e < m; ++e) {
    key[ex[e] * n + ey[e]] = e;
    names[e] = "(" + points[ex[e]] + "," + points[ey[e]] + ")";
  }
  std::vector<Index> source(m), range(m), inverse(m);
  for (Index e = 0; e < m; ++e) {
    source[e] = key[ey[e] * n + ey[e]];
    range[e] = key[ex[e] * n + ex[e]];
    inverse[e] = key[ey[e] * n + ex[e]];
  }
  auto tables = make_tables(std::move(names), std::move(source), std::move(range), std::move(inverse),
                            [&](Index a, Index b) { return key[ex[a] * n + ey[b]]; });
  return FiniteGroupoid::from_tables(std::move(tables));
}

FiniteGroupoid disjoint_union(std::vector<FiniteGroupoid> const& parts) {
  std::vector<std::string> names;
  std::vector<Index> source, range, inverse, offsets;
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    Index const off = names.size();
    offsets.push_back(off);
    auto const& g = parts[p];
    for (Index e = 0; e < g.size(); ++e) {
      names.push_back(std::to_string(p) + ":" + g.name(e));
      source.push_back(off + g.source(e));
      range.push_back(off + g.range(e));
      inverse.push_back(off + g.inverse(e));
      part_of.push_back(p);
    }
  }
  auto tables = make_tables(std::move(names), std::move(source), std::move(range), std::move(inverse),
                            [&](Index a, Index b) {
                              auto const p = part_of[a];
                              return offsets[p] + parts[p].compose(a - offsets[p], b - offsets[p]);
                            });
  return FiniteGroupoid::from_tables(std::move(tables));
}

FiniteGroupoid construct(GroupoidSpec const& spec) {
  return std::visit(
      [](auto const& s) -> FiniteGroupoid {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GroupActionSpec>) {
          return action_groupoid(s);
        } else if constexpr (std::is_same_v<T, PartialActionSpec>) {
          return partial_action_groupoid(s);
        } else if constexpr (std::is_same_v<T, GroupBundleSpec>) {
          return group_bundle(s);
        } else if constexpr (std::is_same_v<T, PairSpec>) {
          return pair_groupoid(s.points);
        } else if constexpr (std::is_same_v<T, GroupoidTables>) {
          return FiniteGroupoid::from_tables(s);
        } else {
          std::vector<FiniteGroupoid> parts;
          for (auto const& p : s.parts) parts.push_back(construct(p));
          return disjoint_union(parts);
        }
      },
      spec.value);
}

namespace {

void check_point(PartialActionSpec const& spec, std::size_t x) {
  if (x >= spec.points.size()) {
    throw PreconditionError("point index " + std::to_string(x) + " is not in the space of the partial action");
  }
}

// Nontrivial group elements g with x in dom(g) and theta_g(x) = x.
std::vector<std::size_t> stabilizer(PartialActionSpec const& spec, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < spec.group.order(); ++g)
    if (g != spec.group.identity() && spec.maps[g][x] == x) out.push_back(g);
  return out;
}

bool moved_by_all(PartialActionSpec const& spec, std::size_t y, std::vector<std::size_t> const& gs) {
  for (auto g : gs)
    if (spec.maps[g][y] == y) return false;
  return true;
}

// Some y in the neighbourhood is moved by every g in gs.
bool exists_moved_point(PartialActionSpec const& spec, std::vector<std::size_t> const& nbhd,
                        std::vector<std::size_t> const& gs) {
  for (auto y : nbhd)
    if (moved_by_all(spec, y, gs)) return true;
  return false;
}

}  // namespace

bool topological_freeness_at(PartialActionSpec const& spec, std::size_t x) {
  check_point(spec, x);
  std::vector<std::size_t> const nbhd{x};
  for (auto g : stabilizer(spec, x))
    if (!exists_moved_point(spec, nbhd, {g})) return false;
  return true;
}

bool strong_topological_freeness_at(PartialActionSpec const& spec, std::size_t x) {
  check_point(spec, x);
  std::vector<std::size_t> const nbhd{x};
  auto const stab = stabilizer(spec, x);
  // Collections of one or two stabilizer elements.
  for (std::size_t i = 0; i < stab.size(); ++i) {
    if (!exists_moved_point(spec, nbhd, {stab[i]})) return false;
    for (std::size_t j = i + 1; j < stab.size(); ++j)
      if (!exists_moved_point(spec, nbhd, {stab[i], stab[j]})) return false;
  }
  return true;
}

}  // namespace glab
