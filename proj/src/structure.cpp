#include "glab/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "glab/error.hpp"

namespace glab {

UnitSubset OrbitPartition::union_of(std::uint64_t mask, std::size_t unit_count) const {
  UnitSubset u(unit_count);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (mask >> i & 1U)
      for (auto k : orbits[i]) u.set(k);
  return u;
}

OrbitPartition orbits(FiniteGroupoid const& g) {
  std::size_t const k = g.unit_count();
  // Union-find over units, joined along every arrow.
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Index e = 0; e < g.size(); ++e) {
    auto const a = find(g.source_pos(e));
    auto const b = find(g.range_pos(e));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  OrbitPartition p;
  p.orbit_of.assign(k, npos);
  std::vector<std::size_t> root_to_orbit(k, npos);
  for (std::size_t u = 0; u < k; ++u) {
    auto const r = find(u);
    if (root_to_orbit[r] == npos) {
      root_to_orbit[r] = p.orbits.size();
      p.orbits.emplace_back();
    }
    p.orbit_of[u] = root_to_orbit[r];
    p.orbits[root_to_orbit[r]].push_back(u);
  }
  return p;
}

bool is_invariant(FiniteGroupoid const& g, UnitSubset const& u) {
  if (u.size() != g.unit_count()) throw PreconditionError("unit subset has the wrong universe size");
  for (Index e = 0; e < g.size(); ++e)
    if (u.test(g.source_pos(e)) && !u.test(g.range_pos(e))) return false;
  return true;
}

InvariantLattice::InvariantLattice(FiniteGroupoid const& g, std::size_t max_orbits) : partition_(orbits(g)) {
  if (partition_.size() > max_orbits || partition_.size() >= 63) {
    throw CapExceeded("invariant lattice: " + std::to_string(partition_.size()) + " orbits exceed the cap of " +
                      std::to_string(max_orbits));
  }
  std::uint64_t const count = std::uint64_t{1} << partition_.size();
  members_.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) members_.push_back(partition_.union_of(m, g.unit_count()));
}

std::size_t InvariantLattice::index_of(UnitSubset const& u) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < partition_.size(); ++i) {
    auto const& orb = partition_.orbits[i];
    std::size_t hits = 0;
    for (auto k : orb) hits += u.test(k) ? 1 : 0;
    if (hits == orb.size()) {
      idx |= std::size_t{1} << i;
    } else if (hits != 0) {
      throw PreconditionError("unit subset is not invariant");
    }
  }
  return idx;
}

std::vector<UnitSubset> invariant_subsets(FiniteGroupoid const& g) { return InvariantLattice(g).members(); }

Reduction reduce(FiniteGroupoid const& g, UnitSubset const& u) {
  if (u.size() != g.unit_count()) throw PreconditionError("unit subset has the wrong universe size");
  Reduction red;
  red.from_parent.assign(g.size(), npos);
  // Keep the parent's element order; units stay in parent unit order.
  for (Index e = 0; e < g.size(); ++e) {
    if (u.test(g.source_pos(e)) && u.test(g.range_pos(e))) {
      red.from_parent[e] = red.to_parent.size();
      red.to_parent.push_back(e);
    }
  }
  std::size_t const m = red.to_parent.size();
  std::vector<std::string> names(m);
  std::vector<Index> source(m), range(m), inverse(m);
  for (Index c = 0; c < m; ++c) {
    Index const e = red.to_parent[c];
    names[c] = g.name(e);
    source[c] = red.from_parent[g.source(e)];
    range[c] = red.from_parent[g.range(e)];
    inverse[c] = red.from_parent[g.inverse(e)];
  }
  auto tables = make_tables(std::move(names), std::move(source), std::move(range), std::move(inverse),
                            [&](Index a, Index b) { return red.from_parent[g.compose(red.to_parent[a], red.to_parent[b])]; });
  red.groupoid = FiniteGroupoid::from_tables(std::move(tables));
  for (std::size_t k = 0; k < red.groupoid.unit_count(); ++k) {
    red.unit_to_parent.push_back(g.unit_position(red.to_parent[red.groupoid.unit(k)]));
  }
  return red;
}

FiniteGroupoid restrict(FiniteGroupoid const& g, UnitSubset const& u) { return reduce(g, u).groupoid; }

IsotropyGroup isotropy_group(FiniteGroupoid const& g, std::size_t unit_pos) {
  if (unit_pos >= g.unit_count()) throw PreconditionError("unit position out of range");
  IsotropyGroup iso;
  iso.base = unit_pos;
  iso.elements.push_back(g.unit(unit_pos));
  for (Index e : g.source_fiber(unit_pos))
    if (e != g.unit(unit_pos) && g.range_pos(e) == unit_pos) iso.elements.push_back(e);
  return iso;
}

bool is_effective_at(FiniteGroupoid const& g, std::size_t unit_pos) {
  return isotropy_group(g, unit_pos).elements.size() == 1;
}

UnitSubset effective_units(FiniteGroupoid const& g) {
  UnitSubset u(g.unit_count());
  for (std::size_t k = 0; k < g.unit_count(); ++k)
    if (is_effective_at(g, k)) u.set(k);
  return u;
}

UnitSubset isotropy_sources(FiniteGroupoid const& g) {
  UnitSubset u(g.unit_count());
  for (Index e = 0; e < g.size(); ++e)
    if (!g.is_unit(e) && g.is_isotropy(e)) u.set(g.source_pos(e));
  return u;
}

bool is_bisection(FiniteGroupoid const& g, std::vector<Index> const& elements) {
  UnitSubset seen_s(g.unit_count());
  UnitSubset seen_r(g.unit_count());
  for (Index e : elements) {
    if (seen_s.test(g.source_pos(e)) || seen_r.test(g.range_pos(e))) return false;
    seen_s.set(g.source_pos(e));
    seen_r.set(g.range_pos(e));
  }
  return true;
}

namespace {

struct Bisection {
  std::vector<Index> elements;
  // arrow_from[y] = the element of B with source y, or npos.
  std::vector<Index> arrow_from;
};

// All bisections in G \ G^(0) containing gamma.
std::vector<Bisection> bisections_through(FiniteGroupoid const& g, Index gamma) {
  std::vector<Index> others;
  for (Index e = 0; e < g.size(); ++e)
    if (!g.is_unit(e) && e != gamma) others.push_back(e);
  std::vector<Bisection> out;
  std::uint64_t const count = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Index> b{gamma};
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask >> i & 1U) b.push_back(others[i]);
    if (!is_bisection(g, b)) continue;
    Bisection bis;
    bis.arrow_from.assign(g.unit_count(), npos);
    for (Index e : b) bis.arrow_from[g.source_pos(e)] = e;
    bis.elements = std::move(b);
    out.push_back(std::move(bis));
  }
  return out;
}

// Some y in the intersection of the sources has r(B_i y) != y for every i.
bool has_moved_point(FiniteGroupoid const& g, std::vector<Bisection const*> const& bs) {
  for (std::size_t y = 0; y < g.unit_count(); ++y) {
    bool ok = true;
    for (auto const* b : bs) {
      Index const e = b->arrow_from[y];
      if (e == npos || g.range_pos(e) == y) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool jointly_effective_by_search(FiniteGroupoid const& g, std::size_t unit_pos) {
  auto const iso = isotropy_group(g, unit_pos);
  std::vector<std::vector<Bisection>> through;
  for (std::size_t i = 1; i < iso.elements.size(); ++i) through.push_back(bisections_through(g, iso.elements[i]));
  for (std::size_t i = 0; i < through.size(); ++i) {
    for (auto const& b : through[i])
      if (!has_moved_point(g, {&b})) return false;
  }
  return true;
}

bool is_jointly_effective_at(FiniteGroupoid const& g, std::size_t unit_pos) {
  // With B_i = {gamma_i} the only candidate point is the base unit itself,
  // which every gamma_i fixes; so joint effectiveness fails as soon as
  // there is any nontrivial isotropy.
  auto const iso = isotropy_group(g, unit_pos);
  bool result = true;
  for (std::size_t i = 1; i < iso.elements.size() && result; ++i) {
    Bisection single;
    single.elements = {iso.elements[i]};
    single.arrow_from.assign(g.unit_count(), npos);
    single.arrow_from[unit_pos] = iso.elements[i];
    if (!has_moved_point(g, {&single})) result = false;
  }
  if (g.size() <= joint_search_limit && jointly_effective_by_search(g, unit_pos) != result) {
    throw std::logic_error("joint effectiveness: bisection search disagrees with the singleton reduction");
  }
  return result;
}

}  // namespace glab
