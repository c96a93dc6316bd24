#include "glab/groupoid.hpp"

#include "glab/error.hpp"

namespace glab {

std::string ValidationReport::message() const {
  if (ok) return "ok";
  std::string m = "groupoid axiom violated: " + axiom;
  if (!witnesses.empty()) {
    m += " (";
    for (std::size_t i = 0; i < witnesses.size(); ++i) m += (i ? ", " : "") + witnesses[i];
    m += ")";
  }
  return m;
}

namespace {

ValidationReport fail(std::string axiom, std::vector<std::string> witnesses) {
  return {false, std::move(axiom), std::move(witnesses)};
}

}  // namespace

ValidationReport validate(GroupoidTables const& t) {
  std::size_t const n = t.names.size();
  if (t.source.size() != n || t.range.size() != n || t.inverse.size() != n || t.compose.size() != n * n) {
    return fail("table-shape", {"expected " + std::to_string(n) + " entries per map and " +
                                std::to_string(n * n) + " composition cells"});
  }
  auto const nm = [&](Index e) { return e < n ? t.names[e] : "#" + std::to_string(e); };
  for (Index e = 0; e < n; ++e) {
    if (t.source[e] >= n || t.range[e] >= n || t.inverse[e] >= n) return fail("table-shape", {nm(e)});
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.compose[i] != npos && t.compose[i] >= n) return fail("table-shape", {nm(i / n), nm(i % n)});
  }
  {
    std::unordered_map<std::string, Index> seen;
    for (Index e = 0; e < n; ++e) {
      if (!seen.emplace(t.names[e], e).second) return fail("unique-names", {t.names[e]});
    }
  }
  std::vector<bool> is_unit(n, false);
  for (Index u : t.units) {
    if (u >= n) return fail("table-shape", {nm(u)});
    if (is_unit[u]) return fail("unique-names", {nm(u)});
    is_unit[u] = true;
  }
  for (Index u : t.units) {
    if (t.source[u] != u || t.range[u] != u || t.inverse[u] != u) return fail("units-fixed", {nm(u)});
  }
  for (Index e = 0; e < n; ++e) {
    if (!is_unit[t.source[e]] || !is_unit[t.range[e]]) return fail("source-range-are-units", {nm(e)});
  }
  for (Index e = 0; e < n; ++e) {
    if (t.inverse[t.inverse[e]] != e) return fail("inverse-involutive", {nm(e)});
  }
  for (Index e = 0; e < n; ++e) {
    if (t.source[t.inverse[e]] != t.range[e] || t.range[t.inverse[e]] != t.source[e]) {
      return fail("inverse-swaps-source-range", {nm(e)});
    }
  }
  auto const comp = [&](Index a, Index b) { return t.compose[a * n + b]; };
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      bool const composable = t.source[a] == t.range[b];
      if (composable != (comp(a, b) != npos)) return fail("composable-iff-source-equals-range", {nm(a), nm(b)});
      if (!composable) continue;
      Index const ab = comp(a, b);
      if (t.source[ab] != t.source[b] || t.range[ab] != t.range[a]) {
        return fail("source-range-of-product", {nm(a), nm(b), nm(ab)});
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (comp(a, t.source[a]) != a || comp(t.range[a], a) != a) return fail("unit-law", {nm(a)});
  }
  for (Index a = 0; a < n; ++a) {
    if (comp(a, t.inverse[a]) != t.range[a] || comp(t.inverse[a], a) != t.source[a]) {
      return fail("inverse-law", {nm(a)});
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      Index const ab = comp(a, b);
      if (ab == npos) continue;
      for (Index c = 0; c < n; ++c) {
        Index const bc = comp(b, c);
        if (bc == npos) continue;
        if (comp(ab, c) != comp(a, bc)) return fail("associativity", {nm(a), nm(b), nm(c)});
      }
    }
  }
  // Every element fixed by source must be listed as a unit.
  for (Index e = 0; e < n; ++e) {
    if (t.source[e] == e && !is_unit[e]) return fail("units-fixed", {nm(e)});
  }
  return {};
}

FiniteGroupoid::FiniteGroupoid(GroupoidTables tables) : t_(std::move(tables)) {
  std::size_t const n = t_.names.size();
  unit_pos_.assign(n, npos);
  for (std::size_t k = 0; k < t_.units.size(); ++k) unit_pos_[t_.units[k]] = k;
  source_fibers_.resize(t_.units.size());
  range_fibers_.resize(t_.units.size());
  for (Index e = 0; e < n; ++e) {
    source_fibers_[unit_pos_[t_.source[e]]].push_back(e);
    range_fibers_[unit_pos_[t_.range[e]]].push_back(e);
    by_name_.emplace(t_.names[e], e);
  }
}

FiniteGroupoid FiniteGroupoid::from_tables(GroupoidTables tables) {
  auto const report = validate(tables);
  if (!report.ok) throw ValidationError(report.message());
  return FiniteGroupoid(std::move(tables));
}

Index FiniteGroupoid::index_of(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) throw PreconditionError("no groupoid element named '" + std::string(name) + "'");
  return it->second;
}

bool FiniteGroupoid::operator==(FiniteGroupoid const& other) const {
  return t_.names == other.t_.names && t_.units == other.t_.units && t_.source == other.t_.source &&
         t_.range == other.t_.range && t_.inverse == other.t_.inverse && t_.compose == other.t_.compose;
}

ValidationReport validate(FiniteGroupoid const& g) { return validate(g.tables()); }

}  // namespace glab
