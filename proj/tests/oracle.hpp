// Counting oracle computed straight from group and action data, without
// touching the groupoid, algebra or decomposition code.

#ifndef GLAB_TESTS_ORACLE_HPP
#define GLAB_TESTS_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<std::size_t>>;

inline std::size_t identity_of(Table const& t) {
  for (std::size_t e = 0; e < t.size(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < t.size() && ok; ++g) ok = t[e][g] == g && t[g][e] == g;
    if (ok) return e;
  }
  return t.size();
}

inline std::size_t inverse_of(Table const& t, std::size_t g) {
  std::size_t const e = identity_of(t);
  for (std::size_t h = 0; h < t.size(); ++h)
    if (t[g][h] == e) return h;
  return t.size();
}

// Number of conjugacy classes of the subgroup given by its elements.
inline std::size_t class_count(Table const& t, std::vector<std::size_t> const& sub) {
  std::set<std::set<std::size_t>> classes;
  for (auto x : sub) {
    std::set<std::size_t> cls;
    for (auto h : sub) cls.insert(t[t[h][x]][inverse_of(t, h)]);
    classes.insert(cls);
  }
  return classes.size();
}

struct Orbit {
  std::size_t size = 0;
  std::size_t isotropy_classes = 0;  // conjugacy classes of a stabilizer
  std::size_t isotropy_order = 0;
};

struct Counts {
  std::size_t orbits = 0;
  std::size_t blocks = 0;
  std::size_t ideals = 0;
  std::size_t dynamical = 0;
  std::size_t purely_non_dynamical = 0;
  std::size_t triples = 0;
  std::size_t elements = 0;
};

// An orbit with stabilizer H contributes one block per irreducible
// representation of H.  A block subset of one orbit meets the diagonal iff
// it is the whole orbit, because the units of the orbit have nonzero
// component in every block.
inline Counts counts(std::vector<Orbit> const& orbits) {
  Counts c;
  c.orbits = orbits.size();
  std::uint64_t zero_diagonal = 1;
  for (auto const& o : orbits) {
    c.blocks += o.isotropy_classes;
    c.elements += o.size * o.size * o.isotropy_order;
    zero_diagonal *= (std::uint64_t{1} << o.isotropy_classes) - 1;
  }
  c.ideals = std::size_t{1} << c.blocks;
  c.dynamical = std::size_t{1} << c.orbits;
  c.purely_non_dynamical = zero_diagonal - 1;
  c.triples = c.ideals;
  return c;
}

// action[g][x] = g.x
inline std::vector<Orbit> action_orbits(Table const& t, Table const& action) {
  std::size_t const n = action.empty() ? 0 : action[0].size();
  std::vector<bool> seen(n, false);
  std::vector<Orbit> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<std::size_t> orb;
    std::vector<std::size_t> stab;
    for (std::size_t g = 0; g < t.size(); ++g) {
      orb.insert(action[g][x]);
      if (action[g][x] == x) stab.push_back(g);
    }
    for (auto y : orb) seen[y] = true;
    out.push_back({orb.size(), class_count(t, stab), stab.size()});
  }
  return out;
}

inline std::vector<Orbit> bundle_orbits(std::vector<Table> const& groups) {
  std::vector<Orbit> out;
  for (auto const& t : groups) {
    std::vector<std::size_t> all(t.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    out.push_back({1, class_count(t, all), t.size()});
  }
  return out;
}

inline std::vector<Orbit> pair_orbits(std::size_t n) {
  if (n == 0) return {};
  return {{n, 1, 1}};
}

inline Table cyclic_table(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

}  // namespace oracle

#endif  // GLAB_TESTS_ORACLE_HPP
