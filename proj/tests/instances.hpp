#ifndef GLAB_TESTS_INSTANCES_HPP
#define GLAB_TESTS_INSTANCES_HPP

#include <memory>
#include <string>
#include <vector>

#include "glab/construct.hpp"
#include "glab/ideals.hpp"

namespace inst {

// Z/2 swapping a and b and fixing c.
inline glab::GroupActionSpec swap_and_fix_spec() {
  return {glab::FiniteGroup::cyclic(2), {"a", "b", "c"}, {{0, 1, 2}, {1, 0, 2}}};
}

inline glab::GroupoidPtr ptr(glab::FiniteGroupoid g) {
  return std::make_shared<glab::FiniteGroupoid const>(std::move(g));
}

inline glab::GroupoidPtr swap_and_fix() { return ptr(glab::action_groupoid(swap_and_fix_spec())); }

inline glab::GroupoidPtr z2_bundle() {
  return ptr(glab::group_bundle({{"u"}, {glab::FiniteGroup::cyclic(2)}}));
}

inline glab::GroupoidPtr pair(std::size_t n) {
  std::vector<std::string> pts;
  for (std::size_t i = 1; i <= n; ++i) pts.push_back(std::to_string(i));
  return ptr(glab::pair_groupoid(pts));
}

inline glab::UnitSubset units(glab::FiniteGroupoid const& g, std::vector<std::string> const& names) {
  glab::UnitSubset u(g.unit_count());
  for (auto const& n : names) {
    for (std::size_t k = 0; k < g.unit_count(); ++k) {
      auto const& full = g.name(g.unit(k));
      if (full == "(" + n + ",e," + n + ")" || full == "(" + n + "," + n + ")") u.set(k);
    }
  }
  return u;
}

}  // namespace inst

#endif  // GLAB_TESTS_INSTANCES_HPP
