// Constructors turning combinatorial descriptions into validated finite
// groupoids, plus the freeness predicates computed directly on a partial
// action.

#ifndef GLAB_CONSTRUCT_HPP
#define GLAB_CONSTRUCT_HPP

#include <string>
#include <variant>
#include <vector>

#include "glab/group.hpp"
#include "glab/groupoid.hpp"

namespace glab {

// A global action: action[g][x] is g.x.
struct GroupActionSpec {
  FiniteGroup group = FiniteGroup::trivial();
  std::vector<std::string> points;
  std::vector<std::vector<std::size_t>> action;
};

// A partial action: maps[g][y] is theta_g(y), or npos when y is outside the
// domain of theta_g.
struct PartialActionSpec {
  FiniteGroup group = FiniteGroup::trivial();
  std::vector<std::string> points;
  std::vector<std::vector<std::size_t>> maps;

  bool in_domain(std::size_t g, std::size_t y) const { return maps[g][y] != npos; }
};

struct GroupBundleSpec {
  std::vector<std::string> units;
  std::vector<FiniteGroup> groups;
};

struct PairSpec {
  std::vector<std::string> points;
};

struct GroupoidSpec;

struct UnionSpec {
  std::vector<GroupoidSpec> parts;
};

struct GroupoidSpec {
  std::variant<GroupActionSpec, PartialActionSpec, GroupBundleSpec, PairSpec, GroupoidTables, UnionSpec> value;
};

// Throws SpecError when the action is not a homomorphism into Sym(points).
void check_action(GroupActionSpec const& spec);
// Throws SpecError naming the first failing axiom (and pair (g,h) for the
// composition axiom theta_g theta_h <= theta_gh).
void check_partial_action(PartialActionSpec const& spec);

PartialActionSpec as_partial_action(GroupActionSpec const& spec);

// G_theta = {(x,g,y) : y in dom(g), theta_g(y) = x}; element names are
// "(x,g,y)".
FiniteGroupoid partial_action_groupoid(PartialActionSpec const& spec);
FiniteGroupoid action_groupoid(GroupActionSpec const& spec);
FiniteGroupoid group_bundle(GroupBundleSpec const& spec);
FiniteGroupoid pair_groupoid(std::vector<std::string> const& points);
// Element names are prefixed with "<part>:".
FiniteGroupoid disjoint_union(std::vector<FiniteGroupoid> const& parts);

FiniteGroupoid construct(GroupoidSpec const& spec);

// Freeness at a point, evaluated on the partial action itself.  In the
// discrete topology {x} is the smallest neighbourhood of x and both
// conditions become harder as the neighbourhood shrinks, so {x} decides
// them.  Throw PreconditionError when x is not a point of the space.
bool topological_freeness_at(PartialActionSpec const& spec, std::size_t x);
bool strong_topological_freeness_at(PartialActionSpec const& spec, std::size_t x);

}  // namespace glab

#endif  // GLAB_CONSTRUCT_HPP
