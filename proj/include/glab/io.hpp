// JSON instance files.
//
// Every file is a UTF-8 JSON object with "kind" and "version": 1.  Kinds:
//
//   groupoid-tables  elements, source, range, inverse (element indices) and
//                    compose (n x n, null where undefined)
//   action           group, points, action[g][x] = index of g.x
//   partial-action   group, points, maps[g][y] = index of theta_g(y) or null
//   group-bundle     units, groups (one group per unit)
//   pair             points
//   union            parts (instance objects of the kinds above)
//   graph            vertices, edges [[src, dst], ...]
//   dynsys           points, map[x] = index of T(x)
//
// A group is {"family": "cyclic", "n": n}, {"family": "dihedral", "k": k},
// {"family": "symmetric", "k": k} or {"table": [[...]], "names": [...]}.

#ifndef GLAB_IO_HPP
#define GLAB_IO_HPP

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"

#include "glab/construct.hpp"
#include "glab/dynamics.hpp"

namespace glab {

using Json = nlohmann::ordered_json;

struct Instance {
  std::string kind;
  std::variant<GroupoidSpec, DirectedGraph, FiniteDynSystem> data;

  bool is_groupoid() const { return std::holds_alternative<GroupoidSpec>(data); }
  GroupoidSpec const& groupoid_spec() const { return std::get<GroupoidSpec>(data); }
  DirectedGraph const& graph() const { return std::get<DirectedGraph>(data); }
  FiniteDynSystem const& dynsys() const { return std::get<FiniteDynSystem>(data); }
};

inline constexpr int format_version = 1;

// Throw ParseError; syntax errors carry the line and column.
Instance parse_instance(std::string const& text);
Instance instance_from_json(Json const& j);
Instance load_instance(std::filesystem::path const& path);

Json to_json(Instance const& inst);
Json to_json(FiniteGroup const& g);
FiniteGroup group_from_json(Json const& j);
// Two-space indented JSON with a trailing newline.
std::string dump(Json const& j);

// Structural equality via the canonical JSON form.
bool same_instance(Instance const& a, Instance const& b);

}  // namespace glab

#endif  // GLAB_IO_HPP
