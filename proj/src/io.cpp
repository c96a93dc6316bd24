#include "glab/io.hpp"

#include <fstream>
#include <sstream>

#include "glab/error.hpp"

namespace glab {

namespace {

[[noreturn]] void schema(std::string const& where, std::string const& what) {
  throw ParseError(where + ": " + what);
}

Json const& field(Json const& j, char const* key, std::string const& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t index_value(Json const& j, std::string const& where) {
  if (!j.is_number_integer() || (j.is_number_integer() && j.get<long long>() < 0))
    schema(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

// null -> npos
std::size_t optional_index(Json const& j, std::string const& where) {
  return j.is_null() ? npos : index_value(j, where);
}

std::vector<std::string> strings(Json const& j, std::string const& where) {
  if (!j.is_array()) schema(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) schema(where + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<std::size_t> indices(Json const& j, std::string const& where, bool nullable = false) {
  if (!j.is_array()) schema(where, "expected an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto const w = where + "[" + std::to_string(i) + "]";
    out.push_back(nullable ? optional_index(j[i], w) : index_value(j[i], w));
  }
  return out;
}

std::vector<std::vector<std::size_t>> index_rows(Json const& j, std::string const& where, bool nullable = false) {
  if (!j.is_array()) schema(where, "expected an array of arrays");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(indices(j[i], where + "[" + std::to_string(i) + "]", nullable));
  return out;
}

Json index_json(std::size_t v) { return v == npos ? Json(nullptr) : Json(v); }

Json rows_json(std::vector<std::vector<std::size_t>> const& rows) {
  Json out = Json::array();
  for (auto const& r : rows) {
    Json row = Json::array();
    for (auto v : r) row.push_back(index_json(v));
    out.push_back(std::move(row));
  }
  return out;
}

FiniteGroup group_at(Json const& j, std::string const& where) {
  if (!j.is_object()) schema(where, "expected a group object");
  if (j.contains("family")) {
    auto const& fam = j["family"];
    if (!fam.is_string()) schema(where + ".family", "expected a string");
    auto const f = fam.get<std::string>();
    try {
      if (f == "cyclic") return FiniteGroup::cyclic(index_value(field(j, "n", where), where + ".n"));
      if (f == "dihedral") return FiniteGroup::dihedral(index_value(field(j, "k", where), where + ".k"));
      if (f == "symmetric") return FiniteGroup::symmetric(index_value(field(j, "k", where), where + ".k"));
    } catch (SpecError const& e) {
      schema(where, e.what());
    }
    schema(where + ".family", "unknown family '" + f + "'");
  }
  auto const table = index_rows(field(j, "table", where), where + ".table");
  std::vector<std::string> names;
  if (j.contains("names")) names = strings(j["names"], where + ".names");
  try {
    return FiniteGroup(table, names);
  } catch (SpecError const& e) {
    schema(where, e.what());
  }
}

GroupoidSpec groupoid_spec_at(Json const& j, std::string const& kind, std::string const& where) {
  if (kind == "action") {
    GroupActionSpec s{group_at(field(j, "group", where), where + ".group"), strings(field(j, "points", where), where + ".points"),
                      index_rows(field(j, "action", where), where + ".action")};
    return {s};
  }
  if (kind == "partial-action") {
    PartialActionSpec s{group_at(field(j, "group", where), where + ".group"),
                        strings(field(j, "points", where), where + ".points"),
                        index_rows(field(j, "maps", where), where + ".maps", true)};
    return {s};
  }
  if (kind == "group-bundle") {
    GroupBundleSpec s{strings(field(j, "units", where), where + ".units"), {}};
    auto const& groups = field(j, "groups", where);
    if (!groups.is_array()) schema(where + ".groups", "expected an array");
    for (std::size_t i = 0; i < groups.size(); ++i)
      s.groups.push_back(group_at(groups[i], where + ".groups[" + std::to_string(i) + "]"));
    return {s};
  }
  if (kind == "pair") return {PairSpec{strings(field(j, "points", where), where + ".points")}};
  if (kind == "groupoid-tables") {
    GroupoidTables t;
    t.names = strings(field(j, "elements", where), where + ".elements");
    t.source = indices(field(j, "source", where), where + ".source");
    t.range = indices(field(j, "range", where), where + ".range");
    t.inverse = indices(field(j, "inverse", where), where + ".inverse");
    auto const rows = index_rows(field(j, "compose", where), where + ".compose", true);
    for (auto const& r : rows) t.compose.insert(t.compose.end(), r.begin(), r.end());
    for (Index e = 0; e < t.names.size(); ++e)
      if (e < t.source.size() && t.source[e] == e) t.units.push_back(e);
    return {t};
  }
  if (kind == "union") {
    UnionSpec u;
    auto const& parts = field(j, "parts", where);
    if (!parts.is_array()) schema(where + ".parts", "expected an array");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto const w = where + ".parts[" + std::to_string(i) + "]";
      auto const& k = field(parts[i], "kind", w);
      if (!k.is_string()) schema(w + ".kind", "expected a string");
      u.parts.push_back(groupoid_spec_at(parts[i], k.get<std::string>(), w));
    }
    return {u};
  }
  schema(where + ".kind", "unknown kind '" + kind + "'");
}

Json groupoid_spec_json(GroupoidSpec const& spec, Json& out);

Json spec_body(GroupoidSpec const& spec) {
  Json out = Json::object();
  groupoid_spec_json(spec, out);
  return out;
}

Json groupoid_spec_json(GroupoidSpec const& spec, Json& out) {
  std::visit(
      [&](auto const& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GroupActionSpec>) {
          out["kind"] = "action";
          out["group"] = to_json(s.group);
          out["points"] = s.points;
          out["action"] = rows_json(s.action);
        } else if constexpr (std::is_same_v<T, PartialActionSpec>) {
          out["kind"] = "partial-action";
          out["group"] = to_json(s.group);
          out["points"] = s.points;
          out["maps"] = rows_json(s.maps);
        } else if constexpr (std::is_same_v<T, GroupBundleSpec>) {
          out["kind"] = "group-bundle";
          out["units"] = s.units;
          Json groups = Json::array();
          for (auto const& g : s.groups) groups.push_back(to_json(g));
          out["groups"] = std::move(groups);
        } else if constexpr (std::is_same_v<T, PairSpec>) {
          out["kind"] = "pair";
          out["points"] = s.points;
        } else if constexpr (std::is_same_v<T, GroupoidTables>) {
          out["kind"] = "groupoid-tables";
          out["elements"] = s.names;
          out["source"] = s.source;
          out["range"] = s.range;
          out["inverse"] = s.inverse;
          std::size_t const n = s.names.size();
          std::vector<std::vector<std::size_t>> rows(n);
          for (std::size_t a = 0; a < n; ++a) rows[a].assign(s.compose.begin() + a * n, s.compose.begin() + (a + 1) * n);
          out["compose"] = rows_json(rows);
        } else {
          out["kind"] = "union";
          Json parts = Json::array();
          for (auto const& p : s.parts) parts.push_back(spec_body(p));
          out["parts"] = std::move(parts);
        }
      },
      spec.value);
  return out;
}

std::pair<std::size_t, std::size_t> line_column(std::string const& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Json to_json(FiniteGroup const& g) {
  auto const& fam = g.family();
  auto const open = fam.find('(');
  if (open != std::string::npos) {
    auto const name = fam.substr(0, open);
    auto const arg = std::stoul(fam.substr(open + 1));
    Json out = Json::object();
    out["family"] = name;
    out[name == "cyclic" ? "n" : "k"] = arg;
    return out;
  }
  Json out = Json::object();
  out["table"] = g.table();
  out["names"] = g.names();
  return out;
}

FiniteGroup group_from_json(Json const& j) { return group_at(j, "group"); }

Instance instance_from_json(Json const& j) {
  if (!j.is_object()) schema("$", "expected an object");
  auto const& version = field(j, "version", "$");
  if (!version.is_number_integer() || version.get<long long>() != format_version)
    schema("$.version", "unsupported version (expected 1)");
  auto const& k = field(j, "kind", "$");
  if (!k.is_string()) schema("$.kind", "expected a string");
  auto const kind = k.get<std::string>();
  if (kind == "graph") {
    DirectedGraph g;
    g.vertices = strings(field(j, "vertices", "$"), "$.vertices");
    for (auto const& e : index_rows(field(j, "edges", "$"), "$.edges")) {
      if (e.size() != 2) schema("$.edges", "each edge is [src, dst]");
      g.edges.emplace_back(e[0], e[1]);
    }
    try {
      check(g);
    } catch (ValidationError const& e) {
      schema("$.edges", e.what());
    }
    return {kind, g};
  }
  if (kind == "dynsys") {
    FiniteDynSystem s{strings(field(j, "points", "$"), "$.points"), indices(field(j, "map", "$"), "$.map")};
    if (s.points.size() != s.map.size()) schema("$.map", "length differs from points");
    try {
      check(s);
    } catch (ValidationError const& e) {
      schema("$.map", e.what());
    }
    return {kind, s};
  }
  return {kind, groupoid_spec_at(j, kind, "$")};
}

Instance parse_instance(std::string const& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    auto const [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         e.what(),
                     line, col);
  }
  return instance_from_json(j);
}

Instance load_instance(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

Json to_json(Instance const& inst) {
  Json out = Json::object();
  out["kind"] = inst.kind;
  out["version"] = format_version;
  std::visit(
      [&](auto const& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, GroupoidSpec>) {
          auto body = spec_body(d);
          for (auto it = body.begin(); it != body.end(); ++it)
            if (it.key() != "kind") out[it.key()] = it.value();
        } else if constexpr (std::is_same_v<T, DirectedGraph>) {
          out["vertices"] = d.vertices;
          Json edges = Json::array();
          for (auto const& [a, b] : d.edges) edges.push_back({a, b});
          out["edges"] = std::move(edges);
        } else {
          out["points"] = d.points;
          out["map"] = d.map;
        }
      },
      inst.data);
  return out;
}

std::string dump(Json const& j) { return j.dump(2) + "\n"; }

bool same_instance(Instance const& a, Instance const& b) { return to_json(a) == to_json(b); }

}  // namespace glab
