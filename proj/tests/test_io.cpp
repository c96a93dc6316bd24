#include "doctest.h"
#include "glab/error.hpp"
#include "glab/random.hpp"
#include "glab/structure.hpp"

using namespace glab;

namespace {

ParseError parse_error(std::string const& text) {
  try {
    parse_instance(text);
  } catch (ParseError const& e) {
    return e;
  }
  FAIL("expected ParseError");
  return ParseError("");
}

}  // namespace

TEST_CASE("parse an action file") {
  auto const inst = parse_instance(R"({
  "kind": "action",
  "version": 1,
  "group": {"family": "cyclic", "n": 2},
  "points": ["a", "b", "c"],
  "action": [[0, 1, 2], [1, 0, 2]]
})");
  CHECK(inst.kind == "action");
  auto const g = construct(inst.groupoid_spec());
  CHECK(g.size() == 6);
  CHECK(orbits(g).size() == 2);
}

TEST_CASE("parse every kind") {
  CHECK(construct(parse_instance(R"({"kind":"pair","version":1,"points":["1","2"]})").groupoid_spec()).size() == 4);
  CHECK(construct(parse_instance(R"({"kind":"group-bundle","version":1,"units":["u"],
      "groups":[{"family":"dihedral","k":3}]})").groupoid_spec()).size() == 6);
  CHECK(construct(parse_instance(R"({"kind":"partial-action","version":1,"group":{"family":"cyclic","n":2},
      "points":["a","b","c"],"maps":[[0,1,2],[1,0,null]]})").groupoid_spec()).size() == 5);
  CHECK(construct(parse_instance(R"({"kind":"groupoid-tables","version":1,"elements":["u","g"],
      "source":[0,0],"range":[0,0],"inverse":[0,1],"compose":[[0,1],[1,0]]})").groupoid_spec()).size() == 2);
  CHECK(construct(parse_instance(R"({"kind":"union","version":1,"parts":[
      {"kind":"pair","version":1,"points":["1"]},
      {"kind":"pair","version":1,"points":["2","3"]}]})").groupoid_spec()).size() == 5);
  auto const graph = parse_instance(R"({"kind":"graph","version":1,"vertices":["v"],"edges":[[0,0]]})");
  CHECK(graph.graph().edges.size() == 1);
  auto const dyn = parse_instance(R"({"kind":"dynsys","version":1,"points":["0","1"],"map":[1,1]})");
  CHECK(dyn.dynsys().map == std::vector<std::size_t>{1, 1});
}

TEST_CASE("syntax errors carry line and column") {
  auto const e = parse_error("{\n  \"kind\": \"pair\",\n  \"points\": [1,, 2]\n}");
  CHECK(e.line() == 3);
  CHECK(e.column() == 16);
  CHECK(std::string(e.what()).find("line 3") != std::string::npos);
}

TEST_CASE("schema errors name the path") {
  auto const missing = parse_error(R"({"kind":"pair","version":1})");
  CHECK(std::string(missing.what()).find("$") == 0);
  auto const version = parse_error(R"({"kind":"pair","version":2,"points":[]})");
  CHECK(std::string(version.what()).find("$.version") != std::string::npos);
  CHECK_THROWS_AS(parse_instance(R"({"kind":"nope","version":1})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"kind":"graph","version":1,"vertices":["v"],"edges":[[0,4]]})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"kind":"dynsys","version":1,"points":["0"],"map":[3]})"), ParseError);
}

TEST_CASE("inconsistent specs are rejected on construction") {
  auto const inst = parse_instance(R"({"kind":"action","version":1,"group":{"family":"cyclic","n":2},
      "points":["a","b"],"action":[[0,1],[0,0]]})");
  CHECK_THROWS_AS(construct(inst.groupoid_spec()), SpecError);
}

TEST_CASE("random: deterministic, valid, and round-trips") {
  for (auto const& type : random_types()) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      CAPTURE(type);
      CAPTURE(seed);
      std::size_t const size = 1 + seed % 6;
      auto const a = random_instance(type, size, seed);
      auto const b = random_instance(type, size, seed);
      CHECK(dump(to_json(a)) == dump(to_json(b)));
      auto const back = parse_instance(dump(to_json(a)));
      CHECK(same_instance(a, back));
      if (a.is_groupoid()) {
        auto const g = construct(a.groupoid_spec());
        CHECK(validate(g).ok);
        CHECK(g == construct(back.groupoid_spec()));
      } else if (type == "graph") {
        CHECK(a.graph() == back.graph());
        CHECK_NOTHROW(check(a.graph()));
      } else {
        CHECK(a.dynsys() == back.dynsys());
        CHECK(a.dynsys().size() == size);
      }
    }
  }
}

TEST_CASE("random: forced shapes and bad parameters") {
  RandomOptions opts;
  opts.loops = 1;
  auto const g = random_instance("graph", 1, 0, opts).graph();
  CHECK(g.vertex_count() == 1);
  CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});
  CHECK(random_instance("pair", 4, 3).groupoid_spec().value.index() == 3);
  CHECK_THROWS_AS(random_instance("nope", 3, 1), PreconditionError);
  CHECK_THROWS_AS(random_instance("pair", 40, 1), PreconditionError);
  CHECK(random_instance("action", 5, 1).kind == "action");
}

TEST_CASE("group JSON round trip") {
  for (auto const& g : {FiniteGroup::cyclic(4), FiniteGroup::dihedral(3), FiniteGroup::symmetric(3),
                        FiniteGroup({{0, 1}, {1, 0}}, {"x", "y"})}) {
    auto const back = group_from_json(to_json(g));
    CHECK(back.table() == g.table());
    CHECK(back.names() == g.names());
  }
}
