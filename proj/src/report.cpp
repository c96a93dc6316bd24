#include "glab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "glab/error.hpp"
#include "glab/structure.hpp"

namespace glab {

namespace {

Json unit_list(FiniteGroupoid const& g, UnitSubset const& u) {
  Json out = Json::array();
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u.test(k)) out.push_back(g.name(g.unit(k)));
  return out;
}

Json block_list(BlockSet const& b) {
  Json out = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.test(i)) out.push_back(i);
  return out;
}

Json point_list(std::vector<std::string> const& names, boost::dynamic_bitset<> const& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.test(i)) out.push_back(names[i]);
  return out;
}

Json header(char const* command, Instance const& inst, ReportOptions const& opts) {
  Json out = Json::object();
  out["command"] = command;
  out["kind"] = inst.kind;
  out["seed"] = opts.seed;
  out["tolerances"] = {{"zero_eps", opts.tol.zero_eps}, {"eig_residual", opts.tol.eig_residual}};
  out["conventions"] = conventions();
  return out;
}

Json instance_summary(IdealStructure const& s) {
  auto const& G = s.groupoid();
  Json out = Json::object();
  out["elements"] = G.size();
  out["units"] = G.unit_count();
  Json orbs = Json::array();
  auto const& part = s.invariant_lattice().partition();
  for (auto const& o : part.orbits) {
    Json names = Json::array();
    for (auto k : o) names.push_back(G.name(G.unit(k)));
    orbs.push_back(std::move(names));
  }
  out["orbits"] = std::move(orbs);
  out["effective_units"] = unit_list(G, effective_units(G));
  out["noneffective_units"] = unit_list(G, s.noneffective_units());
  return out;
}

Json blocks_json(IdealStructure const& s) {
  auto const& A = s.algebra();
  auto const& G = s.groupoid();
  auto const& part = s.invariant_lattice().partition();
  Json out = Json::array();
  for (std::size_t i = 0; i < A.block_count(); ++i) {
    Json orbit = Json::array();
    for (auto k : part.orbits[A.block_orbit(i)]) orbit.push_back(G.name(G.unit(k)));
    out.push_back({{"index", i}, {"dimension", A.decomposition().blocks[i].dimension}, {"orbit", std::move(orbit)}});
  }
  return out;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string lpad(std::string s, std::size_t w) {
  if (s.size() < w) s.insert(0, w - s.size(), ' ');
  return s;
}

std::string set_text(Json const& arr) {
  std::string s = "{";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ",";
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s + "}";
}

std::string number_text(Json const& v) {
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v.get<double>());
    return buf;
  }
  return v.dump();
}

void header_text(std::ostringstream& os, Json const& r) {
  os << "glab " << r["command"].get<std::string>() << "  kind " << r["kind"].get<std::string>() << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(r["seed"].get<std::uint64_t>()));
  os << "seed " << buf << "  zero_eps " << number_text(r["tolerances"]["zero_eps"]) << "  eig_residual "
     << number_text(r["tolerances"]["eig_residual"]) << "\n\n";
}

void conventions_text(std::ostringstream& os, Json const& r) {
  os << "\nconventions\n";
  for (auto it = r["conventions"].begin(); it != r["conventions"].end(); ++it)
    os << "  " << pad(it.key(), 12) << it.value().get<std::string>() << "\n";
}

}  // namespace

Json conventions() {
  Json out = Json::object();
  out["topology"] = "finite spaces carry the discrete topology";
  out["triples"] =
      "(U,U,0) is admitted with J the zero ideal of the zero algebra; full support is vacuous over the empty "
      "groupoid";
  out["paths"] =
      "an infinite path e1 e2 ... has dst(e_i) = src(e_i+1) and the shift deletes e1; the obstruction sits on "
      "cycles without exits";
  out["graph"] =
      "obstruction vertex set = saturated hereditary closure of the vertices on exit-less cycles, a derived "
      "vertex-level reading of supp(J^ob)";
  return out;
}

AlgebraOptions algebra_options(ReportOptions const& opts) {
  AlgebraOptions a;
  a.wedderburn.tol = opts.tol;
  a.wedderburn.seed = opts.seed;
  a.max_blocks = opts.caps.max_blocks;
  return a;
}

GroupoidPtr build_groupoid(Instance const& inst, ReportOptions const& opts) {
  if (!inst.is_groupoid()) throw PreconditionError("instance of kind '" + inst.kind + "' is not a groupoid");
  auto g = std::make_shared<FiniteGroupoid const>(construct(inst.groupoid_spec()));
  if (g->size() > opts.caps.max_elements)
    throw CapExceeded("groupoid has " + std::to_string(g->size()) + " elements, cap is " +
                      std::to_string(opts.caps.max_elements));
  return g;
}

namespace {

std::shared_ptr<IdealStructure> structure_for(Instance const& inst, ReportOptions const& opts) {
  opts.tol.check();
  auto s = std::make_shared<IdealStructure>(build_groupoid(inst, opts), algebra_options(opts));
  if (s->algebra().block_count() > opts.caps.max_blocks)
    throw CapExceeded(std::to_string(s->algebra().block_count()) + " blocks, cap is " +
                      std::to_string(opts.caps.max_blocks));
  return s;
}

}  // namespace

Json analyze_report(Instance const& inst, ReportOptions const& opts) {
  auto const s = structure_for(inst, opts);
  auto const& A = s->algebra();
  auto const& G = s->groupoid();
  Json out = header("analyze", inst, opts);
  out["instance"] = instance_summary(*s);
  out["wedderburn"] = {{"attempts", A.decomposition().attempts},
                       {"max_eig_residual", A.decomposition().max_eig_residual}};
  out["blocks"] = blocks_json(*s);

  std::size_t dynamical = 0, pnd = 0;
  Json ideals = Json::array();
  for (auto const& I : A.all_ideals()) {
    bool const dyn = A.is_dynamical(I);
    bool const p = A.is_purely_non_dynamical(I);
    dynamical += dyn;
    pnd += p;
    auto const t = s->theta_inverse(I);
    ideals.push_back({{"blocks", block_list(I.blocks)},
                      {"dynamical", dyn},
                      {"purely_non_dynamical", p},
                      {"sandwich", {{"U", unit_list(G, t.lower)}, {"V", unit_list(G, t.upper)}}},
                      {"triple", {{"U", unit_list(G, t.lower)}, {"V", unit_list(G, t.upper)}, {"J", block_list(t.j)}}}});
  }
  auto const triples = s->enumerate_triples();
  out["counts"] = {{"blocks", A.block_count()},
                   {"ideals", ideals.size()},
                   {"dynamical", dynamical},
                   {"purely_non_dynamical", pnd},
                   {"triples", triples.size()}};
  out["ideals"] = std::move(ideals);
  auto const job = s->obstruction_ideal();
  out["obstruction_ideal"] = {{"blocks", block_list(job.blocks)}, {"units", unit_list(G, s->noneffective_units())}};
  out["collapse_kernel"] = {{"blocks", block_list(s->collapse_kernel().blocks)}};
  return out;
}

Json verify_report(Instance const& inst, ReportOptions const& opts) {
  auto const s = structure_for(inst, opts);
  auto const& A = s->algebra();
  Json out = header("verify", inst, opts);
  out["instance"] = instance_summary(*s);
  out["block_dimensions"] = A.decomposition().dimensions();
  out["theorem"] = opts.theorem;
  auto const rep = s->verify(opts.theorem);
  Json verdicts = Json::array();
  for (auto const& v : rep.verdicts) {
    verdicts.push_back({{"theorem", v.theorem},
                        {"pass", v.pass},
                        {"checked", v.checked},
                        {"detail", v.detail},
                        {"witnesses", v.witnesses}});
  }
  out["verdicts"] = std::move(verdicts);
  out["pass"] = rep.all_pass();
  return out;
}

Json graph_report(Instance const& inst, ReportOptions const& opts) {
  if (inst.kind != "graph") throw PreconditionError("graph: instance kind is '" + inst.kind + "'");
  auto const& g = inst.graph();
  if (g.vertex_count() > opts.caps.max_vertices)
    throw CapExceeded("graph has " + std::to_string(g.vertex_count()) + " vertices, cap is " +
                      std::to_string(opts.caps.max_vertices));
  require_no_sinks(g);
  Json out = header("graph", inst, opts);
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edges.size();
  auto const cycles = graph_cycles(g);
  Json cyc = Json::array();
  for (auto const& c : cycles) {
    Json names = Json::array();
    for (auto v : cycle_vertices(g, c)) names.push_back(g.vertices[v]);
    cyc.push_back({{"vertices", std::move(names)}, {"exit", cycle_has_exit(g, c)}});
  }
  out["cycles"] = std::move(cyc);
  bool const cond_l =
      std::all_of(cycles.begin(), cycles.end(), [&](Cycle const& c) { return cycle_has_exit(g, c); });
  out["condition_L"] = cond_l;
  out["exitless_cycle_vertices"] = point_list(g.vertices, exitless_cycle_vertices(g));
  auto const lattice = hereditary_saturated_lattice(g);
  Json lat = Json::array();
  for (auto const& h : lattice) lat.push_back(point_list(g.vertices, h));
  out["lattice_size"] = lattice.size();
  out["lattice"] = std::move(lat);
  auto const obs = obstruction_vertex_set(g);
  out["obstruction_vertex_set"] = point_list(g.vertices, obs);
  out["obstruction_empty_iff_condition_L"] = obs.none() == cond_l;
  return out;
}

Json dr_report(Instance const& inst, ReportOptions const& opts) {
  if (inst.kind != "dynsys") throw PreconditionError("dr: instance kind is '" + inst.kind + "'");
  auto const& s = inst.dynsys();
  if (s.size() > opts.caps.max_points)
    throw CapExceeded("system has " + std::to_string(s.size()) + " points, cap is " +
                      std::to_string(opts.caps.max_points));
  Json out = header("dr", inst, opts);
  out["points"] = s.size();
  bool const list = s.size() <= 64;
  Json table = Json::array();
  for (std::size_t p = 1; p <= s.size(); ++p) {
    auto const fix = periodic_locus(s, p);
    Json row = {{"p", p}, {"size", fix.count()}};
    if (list) row["points"] = point_list(s.points, fix);
    table.push_back(std::move(row));
  }
  out["periodic_table"] = std::move(table);
  out["script_P"] = point_list(s.points, script_p(s));
  auto const loc = noneffective_locus(s);
  out["noneffective_locus"] = {{"orbit_meets_P", point_list(s.points, loc.orbit_meets_p)},
                               {"eventually_periodic", point_list(s.points, loc.eventually_periodic)},
                               {"agree", loc.agree},
                               {"all_of_X", loc.orbit_meets_p.count() == s.size()},
                               {"note",
                                "on a finite space every forward orbit reaches a cycle, so both sides are all of "
                                "X; the check is their agreement"}};
  auto const comps = dr_components(s);
  out["components"] = comps.size();
  if (comps.size() <= 10) {
    Json sets = Json::array();
    for (auto const& u : dr_invariant_sets(s)) sets.push_back(point_list(s.points, u));
    out["invariant_sets"] = std::move(sets);
  } else {
    out["invariant_sets_count"] = std::to_string(std::uint64_t{1} << std::min<std::size_t>(comps.size(), 63));
  }
  return out;
}

std::string render_text(Json const& r) {
  std::ostringstream os;
  header_text(os, r);
  auto const cmd = r["command"].get<std::string>();
  if (cmd == "analyze" || cmd == "verify") {
    auto const& in = r["instance"];
    os << "instance\n";
    os << "  " << pad("elements", 14) << in["elements"].dump() << "\n";
    os << "  " << pad("units", 14) << in["units"].dump() << "\n";
    os << "  " << pad("orbits", 14);
    for (std::size_t k = 0; k < in["orbits"].size(); ++k) os << (k ? " " : "") << set_text(in["orbits"][k]);
    os << "\n  " << pad("effective", 14) << set_text(in["effective_units"]) << "\n";
    os << "  " << pad("noneffective", 14) << set_text(in["noneffective_units"]) << "\n";
  }
  if (cmd == "analyze") {
    os << "\nblocks\n  " << lpad("#", 3) << "  " << lpad("dim", 4) << "  orbit\n";
    for (auto const& b : r["blocks"])
      os << "  " << lpad(b["index"].dump(), 3) << "  " << lpad(b["dimension"].dump(), 4) << "  "
         << set_text(b["orbit"]) << "\n";
    os << "\ncounts\n";
    for (auto it = r["counts"].begin(); it != r["counts"].end(); ++it)
      os << "  " << pad(it.key(), 22) << it.value().dump() << "\n";
    std::size_t wb = 6, wu = 1, wv = 1;
    for (auto const& i : r["ideals"]) {
      wb = std::max(wb, set_text(i["blocks"]).size());
      wu = std::max(wu, set_text(i["triple"]["U"]).size());
      wv = std::max(wv, set_text(i["triple"]["V"]).size());
    }
    os << "\nideals\n  " << pad("blocks", wb + 2) << pad("dyn", 5) << pad("pnd", 5) << pad("U", wu + 2)
       << pad("V", wv + 2) << "J\n";
    for (auto const& i : r["ideals"]) {
      os << "  " << pad(set_text(i["blocks"]), wb + 2) << pad(i["dynamical"].get<bool>() ? "yes" : "no", 5)
         << pad(i["purely_non_dynamical"].get<bool>() ? "yes" : "no", 5) << pad(set_text(i["triple"]["U"]), wu + 2)
         << pad(set_text(i["triple"]["V"]), wv + 2) << set_text(i["triple"]["J"]) << "\n";
    }
    os << "\n  " << pad("J^ob", 16) << set_text(r["obstruction_ideal"]["blocks"]) << " over "
       << set_text(r["obstruction_ideal"]["units"]) << "\n";
    os << "  " << pad("collapse kernel", 16) << set_text(r["collapse_kernel"]["blocks"]) << "\n";
  } else if (cmd == "verify") {
    os << "\nverdicts\n";
    for (auto const& v : r["verdicts"]) {
      os << "  " << pad(v["theorem"].get<std::string>(), 12) << pad(v["pass"].get<bool>() ? "pass" : "FAIL", 6)
         << lpad(v["checked"].dump(), 8) << "  " << v["detail"].get<std::string>() << "\n";
      for (auto const& w : v["witnesses"]) os << "      " << w.get<std::string>() << "\n";
    }
    os << "\n  result  " << (r["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  } else if (cmd == "graph") {
    os << "  " << pad("vertices", 26) << r["vertices"].dump() << "\n";
    os << "  " << pad("edges", 26) << r["edges"].dump() << "\n";
    os << "  " << pad("cycles", 26) << r["cycles"].size() << "\n";
    for (auto const& c : r["cycles"])
      os << "    " << pad(set_text(c["vertices"]), 22) << (c["exit"].get<bool>() ? "exit" : "no exit") << "\n";
    os << "  " << pad("condition L", 26) << (r["condition_L"].get<bool>() ? "yes" : "no") << "\n";
    os << "  " << pad("exit-less cycle vertices", 26) << set_text(r["exitless_cycle_vertices"]) << "\n";
    os << "  " << pad("obstruction vertex set", 26) << set_text(r["obstruction_vertex_set"]) << "\n";
    os << "  " << pad("lattice size", 26) << r["lattice_size"].dump() << "\n";
    for (auto const& h : r["lattice"]) os << "    " << set_text(h) << "\n";
  } else if (cmd == "dr") {
    os << "  " << pad("points", 22) << r["points"].dump() << "\n\n  " << lpad("p", 5) << "  " << lpad("|Fix T^p|", 9)
       << "\n";
    for (auto const& row : r["periodic_table"]) {
      os << "  " << lpad(row["p"].dump(), 5) << "  " << lpad(row["size"].dump(), 9);
      if (row.contains("points")) os << "  " << set_text(row["points"]);
      os << "\n";
    }
    auto const& loc = r["noneffective_locus"];
    os << "\n  " << pad("script P", 22) << set_text(r["script_P"]) << "\n";
    os << "  " << pad("orbit meets P", 22) << set_text(loc["orbit_meets_P"]) << "\n";
    os << "  " << pad("eventually periodic", 22) << set_text(loc["eventually_periodic"]) << "\n";
    os << "  " << pad("agree", 22) << (loc["agree"].get<bool>() ? "yes" : "no") << "\n";
    os << "  " << pad("note", 22) << loc["note"].get<std::string>() << "\n";
    os << "  " << pad("components", 22) << r["components"].dump() << "\n";
    if (r.contains("invariant_sets")) {
      os << "  " << pad("invariant sets", 22) << r["invariant_sets"].size() << "\n";
      for (auto const& u : r["invariant_sets"]) os << "    " << set_text(u) << "\n";
    }
  }
  conventions_text(os, r);
  return os.str();
}

}  // namespace glab
