// glab: command-line front end.
//
// Exit codes: 0 success, 1 theorem failure, 2 input error, 3 cap exceeded.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "glab/error.hpp"
#include "glab/random.hpp"
#include "glab/report.hpp"

namespace fs = std::filesystem;
using namespace glab;

namespace {

enum Exit { ok = 0, failure = 1, input_error = 2, cap_exceeded = 3 };

struct Outcome {
  int code = ok;
  Json report;
  std::string error;
};

template <class F>
Outcome guarded(F&& f) {
  Outcome o;
  try {
    o.report = f();
  } catch (CapExceeded const& e) {
    o.code = cap_exceeded;
    o.error = e.what();
  } catch (DecompositionError const& e) {
    o.code = failure;
    o.error = e.what();
  } catch (Error const& e) {
    o.code = input_error;
    o.error = e.what();
  }
  return o;
}

void emit(Outcome const& o, std::string const& format) {
  if (!o.error.empty()) {
    std::cerr << "glab: error: " << o.error << "\n";
    return;
  }
  std::cout << (format == "json" ? dump(o.report) : render_text(o.report));
}

std::uint64_t env_seed() {
  char const* s = std::getenv("GLAB_SEED");
  if (s == nullptr || *s == '\0') return default_seed;
  char* end = nullptr;
  auto const v = std::strtoull(s, &end, 0);
  if (end == s || *end != '\0') {
    std::cerr << "glab: warning: ignoring malformed GLAB_SEED '" << s << "'\n";
    return default_seed;
  }
  return v;
}

int run_batch(fs::path const& dir, ReportOptions const& opts, std::string const& format, unsigned jobs) {
  if (!fs::is_directory(dir)) {
    std::cerr << "glab: error: " << dir.string() << " is not a directory\n";
    return input_error;
  }
  std::vector<fs::path> files;
  for (auto const& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Outcome> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      results[i] = guarded([&] { return verify_report(load_instance(files[i]), opts); });
      if (results[i].error.empty() && !results[i].report["pass"].get<bool>()) results[i].code = failure;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int code = ok;
  bool any_failure = false;
  Json batch = Json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    auto const& r = results[i];
    any_failure = any_failure || r.code == failure;
    code = std::max(code, r.code);
    if (format == "json") {
      Json entry = {{"file", files[i].filename().string()}, {"exit", r.code}};
      if (r.error.empty()) entry["report"] = r.report;
      else entry["error"] = r.error;
      batch.push_back(std::move(entry));
    } else {
      std::cout << "== " << files[i].filename().string() << " ==\n";
      if (r.error.empty()) std::cout << render_text(r.report) << "\n";
      else std::cout << "error: " << r.error << "\n\n";
    }
  }
  if (format == "json") std::cout << dump(Json{{"batch", std::move(batch)}});
  return any_failure ? failure : code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal structure of finite groupoid C*-algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  ReportOptions opts;
  opts.seed = env_seed();
  Caps const defaults;
  std::string format = "text";
  double tolerance = opts.tol.zero_eps;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tolerance", tolerance, "zero_eps threshold")->check(CLI::PositiveNumber);
  app.add_option("--max-elements", opts.caps.max_elements, "Cap on groupoid size");
  app.add_option("--max-blocks", opts.caps.max_blocks, "Cap on Wedderburn blocks");
  app.add_option("--max-vertices", opts.caps.max_vertices, "Cap on graph vertices");
  app.add_option("--max-points", opts.caps.max_points, "Cap on dynamical system size");

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "Blocks, ideals, sandwich sets, triples, J^ob");
  analyze->add_option("file", file, "Instance file")->required();

  std::string theorem = "all";
  std::string batch_dir;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* verify = app.add_subcommand("verify", "Exhaustively verify the structure theorems");
  auto* verify_file = verify->add_option("file", file, "Instance file");
  verify->add_option("--theorem", theorem, "Theorem to check")
      ->check(CLI::IsMember({"sandwich", "bijection", "obstruction", "lattice", "support", "effective", "all"}));
  auto* batch_opt = verify->add_option("--batch", batch_dir, "Verify every .json file in a directory");
  verify->add_option("--jobs", jobs, "Worker threads for --batch");
  verify_file->excludes(batch_opt);

  std::string type;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::size_t loops = 0;
  auto* random = app.add_subcommand("random", "Emit a seeded random instance");
  random->add_option("--type", type, "Instance type")->required()->check(CLI::IsMember(random_types()));
  random->add_option("--size", size, "Instance size")->required();
  random->add_option("--seed", seed, "Generator seed")->required();
  random->add_option("--loops", loops, "Extra loops (graph)");

  auto* graph = app.add_subcommand("graph", "Graph cycles, condition L, saturated hereditary lattice");
  graph->add_option("file", file, "Graph file")->required();
  auto* dr = app.add_subcommand("dr", "Periodic loci and the non-effective locus of (X, T)");
  dr->add_option("file", file, "Dynamical system file")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return input_error;
  }

  opts.tol.zero_eps = tolerance;
  opts.theorem = theorem;
  if (opts.caps.max_elements != defaults.max_elements || opts.caps.max_blocks != defaults.max_blocks ||
      opts.caps.max_vertices != defaults.max_vertices || opts.caps.max_points != defaults.max_points) {
    std::cerr << "glab: warning: caps overridden (elements " << opts.caps.max_elements << ", blocks "
              << opts.caps.max_blocks << ", vertices " << opts.caps.max_vertices << ", points "
              << opts.caps.max_points << "); runtime grows as 2^blocks\n";
  }

  if (*analyze) {
    auto const o = guarded([&] { return analyze_report(load_instance(file), opts); });
    emit(o, format);
    return o.code;
  }
  if (*verify) {
    if (!batch_dir.empty()) return run_batch(batch_dir, opts, format, jobs);
    if (file.empty()) {
      std::cerr << "glab: error: verify needs a file or --batch <dir>\n";
      return input_error;
    }
    auto o = guarded([&] { return verify_report(load_instance(file), opts); });
    emit(o, format);
    if (o.error.empty() && !o.report["pass"].get<bool>()) o.code = failure;
    return o.code;
  }
  if (*random) {
    if (type == "graph" && size > opts.caps.max_vertices) {
      std::cerr << "glab: error: " << size << " vertices exceed the cap of " << opts.caps.max_vertices << "\n";
      return cap_exceeded;
    }
    if (type == "dynsys" && size > opts.caps.max_points) {
      std::cerr << "glab: error: " << size << " points exceed the cap of " << opts.caps.max_points << "\n";
      return cap_exceeded;
    }
    RandomOptions ro;
    ro.loops = loops;
    ro.max_elements = opts.caps.max_elements;
    auto const o = guarded([&] { return to_json(random_instance(type, size, seed, ro)); });
    if (!o.error.empty()) {
      std::cerr << "glab: error: " << o.error << "\n";
      return o.code;
    }
    std::cout << dump(o.report);
    return ok;
  }
  if (*graph) {
    auto const o = guarded([&] { return graph_report(load_instance(file), opts); });
    emit(o, format);
    if (o.error.empty() && !o.report["obstruction_empty_iff_condition_L"].get<bool>()) return failure;
    return o.code;
  }
  if (*dr) {
    auto const o = guarded([&] { return dr_report(load_instance(file), opts); });
    emit(o, format);
    if (o.error.empty() && !o.report["noneffective_locus"]["agree"].get<bool>()) return failure;
    return o.code;
  }
  return input_error;
}
