// Analysis and verification reports, as JSON and as stable text tables.

#ifndef GLAB_REPORT_HPP
#define GLAB_REPORT_HPP

#include <string>

#include "glab/ideal_structure.hpp"
#include "glab/io.hpp"

namespace glab {

struct Caps {
  std::size_t max_elements = 512;
  std::size_t max_blocks = 20;
  std::size_t max_vertices = 64;
  std::size_t max_points = 1024;
};

struct ReportOptions {
  TolerancePolicy tol{};
  std::uint64_t seed = default_seed;
  Caps caps{};
  std::string theorem = "all";
};

// Builds and validates the groupoid; throws CapExceeded when |G| exceeds
// the cap.
GroupoidPtr build_groupoid(Instance const& inst, ReportOptions const& opts);
AlgebraOptions algebra_options(ReportOptions const& opts);

Json conventions();

Json analyze_report(Instance const& inst, ReportOptions const& opts);
// "pass" is true iff every verdict passes.
Json verify_report(Instance const& inst, ReportOptions const& opts);
Json graph_report(Instance const& inst, ReportOptions const& opts);
Json dr_report(Instance const& inst, ReportOptions const& opts);

std::string render_text(Json const& report);

}  // namespace glab

#endif  // GLAB_REPORT_HPP
