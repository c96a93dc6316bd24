// Python bindings: report-level entry points exchange JSON text; a few core
// types are exposed directly.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "glab/error.hpp"
#include "glab/random.hpp"
#include "glab/report.hpp"
#include "glab/structure.hpp"

namespace py = pybind11;
using namespace glab;

namespace {

ReportOptions options(std::optional<double> tolerance, std::optional<std::uint64_t> seed, std::size_t max_elements,
                      std::size_t max_blocks, std::string theorem = "all") {
  ReportOptions o;
  if (tolerance) o.tol.zero_eps = *tolerance;
  if (seed) o.seed = *seed;
  o.caps.max_elements = max_elements;
  o.caps.max_blocks = max_blocks;
  o.theorem = std::move(theorem);
  return o;
}

template <class F>
std::string run(std::string const& text, F&& f) {
  auto const inst = parse_instance(text);
  Json report;
  {
    py::gil_scoped_release release;
    report = f(inst);
  }
  return dump(report);
}

std::vector<std::string> unit_names(FiniteGroupoid const& g, UnitSubset const& u) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < g.unit_count(); ++k)
    if (u.test(k)) out.push_back(g.name(g.unit(k)));
  return out;
}

std::vector<std::size_t> block_indices(BlockSet const& b) {
  std::vector<std::size_t> out;
  for (auto i = b.find_first(); i != BlockSet::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

GroupoidPtr groupoid_from_text(std::string const& text) {
  auto const inst = parse_instance(text);
  if (!inst.is_groupoid()) throw PreconditionError("instance of kind '" + inst.kind + "' is not a groupoid");
  return std::make_shared<FiniteGroupoid const>(construct(inst.groupoid_spec()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ideal structure of finite groupoid C*-algebras";

  static py::exception<Error> error(m, "GlabError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", error.ptr());
  static py::exception<DecompositionError> decomposition_error(m, "DecompositionError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (ParseError const& e) {
      py::set_error(parse_error, e.what());
    } catch (CapExceeded const& e) {
      py::set_error(cap_exceeded, e.what());
    } catch (DecompositionError const& e) {
      py::set_error(decomposition_error, e.what());
    } catch (Error const& e) {
      py::set_error(error, e.what());
    }
  });

  m.attr("default_seed") = default_seed;

  m.def(
      "analyze",
      [](std::string const& text, std::optional<double> tolerance, std::optional<std::uint64_t> seed,
         std::size_t max_elements, std::size_t max_blocks) {
        auto const o = options(tolerance, seed, max_elements, max_blocks);
        return run(text, [&](Instance const& i) { return analyze_report(i, o); });
      },
      py::arg("instance"), py::kw_only(), py::arg("tolerance") = py::none(), py::arg("seed") = py::none(),
      py::arg("max_elements") = Caps{}.max_elements, py::arg("max_blocks") = Caps{}.max_blocks,
      "Analysis report for an instance given as JSON text; returns JSON text.");
  m.def(
      "verify",
      [](std::string const& text, std::string const& theorem, std::optional<double> tolerance,
         std::optional<std::uint64_t> seed, std::size_t max_elements, std::size_t max_blocks) {
        auto const o = options(tolerance, seed, max_elements, max_blocks, theorem);
        return run(text, [&](Instance const& i) { return verify_report(i, o); });
      },
      py::arg("instance"), py::kw_only(), py::arg("theorem") = "all", py::arg("tolerance") = py::none(),
      py::arg("seed") = py::none(), py::arg("max_elements") = Caps{}.max_elements,
      py::arg("max_blocks") = Caps{}.max_blocks);
  m.def(
      "graph",
      [](std::string const& text, std::size_t max_vertices) {
        ReportOptions o;
        o.caps.max_vertices = max_vertices;
        return run(text, [&](Instance const& i) { return graph_report(i, o); });
      },
      py::arg("instance"), py::kw_only(), py::arg("max_vertices") = Caps{}.max_vertices);
  m.def(
      "dr",
      [](std::string const& text, std::size_t max_points) {
        ReportOptions o;
        o.caps.max_points = max_points;
        return run(text, [&](Instance const& i) { return dr_report(i, o); });
      },
      py::arg("instance"), py::kw_only(), py::arg("max_points") = Caps{}.max_points);
  m.def(
      "random",
      [](std::string const& type, std::size_t size, std::uint64_t seed, std::size_t loops) {
        RandomOptions o;
        o.loops = loops;
        return dump(to_json(random_instance(type, size, seed, o)));
      },
      py::arg("type"), py::arg("size"), py::arg("seed"), py::kw_only(), py::arg("loops") = 0);

  m.def(
      "hermitian_eigen",
      [](std::vector<std::vector<Complex>> const& rows) {
        auto const e = hermitian_eigen(CMatrix::from_rows(rows));
        std::vector<std::vector<Complex>> vecs;
        for (std::size_t k = 0; k < e.eigenvectors.cols(); ++k) vecs.push_back(e.eigenvectors.column(k));
        return py::make_tuple(e.eigenvalues, vecs);
      },
      py::arg("matrix"), "Eigenvalues (ascending) and eigenvectors of a Hermitian matrix given as rows.");
  m.def(
      "operator_norm", [](std::vector<std::vector<Complex>> const& rows) { return operator_norm(CMatrix::from_rows(rows)); },
      py::arg("matrix"));

  py::class_<FiniteGroupoid, std::shared_ptr<FiniteGroupoid>>(m, "Groupoid")
      .def(py::init([](std::string const& text) {
             return std::const_pointer_cast<FiniteGroupoid>(groupoid_from_text(text));
           }),
           py::arg("instance"))
      .def_property_readonly("size", &FiniteGroupoid::size)
      .def_property_readonly("unit_count", &FiniteGroupoid::unit_count)
      .def_property_readonly("names", &FiniteGroupoid::names)
      .def("orbits",
           [](FiniteGroupoid const& g) {
             std::vector<std::vector<std::string>> out;
             for (auto const& o : orbits(g).orbits) {
               std::vector<std::string> names;
               for (auto k : o) names.push_back(g.name(g.unit(k)));
               out.push_back(names);
             }
             return out;
           })
      .def("effective_units", [](FiniteGroupoid const& g) { return unit_names(g, effective_units(g)); })
      .def("invariant_subsets",
           [](FiniteGroupoid const& g) {
             std::vector<std::vector<std::string>> out;
             for (auto const& u : invariant_subsets(g)) out.push_back(unit_names(g, u));
             return out;
           })
      .def("__len__", &FiniteGroupoid::size);

  py::class_<IdealStructure>(m, "IdealStructure")
      .def(py::init([](std::shared_ptr<FiniteGroupoid> const& g, std::optional<std::uint64_t> seed) {
             AlgebraOptions o;
             if (seed) o.wedderburn.seed = *seed;
             py::gil_scoped_release release;
             return std::make_unique<IdealStructure>(std::const_pointer_cast<FiniteGroupoid const>(g), o);
           }),
           py::arg("groupoid"), py::kw_only(), py::arg("seed") = py::none())
      .def_property_readonly("block_dimensions",
                             [](IdealStructure const& s) { return s.algebra().decomposition().dimensions(); })
      .def("ideals",
           [](IdealStructure const& s) {
             std::vector<std::vector<std::size_t>> out;
             for (auto const& i : s.algebra().all_ideals()) out.push_back(block_indices(i.blocks));
             return out;
           })
      .def("obstruction_ideal", [](IdealStructure const& s) { return block_indices(s.obstruction_ideal().blocks); })
      .def("collapse_kernel", [](IdealStructure const& s) { return block_indices(s.collapse_kernel().blocks); })
      .def("triple_count",
           [](IdealStructure const& s) {
             py::gil_scoped_release release;
             return s.enumerate_triples().size();
           })
      .def("verify", [](IdealStructure const& s, std::string const& theorem) {
        py::gil_scoped_release release;
        return s.verify(theorem).all_pass();
      }, py::arg("theorem") = "all");
}
