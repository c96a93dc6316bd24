// Finite Deaconu-Renault systems (X, T) and directed graphs.
//
// Path convention: an infinite path is e1 e2 ... with dst(e_i) = src(e_{i+1})
// and the shift deletes e1.  Under this convention the obstruction lives on
// cycles without exits.

#ifndef GLAB_DYNAMICS_HPP
#define GLAB_DYNAMICS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace glab {

using PointSet = boost::dynamic_bitset<>;
using VertexSet = boost::dynamic_bitset<>;

struct FiniteDynSystem {
  std::vector<std::string> points;
  std::vector<std::size_t> map;  // T(x) = map[x]

  std::size_t size() const noexcept { return map.size(); }
  bool operator==(FiniteDynSystem const&) const = default;
};

// Throws ValidationError if T is not a total map on X.
void check(FiniteDynSystem const& s);
FiniteDynSystem make_dynsys(std::vector<std::size_t> map);

// Fix(T^p), p >= 1.
PointSet periodic_locus(FiniteDynSystem const& s, std::size_t p);
// Union of Fix(T^p) for 1 <= p <= |X|.
PointSet script_p(FiniteDynSystem const& s);

struct NoneffectiveLocus {
  PointSet orbit_meets_p;        // x with orb_T(x) meeting script P
  PointSet eventually_periodic;  // x with nontrivial isotropy in G_T
  bool agree = true;
};

NoneffectiveLocus noneffective_locus(FiniteDynSystem const& s);

// Classes of the equivalence generated by x ~ T(x).
std::vector<std::vector<std::size_t>> dr_components(FiniteDynSystem const& s);
// Sets closed under T and T^-1, ordered by component mask.  Throws
// CapExceeded when there are more than max_components components.
std::vector<PointSet> dr_invariant_sets(FiniteDynSystem const& s, std::size_t max_components = 20);

struct DirectedGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (src, dst)

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  bool operator==(DirectedGraph const&) const = default;
};

void check(DirectedGraph const& g);
std::vector<std::size_t> out_degrees(DirectedGraph const& g);

// A simple cycle as edge indices, rotated to start at its smallest vertex.
using Cycle = std::vector<std::size_t>;

// All simple cycles, ordered by (start vertex, edge sequence).  Throws
// CapExceeded after max_cycles.
std::vector<Cycle> graph_cycles(DirectedGraph const& g, std::size_t max_cycles = 200000);
std::vector<std::size_t> cycle_vertices(DirectedGraph const& g, Cycle const& c);
// Some cycle vertex emits an edge other than the cycle's next edge.
bool cycle_has_exit(DirectedGraph const& g, Cycle const& c);
// Every cycle has an exit.
bool condition_l(DirectedGraph const& g);
// Vertices on cycles without exits, found by following out-degree-one
// vertices.
VertexSet exitless_cycle_vertices(DirectedGraph const& g);

bool is_hereditary(DirectedGraph const& g, VertexSet const& h);
bool is_saturated(DirectedGraph const& g, VertexSet const& h);
VertexSet saturated_hereditary_closure(DirectedGraph const& g, VertexSet const& s);

// Throws UnsupportedInput naming the first sink.
void require_no_sinks(DirectedGraph const& g);
// All saturated hereditary sets in increasing order of their bit pattern.
// Throws CapExceeded after max_sets.
std::vector<VertexSet> hereditary_saturated_lattice(DirectedGraph const& g, std::size_t max_sets = 1u << 20);
VertexSet obstruction_vertex_set(DirectedGraph const& g);

std::string format_points(std::vector<std::string> const& names, boost::dynamic_bitset<> const& s);

}  // namespace glab

#endif  // GLAB_DYNAMICS_HPP
