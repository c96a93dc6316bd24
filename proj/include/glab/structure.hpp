// Set-theoretic dynamics of a finite groupoid: orbits, invariant unit sets,
// reductions, isotropy and effectiveness.
//
// All notions are taken in the discrete topology.  In particular the
// interior of the isotropy bundle is the isotropy bundle itself, so a unit
// is effective exactly when its isotropy group is trivial.

#ifndef GLAB_STRUCTURE_HPP
#define GLAB_STRUCTURE_HPP

#include <cstddef>
#include <vector>

#include "glab/groupoid.hpp"

namespace glab {

struct OrbitPartition {
  // Orbits as sorted lists of unit positions, ordered by smallest member.
  std::vector<std::vector<std::size_t>> orbits;
  // orbit_of[k] is the orbit containing the unit at position k.
  std::vector<std::size_t> orbit_of;

  std::size_t size() const noexcept { return orbits.size(); }
  // Union of the orbits selected by mask bit i <-> orbit i.
  UnitSubset union_of(std::uint64_t mask, std::size_t unit_count) const;
};

OrbitPartition orbits(FiniteGroupoid const& g);

// r(G U) is contained in U.
bool is_invariant(FiniteGroupoid const& g, UnitSubset const& u);

// The lattice of (open) invariant unit sets.  Member i is the union of the
// orbits selected by the bits of i, so there are 2^orbits members and
// member_index(a | b) == member_index(a) | member_index(b).
class InvariantLattice {
 public:
  InvariantLattice(FiniteGroupoid const& g, std::size_t max_orbits = 24);

  std::size_t size() const noexcept { return members_.size(); }
  UnitSubset const& operator[](std::size_t i) const { return members_[i]; }
  std::vector<UnitSubset> const& members() const noexcept { return members_; }
  OrbitPartition const& partition() const noexcept { return partition_; }
  // Index of an invariant set; throws PreconditionError if u is not invariant.
  std::size_t index_of(UnitSubset const& u) const;

 private:
  OrbitPartition partition_;
  std::vector<UnitSubset> members_;
};

std::vector<UnitSubset> invariant_subsets(FiniteGroupoid const& g);

// Reduction G|_U with the element correspondence to the parent.
struct Reduction {
  FiniteGroupoid groupoid;
  std::vector<Index> to_parent;    // child element -> parent element
  std::vector<Index> from_parent;  // parent element -> child element or npos
  std::vector<std::size_t> unit_to_parent;  // child unit position -> parent unit position
};

Reduction reduce(FiniteGroupoid const& g, UnitSubset const& u);
FiniteGroupoid restrict(FiniteGroupoid const& g, UnitSubset const& u);

struct IsotropyGroup {
  std::size_t base = 0;        // unit position
  std::vector<Index> elements;  // the base unit first
};

IsotropyGroup isotropy_group(FiniteGroupoid const& g, std::size_t unit_pos);

bool is_effective_at(FiniteGroupoid const& g, std::size_t unit_pos);
UnitSubset effective_units(FiniteGroupoid const& g);
// s(I(G) \ G^(0)), computed directly from the isotropy bundle.
UnitSubset isotropy_sources(FiniteGroupoid const& g);

// Joint effectiveness at a unit.  Uses the singleton-bisection reduction;
// for groupoids with at most joint_search_limit elements it additionally
// runs an exhaustive search over all bisections through each isotropy element and
// throws std::logic_error if the two disagree.
inline constexpr std::size_t joint_search_limit = 12;
bool is_jointly_effective_at(FiniteGroupoid const& g, std::size_t unit_pos);
// The exhaustive bisection search on its own.
bool jointly_effective_by_search(FiniteGroupoid const& g, std::size_t unit_pos);

bool is_bisection(FiniteGroupoid const& g, std::vector<Index> const& elements);

}  // namespace glab

#endif  // GLAB_STRUCTURE_HPP
