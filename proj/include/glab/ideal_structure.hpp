// Ideal structure of C*_r(G): sandwich sets, the triple parameterization
// of all ideals, the obstruction ideal, the orbit-space representation and
// exhaustive verifiers for the structure theorems.

#ifndef GLAB_IDEAL_STRUCTURE_HPP
#define GLAB_IDEAL_STRUCTURE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "glab/ideals.hpp"
#include "glab/structure.hpp"

namespace glab {

struct SandwichPair {
  UnitSubset lower;  // U: open support of I meet C(G^(0))
  UnitSubset upper;  // V: s(supp(I))
};

// (U, V, J): U <= V invariant, J an ideal of C*_r(G|_{V\U}) given as a
// block set of that algebra's decomposition.  For V = U the subquotient is
// the zero algebra and J is its zero ideal.
struct SandwichTriple {
  UnitSubset lower;
  UnitSubset upper;
  BlockSet j;

  bool operator==(SandwichTriple const&) const = default;
};

struct TheoremVerdict {
  std::string theorem;
  bool pass = true;
  std::size_t checked = 0;
  std::string detail;
  std::vector<std::string> witnesses;
};

struct VerificationReport {
  std::vector<TheoremVerdict> verdicts;
  bool all_pass() const;
};

inline std::vector<std::string> const& theorem_names() {
  static std::vector<std::string> const names{"sandwich", "bijection", "obstruction",
                                              "lattice",  "support",   "effective"};
  return names;
}

// Representation on l^2(G^(0)): pi(f) e_y = sum over gamma in G_y of
// f(gamma) e_{r(gamma)}.  This is the direct sum of the orbit-space
// representations on l^2([x]), one per orbit.
CMatrix orbit_representation(AlgebraElement const& f);

class IdealStructure {
 public:
  explicit IdealStructure(std::shared_ptr<CStarAlgebra const> algebra);
  IdealStructure(GroupoidPtr g, AlgebraOptions const& opts = {});

  CStarAlgebra const& algebra() const noexcept { return *algebra_; }
  FiniteGroupoid const& groupoid() const noexcept { return algebra_->groupoid(); }
  InvariantLattice const& invariant_lattice() const noexcept { return lattice_; }

  SandwichPair sandwich(Ideal const& ideal) const;
  // I_{G^(0) \ G^(0)_eff}.
  Ideal obstruction_ideal() const;
  UnitSubset noneffective_units() const;
  // Kernel of the orbit-space representation as a block set.
  Ideal collapse_kernel() const;

  // Algebra of the reduction G|_W for an invariant W, with the element
  // correspondence; cached per W.
  struct Subquotient {
    Reduction reduction;
    std::shared_ptr<CStarAlgebra const> algebra;
    // Parent block i -> block of the subquotient algebra, npos for blocks
    // living over orbits outside W.
    std::vector<std::size_t> block_map;
    // Ideals of the subquotient that are purely non-dynamical with full
    // support.
    std::vector<BlockSet> admissible;
  };
  Subquotient const& subquotient(UnitSubset const& w) const;

  // Throws PreconditionError naming the violated condition.
  void check_triple(SandwichTriple const& t) const;
  Ideal theta(SandwichTriple const& t) const;
  SandwichTriple theta_inverse(Ideal const& ideal) const;
  std::vector<SandwichTriple> enumerate_triples() const;

  // h = indicator of {x} for a bisection B avoiding the isotropy at x and f
  // supported on B; checks |h f h| <= zero_eps.
  AlgebraElement exel_witness(std::size_t unit_pos, std::vector<Index> const& bisection,
                              AlgebraElement const& f) const;

  TheoremVerdict verify_sandwich() const;
  TheoremVerdict verify_bijection() const;
  TheoremVerdict verify_obstruction() const;
  TheoremVerdict verify_lattice_iso() const;
  TheoremVerdict verify_support_invariance() const;
  TheoremVerdict verify_effective_uniqueness() const;
  // theorem is one of theorem_names() or "all".
  VerificationReport verify(std::string const& theorem = "all") const;

 private:
  // Restriction of a coefficient vector of G to the elements of a reduction.
  AlgebraElement restrict_element(AlgebraElement const& a, Subquotient const& sq) const;
  struct IdealProfile {
    UnitSubset diagonal_support;
    std::size_t diagonal_dimension = 0;
    ElementSubset support;
    UnitSubset source_of_support;
  };
  std::vector<IdealProfile> const& profiles() const;
  std::vector<Ideal> const& dynamical_ideals() const;

  std::shared_ptr<CStarAlgebra const> algebra_;
  InvariantLattice lattice_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<Subquotient>> subquotients_;
  mutable std::vector<IdealProfile> profiles_;
  mutable std::vector<Ideal> dynamical_;
  mutable bool have_profiles_ = false;
  mutable bool have_dynamical_ = false;
};

// "{a,b}" using unit names.
std::string format_units(FiniteGroupoid const& g, UnitSubset const& u);
// "{0,2}" using block indices.
std::string format_blocks(BlockSet const& b);

}  // namespace glab

#endif  // GLAB_IDEAL_STRUCTURE_HPP
