// Two-sided ideals of C*_r(G) for a finite groupoid G.
//
// Ideals of a finite-dimensional C*-algebra are exactly the sums of its
// simple blocks, so an ideal is stored canonically as a set of block
// indices into the algebra's BlockDecomposition.  Subspace questions
// (diagonal part, support) are answered from the central projections.

#ifndef GLAB_IDEALS_HPP
#define GLAB_IDEALS_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "glab/algebra.hpp"
#include "glab/wedderburn.hpp"

namespace glab {

using BlockSet = boost::dynamic_bitset<>;
using ElementSubset = boost::dynamic_bitset<>;

struct Ideal {
  BlockSet blocks;

  bool is_zero() const { return blocks.none(); }
  bool operator==(Ideal const&) const = default;
  bool contained_in(Ideal const& other) const { return blocks.is_subset_of(other.blocks); }
  friend Ideal operator&(Ideal const& a, Ideal const& b) { return {a.blocks & b.blocks}; }
  friend Ideal operator|(Ideal const& a, Ideal const& b) { return {a.blocks | b.blocks}; }
};

struct AlgebraOptions {
  WedderburnOptions wedderburn{};
  std::size_t max_blocks = 20;  // guard for all_ideals
};

class CStarAlgebra {
 public:
  explicit CStarAlgebra(GroupoidPtr g, AlgebraOptions const& opts = {});

  GroupoidPtr const& groupoid_ptr() const noexcept { return g_; }
  FiniteGroupoid const& groupoid() const noexcept { return *g_; }
  TolerancePolicy const& tolerance() const noexcept { return opts_.wedderburn.tol; }
  AlgebraOptions const& options() const noexcept { return opts_; }
  BlockDecomposition const& decomposition() const noexcept { return dec_; }
  std::size_t block_count() const noexcept { return dec_.size(); }

  // Orbit index (see orbits()) over which block i lives.
  std::size_t block_orbit(std::size_t i) const { return block_orbit_[i]; }

  Ideal zero_ideal() const { return {BlockSet(block_count())}; }
  Ideal full_ideal() const { return {BlockSet(block_count()).set()}; }
  Ideal ideal_from_mask(std::uint64_t mask) const;

  // All 2^b ideals ordered by block mask; throws CapExceeded when
  // b > max_blocks.
  std::vector<Ideal> all_ideals() const;

  // Central projection onto the blocks of I.
  AlgebraElement central_projection(Ideal const& ideal) const;
  bool contains(Ideal const& ideal, AlgebraElement const& a) const;
  // The ideal generated by a: the blocks on which a is nonzero.
  Ideal generated_ideal(AlgebraElement const& a) const;
  // Spanning set {e_I * delta_g}, each normalized to unit coefficient norm;
  // zero products are dropped.
  std::vector<CVector> spanning_set(Ideal const& ideal) const;

  // Basis of I intersected with the diagonal C(G^(0)), as coefficient
  // vectors over all elements.
  std::vector<CVector> diagonal_part(Ideal const& ideal) const;
  // Open support of the diagonal part: the units where some diagonal
  // element of I is nonzero.
  UnitSubset diagonal_support(Ideal const& ideal) const;
  // supp(I) = {gamma : j(a)(gamma) != 0 for some a in I}.
  ElementSubset support(Ideal const& ideal) const;
  // s(supp(I)).
  UnitSubset source_of_support(Ideal const& ideal) const;

  // I_U, the ideal generated by the functions supported in U.  Throws
  // PreconditionError when U is not invariant.
  Ideal dynamical_ideal_of(UnitSubset const& u) const;
  bool is_dynamical(Ideal const& ideal) const;
  // I meets the diagonal trivially and is nonzero.
  bool is_purely_non_dynamical(Ideal const& ideal) const;

  double norm(AlgebraElement const& a) const { return glab::norm(a, tolerance()); }

  // Elements of G|_U, as a subset of the elements of G.
  ElementSubset reduction_elements(UnitSubset const& u) const;

 private:
  double zero_eps() const { return opts_.wedderburn.tol.zero_eps; }

  GroupoidPtr g_;
  AlgebraOptions opts_;
  BlockDecomposition dec_;
  std::vector<std::size_t> block_orbit_;
};

}  // namespace glab

#endif  // GLAB_IDEALS_HPP
