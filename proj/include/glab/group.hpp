// Finite groups given by Cayley tables.  Used as inputs to the action,
// partial-action and group-bundle groupoid constructors.

#ifndef GLAB_GROUP_HPP
#define GLAB_GROUP_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace glab {

class FiniteGroup {
 public:
  // Validates closure, associativity, a two-sided identity and inverses;
  // throws SpecError naming the failure.  Element names default to g0, g1, ...
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  // Symmetries of the k-gon, order 2k (k >= 1).
  static FiniteGroup dihedral(std::size_t k);
  // All permutations of {0..k-1}, order k!.
  static FiniteGroup symmetric(std::size_t k);

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::string const& name(std::size_t a) const { return names_[a]; }
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::vector<std::vector<std::size_t>> const& table() const noexcept { return table_; }

  // Conjugacy classes as sorted element lists, ordered by smallest member.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;
  // Subgroup generated by the given elements (sorted).
  std::vector<std::size_t> generated_subgroup(std::vector<std::size_t> const& gens) const;

  // Human-readable family tag for reports ("table" when built from a table).
  std::string const& family() const noexcept { return family_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> names_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::string family_ = "table";
};

}  // namespace glab

#endif  // GLAB_GROUP_HPP
