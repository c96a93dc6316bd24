// Finite groupoids as explicit tables.
//
// A finite Hausdorff space is discrete, so a finite groupoid carries the
// discrete topology: every subset is open and every set on which r and s are
// injective is an open bisection.

#ifndef GLAB_GROUPOID_HPP
#define GLAB_GROUPOID_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace glab {

using Index = std::size_t;
inline constexpr Index npos = std::numeric_limits<Index>::max();

// Subset of the units of a groupoid, indexed by unit position (not by
// element index).
using UnitSubset = boost::dynamic_bitset<>;

// Raw, unvalidated groupoid data.  Element i has name names[i]; source,
// range and inverse map element indices to element indices; compose is an
// n*n row-major table holding npos where the product is undefined.
struct GroupoidTables {
  std::vector<std::string> names;
  std::vector<Index> units;
  std::vector<Index> source;
  std::vector<Index> range;
  std::vector<Index> inverse;
  std::vector<Index> compose;
};

struct ValidationReport {
  bool ok = true;
  std::string axiom;                    // first violated axiom
  std::vector<std::string> witnesses;   // element names involved

  std::string message() const;
};

// Checks every groupoid axiom in a fixed order and reports the first
// violation with its witnesses.
ValidationReport validate(GroupoidTables const& tables);

class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;  // the empty groupoid

  // Throws ValidationError when validate() fails.
  static FiniteGroupoid from_tables(GroupoidTables tables);

  std::size_t size() const noexcept { return t_.names.size(); }
  std::size_t unit_count() const noexcept { return t_.units.size(); }
  bool empty() const noexcept { return size() == 0; }

  // Element index of the unit at position k.
  Index unit(std::size_t k) const { return t_.units[k]; }
  std::vector<Index> const& units() const noexcept { return t_.units; }
  // Position of element e among the units, or npos.
  std::size_t unit_position(Index e) const { return unit_pos_[e]; }
  bool is_unit(Index e) const { return unit_pos_[e] != npos; }

  Index source(Index e) const { return t_.source[e]; }
  Index range(Index e) const { return t_.range[e]; }
  // Unit positions of s(e) and r(e).
  std::size_t source_pos(Index e) const { return unit_pos_[t_.source[e]]; }
  std::size_t range_pos(Index e) const { return unit_pos_[t_.range[e]]; }
  Index inverse(Index e) const { return t_.inverse[e]; }
  // Product ab, or npos when s(a) != r(b).
  Index compose(Index a, Index b) const { return t_.compose[a * size() + b]; }

  std::string const& name(Index e) const { return t_.names[e]; }
  std::vector<std::string> const& names() const noexcept { return t_.names; }
  Index index_of(std::string_view name) const;

  // G_x = s^{-1}(x) and G^x = r^{-1}(x) for the unit at position k.
  std::span<Index const> source_fiber(std::size_t k) const { return source_fibers_[k]; }
  std::span<Index const> range_fiber(std::size_t k) const { return range_fibers_[k]; }

  bool is_isotropy(Index e) const { return t_.source[e] == t_.range[e]; }

  GroupoidTables const& tables() const noexcept { return t_; }

  UnitSubset no_units() const { return UnitSubset(unit_count()); }
  UnitSubset all_units() const { return UnitSubset(unit_count()).set(); }

  bool operator==(FiniteGroupoid const& other) const;

 private:
  explicit FiniteGroupoid(GroupoidTables tables);

  GroupoidTables t_;
  std::vector<std::size_t> unit_pos_;
  std::vector<std::vector<Index>> source_fibers_;
  std::vector<std::vector<Index>> range_fibers_;
  std::unordered_map<std::string, Index> by_name_;
};

ValidationReport validate(FiniteGroupoid const& g);

// Assembles tables from source/range/inverse and a product callback that is
// only invoked on composable pairs.  Units are the elements e with
// source(e) == e.
template <typename Product>
GroupoidTables make_tables(std::vector<std::string> names, std::vector<Index> source, std::vector<Index> range,
                           std::vector<Index> inverse, Product&& product) {
  GroupoidTables t;
  std::size_t const n = names.size();
  t.names = std::move(names);
  t.source = std::move(source);
  t.range = std::move(range);
  t.inverse = std::move(inverse);
  for (Index e = 0; e < n; ++e)
    if (t.source[e] == e) t.units.push_back(e);
  t.compose.assign(n * n, npos);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (t.source[a] == t.range[b]) t.compose[a * n + b] = product(a, b);
  return t;
}

}  // namespace glab

#endif  // GLAB_GROUPOID_HPP
