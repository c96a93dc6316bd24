// Seeded instance generators.  Output depends only on (type, size, seed,
// options); the engine's raw output is used directly so the stream does not
// depend on the standard library's distributions.

#ifndef GLAB_RANDOM_HPP
#define GLAB_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "glab/io.hpp"

namespace glab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // Uniform in [0, n).
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(eng_() % n); }
  // Uniform in [0, 1).
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 eng_;
};

struct RandomOptions {
  std::size_t loops = 0;           // graph: extra loops
  std::size_t max_elements = 512;  // groupoid kinds: bound on |G|
  std::size_t max_group_order = 24;
};

inline std::vector<std::string> const& random_types() {
  static std::vector<std::string> const t{"action", "partial-action", "group-bundle", "pair", "graph", "dynsys"};
  return t;
}

// Throws PreconditionError for unknown types or unsatisfiable parameters.
Instance random_instance(std::string const& type, std::size_t size, std::uint64_t seed,
                         RandomOptions const& opts = {});

// Building blocks, exposed for tests.
FiniteGroup random_group(Rng& rng, std::size_t max_order);
// Disjoint union of coset actions G/H over random subgroups H, on exactly
// n points.
GroupActionSpec random_action(Rng& rng, FiniteGroup const& g, std::size_t n);
// A random global action on at least n points restricted to n of them.
PartialActionSpec random_partial_action(Rng& rng, FiniteGroup const& g, std::size_t n);
DirectedGraph random_graph(Rng& rng, std::size_t n, std::size_t loops);
FiniteDynSystem random_dynsys(Rng& rng, std::size_t n);

}  // namespace glab

#endif  // GLAB_RANDOM_HPP
