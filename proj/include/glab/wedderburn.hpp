// Artin-Wedderburn decomposition of the (finite-dimensional) groupoid
// C*-algebra into simple matrix blocks.

#ifndef GLAB_WEDDERBURN_HPP
#define GLAB_WEDDERBURN_HPP

#include <cstdint>
#include <vector>

#include "glab/algebra.hpp"

namespace glab {

inline constexpr std::uint64_t default_seed = 0xC0FFEE;

struct WedderburnOptions {
  TolerancePolicy tol{};
  std::uint64_t seed = default_seed;
  int max_retries = 8;
  bool matrix_units = true;
};

struct Block {
  AlgebraElement idempotent;  // minimal central projection
  std::size_t dimension = 0;  // block is M_dimension(C)
  // |sqrt(trace of the regular representation of the idempotent) - dimension|.
  double dimension_rounding_error = 0.0;
  // Matrix units e_jk in row-major order (dimension^2 entries); empty when
  // not requested.
  std::vector<AlgebraElement> matrix_units;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::uint64_t seed = default_seed;
  // Number of generic central elements drawn before all eigenvalues
  // separated.
  int attempts = 0;
  // Largest eigenpair residual |Mv - lv| / |M| observed.
  double max_eig_residual = 0.0;

  std::size_t size() const noexcept { return blocks.size(); }
  std::vector<std::size_t> dimensions() const;
};

// Basis of the center, obtained by solving the commutation equations
// c * delta_h = delta_h * c for every h.  Each equation identifies two
// coefficients or forces one to zero, so the solutions are exactly the
// functions constant on the classes returned here.
std::vector<std::vector<Index>> central_classes(FiniteGroupoid const& g);
std::vector<AlgebraElement> center_basis(GroupoidPtr const& g);

// Throws DecompositionError when the eigenvalues of the generic central
// element fail to separate after max_retries draws.
BlockDecomposition wedderburn(GroupoidPtr const& g, WedderburnOptions const& opts = {});

}  // namespace glab

#endif  // GLAB_WEDDERBURN_HPP
