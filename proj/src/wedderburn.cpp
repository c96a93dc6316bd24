#include "glab/wedderburn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <tuple>

#include "glab/error.hpp"

namespace glab {

std::vector<std::size_t> BlockDecomposition::dimensions() const {
  std::vector<std::size_t> d;
  for (auto const& b : blocks) d.push_back(b.dimension);
  return d;
}

std::vector<std::vector<Index>> central_classes(FiniteGroupoid const& g) {
  std::size_t const n = g.size();
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  std::vector<bool> forced_zero(n, false);
  auto find = [&](Index a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Index h = 0; h < n; ++h) {
    Index const hinv = g.inverse(h);
    for (Index gamma = 0; gamma < n; ++gamma) {
      // (c * delta_h)(gamma) = c(gamma h^-1)   when s(gamma) = s(h)
      // (delta_h * c)(gamma) = c(h^-1 gamma)   when r(gamma) = r(h)
      bool const left = g.source(gamma) == g.source(h);
      bool const right = g.range(gamma) == g.range(h);
      if (left && right) {
        Index const a = find(g.compose(gamma, hinv));
        Index const b = find(g.compose(hinv, gamma));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      } else if (left) {
        forced_zero[g.compose(gamma, hinv)] = true;
      } else if (right) {
        forced_zero[g.compose(hinv, gamma)] = true;
      }
    }
  }
  std::vector<bool> dead(n, false);
  for (Index e = 0; e < n; ++e)
    if (forced_zero[e]) dead[find(e)] = true;
  std::vector<std::vector<Index>> classes;
  std::vector<std::size_t> slot(n, npos);
  for (Index e = 0; e < n; ++e) {
    Index const r = find(e);
    if (dead[r]) continue;
    if (slot[r] == npos) {
      slot[r] = classes.size();
      classes.emplace_back();
    }
    classes[slot[r]].push_back(e);
  }
  return classes;
}

std::vector<AlgebraElement> center_basis(GroupoidPtr const& g) {
  std::vector<AlgebraElement> basis;
  for (auto const& cls : central_classes(*g)) {
    AlgebraElement z(g);
    for (Index e : cls) z[e] = 1.0;
    basis.push_back(std::move(z));
  }
  return basis;
}

namespace {

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : eng_(seed) {}
  // Uniform on [-1, 1), computed from raw engine output so the stream is
  // identical across standard library implementations.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-52 - 1.0; }

 private:
  std::mt19937_64 eng_;
};

struct EigenCluster {
  double value = 0.0;
  // (unit position, eigenvector restricted to that fiber)
  std::vector<std::pair<std::size_t, CVector>> vectors;
};

struct SpectralData {
  std::vector<EigenCluster> clusters;
  double max_residual = 0.0;
};

// Eigen-decomposes every fiber representation of a self-adjoint element and
// groups all eigenpairs by eigenvalue.
SpectralData spectral_clusters(AlgebraElement const& h, TolerancePolicy const& tol) {
  auto const& G = *h.groupoid();
  struct Pair {
    double value;
    std::size_t unit;
    CVector vec;
  };
  std::vector<Pair> pairs;
  SpectralData out;
  double max_abs = 0.0;
  for (std::size_t k = 0; k < G.unit_count(); ++k) {
    auto const m = fiber_representation(h, k);
    auto const eig = hermitian_eigen(m, tol);
    double const mnorm = std::max({std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()), 1e-300});
    for (std::size_t c = 0; c < eig.eigenvalues.size(); ++c) {
      auto v = eig.eigenvectors.column(c);
      auto mv = m * std::span<Complex const>(v);
      for (std::size_t i = 0; i < v.size(); ++i) mv[i] -= eig.eigenvalues[c] * v[i];
      out.max_residual = std::max(out.max_residual, norm2(mv) / mnorm);
      max_abs = std::max(max_abs, std::abs(eig.eigenvalues[c]));
      pairs.push_back({eig.eigenvalues[c], k, std::move(v)});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](Pair const& a, Pair const& b) { return a.value < b.value; });
  double const gap = 1e-6 * std::max(1.0, max_abs);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i == 0 || pairs[i].value - pairs[i - 1].value > gap) {
      out.clusters.emplace_back();
      out.clusters.back().value = pairs[i].value;
    }
    out.clusters.back().vectors.emplace_back(pairs[i].unit, std::move(pairs[i].vec));
  }
  return out;
}

// The algebra element a with pi(a) = P, where P is the spectral projection
// onto the cluster: a = P applied to the indicator of the unit space.
AlgebraElement projection_element(GroupoidPtr const& g, EigenCluster const& cluster) {
  AlgebraElement p(g);
  for (auto const& [k, v] : cluster.vectors) {
    auto const fiber = g->source_fiber(k);
    std::size_t const unit_local =
        static_cast<std::size_t>(std::find(fiber.begin(), fiber.end(), g->unit(k)) - fiber.begin());
    Complex const w = std::conj(v[unit_local]);
    for (std::size_t i = 0; i < fiber.size(); ++i) p[fiber[i]] += v[i] * w;
  }
  return p;
}

AlgebraElement random_element(GroupoidPtr const& g, Stream& rng) {
  AlgebraElement a(g);
  for (std::size_t e = 0; e < a.size(); ++e) a[e] = Complex{rng.uniform(), rng.uniform()};
  return a;
}

double coefficient_sum(AlgebraElement const& a) {
  double s = 0.0;
  for (auto const& z : a.coefficients()) s += std::abs(z);
  return s;
}

// Matrix units for a block of dimension d >= 2, built from the spectral
// projections of a generic self-adjoint element compressed to the block.
std::vector<AlgebraElement> block_matrix_units(GroupoidPtr const& g, AlgebraElement const& central,
                                               std::size_t d, TolerancePolicy const& tol, Stream& rng,
                                               int max_retries) {
  if (d == 1) return {central};
  AlgebraElement const one = AlgebraElement::one(g);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    auto const a = random_element(g, rng);
    auto const x = a + involute(a);
    double const shift = -(coefficient_sum(x) + 1.0);
    // Compressed element plus a shift on the complement, which keeps the
    // complement's eigenvalue strictly below the block's spectrum.
    auto y = convolve(convolve(central, x), central) + Complex{shift} * (one - central);
    auto const spec = spectral_clusters(y, tol);
    std::vector<AlgebraElement> minimal;
    bool ok = true;
    for (auto const& c : spec.clusters) {
      if (c.value < shift + 0.5) continue;
      if (c.vectors.size() != d) {
        ok = false;
        break;
      }
      minimal.push_back(projection_element(g, c));
    }
    if (!ok || minimal.size() != d) continue;
    // e_{k1} = p_k w p_1 / sqrt(c) where (p_k w p_1)*(p_k w p_1) = c p_1.
    std::vector<AlgebraElement> column{minimal[0]};
    for (std::size_t k = 1; k < d && ok; ++k) {
      auto const w = random_element(g, rng);
      auto v = convolve(convolve(minimal[k], w), minimal[0]);
      double const c = regular_trace(convolve(involute(v), v)).real() / static_cast<double>(d);
      if (c < 1e-6) {
        ok = false;
        break;
      }
      v *= Complex{1.0 / std::sqrt(c)};
      column.push_back(std::move(v));
    }
    if (!ok) continue;
    std::vector<AlgebraElement> units;
    units.reserve(d * d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) units.push_back(convolve(column[j], involute(column[k])));
    return units;
  }
  throw DecompositionError("matrix units: generic element failed to split a block of dimension " +
                           std::to_string(d) + " after " + std::to_string(max_retries) + " draws");
}

auto canonical_key(Block const& b, FiniteGroupoid const& g) {
  std::size_t first_unit = npos;
  for (std::size_t k = 0; k < g.unit_count() && first_unit == npos; ++k)
    if (std::abs(b.idempotent[g.unit(k)]) > 1e-6) first_unit = k;
  std::vector<long long> coeffs;
  for (auto const& z : b.idempotent.coefficients()) {
    coeffs.push_back(std::llround(z.real() * 1e6));
    coeffs.push_back(std::llround(z.imag() * 1e6));
  }
  return std::make_tuple(first_unit, b.dimension, std::move(coeffs));
}

}  // namespace

BlockDecomposition wedderburn(GroupoidPtr const& g, WedderburnOptions const& opts) {
  opts.tol.check();
  BlockDecomposition out;
  out.seed = opts.seed;
  if (g->empty()) return out;
  auto const center = center_basis(g);
  std::size_t const b = center.size();
  Stream rng(opts.seed);
  SpectralData spec;
  bool separated = false;
  while (!separated && out.attempts < opts.max_retries) {
    ++out.attempts;
    AlgebraElement h(g);
    for (auto const& z : center) {
      auto const zs = involute(z);
      h += Complex{rng.uniform()} * (z + zs);
      h += Complex{0.0, rng.uniform()} * (z - zs);
    }
    spec = spectral_clusters(h, opts.tol);
    separated = spec.clusters.size() == b;
  }
  if (!separated) {
    throw DecompositionError("wedderburn: eigenvalues of the generic central element did not separate into " +
                             std::to_string(b) + " clusters after " + std::to_string(opts.max_retries) + " draws");
  }
  out.max_eig_residual = spec.max_residual;
  std::size_t total = 0;
  for (auto const& cluster : spec.clusters) {
    Block blk{projection_element(g, cluster), 0, 0.0, {}};
    double const tr = regular_trace(blk.idempotent).real();
    double const root = std::sqrt(std::max(0.0, tr));
    blk.dimension = static_cast<std::size_t>(std::llround(root));
    blk.dimension_rounding_error = std::abs(root - static_cast<double>(blk.dimension));
    if (blk.dimension == 0 || blk.dimension * blk.dimension != cluster.vectors.size()) {
      throw DecompositionError("wedderburn: block trace " + std::to_string(tr) + " inconsistent with multiplicity " +
                               std::to_string(cluster.vectors.size()));
    }
    total += blk.dimension * blk.dimension;
    out.blocks.push_back(std::move(blk));
  }
  if (total != g->size()) {
    throw DecompositionError("wedderburn: block dimensions square-sum to " + std::to_string(total) + ", not " +
                             std::to_string(g->size()));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [&](Block const& a, Block const& c) { return canonical_key(a, *g) < canonical_key(c, *g); });
  if (opts.matrix_units) {
    for (auto& blk : out.blocks) {
      blk.matrix_units = block_matrix_units(g, blk.idempotent, blk.dimension, opts.tol, rng, opts.max_retries);
    }
  }
  return out;
}

}  // namespace glab
