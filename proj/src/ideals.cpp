#include "glab/ideals.hpp"

#include <algorithm>
#include <cmath>

#include "glab/error.hpp"
#include "glab/structure.hpp"

namespace glab {

CStarAlgebra::CStarAlgebra(GroupoidPtr g, AlgebraOptions const& opts)
    : g_(std::move(g)), opts_(opts), dec_(wedderburn(g_, opts.wedderburn)) {
  auto const part = orbits(*g_);
  for (auto const& blk : dec_.blocks) {
    std::size_t orbit = npos;
    for (std::size_t k = 0; k < g_->unit_count() && orbit == npos; ++k)
      if (std::abs(blk.idempotent[g_->unit(k)]) > zero_eps()) orbit = part.orbit_of[k];
    if (orbit == npos) throw DecompositionError("block idempotent vanishes on every unit");
    block_orbit_.push_back(orbit);
  }
}

Ideal CStarAlgebra::ideal_from_mask(std::uint64_t mask) const {
  Ideal i{BlockSet(block_count())};
  for (std::size_t k = 0; k < block_count(); ++k)
    if (mask >> k & 1U) i.blocks.set(k);
  return i;
}

std::vector<Ideal> CStarAlgebra::all_ideals() const {
  std::size_t const b = block_count();
  if (b > opts_.max_blocks || b >= 63) {
    throw CapExceeded("all_ideals: " + std::to_string(b) + " blocks exceed the cap of " +
                      std::to_string(opts_.max_blocks));
  }
  std::vector<Ideal> out;
  out.reserve(std::size_t{1} << b);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << b); ++m) out.push_back(ideal_from_mask(m));
  return out;
}

AlgebraElement CStarAlgebra::central_projection(Ideal const& ideal) const {
  AlgebraElement e(g_);
  for (std::size_t i = 0; i < block_count(); ++i)
    if (ideal.blocks.test(i)) e += dec_.blocks[i].idempotent;
  return e;
}

bool CStarAlgebra::contains(Ideal const& ideal, AlgebraElement const& a) const {
  auto const rest = a - convolve(central_projection(ideal), a);
  return rest.coefficient_norm() <= zero_eps() * std::max(1.0, a.coefficient_norm());
}

Ideal CStarAlgebra::generated_ideal(AlgebraElement const& a) const {
  Ideal out = zero_ideal();
  double const thresh = zero_eps() * std::max(1.0, a.coefficient_norm());
  for (std::size_t i = 0; i < block_count(); ++i)
    if (convolve(dec_.blocks[i].idempotent, a).coefficient_norm() > thresh) out.blocks.set(i);
  return out;
}

std::vector<CVector> CStarAlgebra::spanning_set(Ideal const& ideal) const {
  auto const& G = *g_;
  auto const e = central_projection(ideal);
  std::vector<CVector> out;
  for (Index g = 0; g < G.size(); ++g) {
    // (e * delta_g)(gamma) = e(gamma g^-1) on G_{s(g)}.
    CVector v(G.size(), Complex{});
    Index const ginv = G.inverse(g);
    for (Index gamma : G.source_fiber(G.source_pos(g))) v[gamma] = e[G.compose(gamma, ginv)];
    double const n = norm2(v);
    if (n <= zero_eps()) continue;
    for (auto& z : v) z /= n;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<CVector> CStarAlgebra::diagonal_part(Ideal const& ideal) const {
  auto const& G = *g_;
  std::size_t const k = G.unit_count();
  if (k == 0) return {};
  auto const e = central_projection(ideal);
  // Column u holds (1 - e_I) * delta_u; its null space is I meet C(G^(0)).
  CMatrix m(G.size(), k);
  for (std::size_t u = 0; u < k; ++u) {
    m(G.unit(u), u) += 1.0;
    for (Index gamma : G.source_fiber(u)) m(gamma, u) -= e[gamma];
  }
  std::vector<CVector> out;
  for (auto const& f : nullspace(m, tolerance())) {
    CVector v(G.size(), Complex{});
    for (std::size_t u = 0; u < k; ++u) v[G.unit(u)] = f[u];
    out.push_back(std::move(v));
  }
  return out;
}

UnitSubset CStarAlgebra::diagonal_support(Ideal const& ideal) const {
  auto const& G = *g_;
  UnitSubset u(G.unit_count());
  for (auto const& v : diagonal_part(ideal)) {
    double const n = norm2(v);
    for (std::size_t k = 0; k < G.unit_count(); ++k)
      if (std::abs(v[G.unit(k)]) > zero_eps() * n) u.set(k);
  }
  return u;
}

ElementSubset CStarAlgebra::support(Ideal const& ideal) const {
  ElementSubset s(g_->size());
  for (auto const& v : spanning_set(ideal))
    for (Index gamma = 0; gamma < v.size(); ++gamma)
      if (std::abs(v[gamma]) > zero_eps()) s.set(gamma);
  return s;
}

UnitSubset CStarAlgebra::source_of_support(Ideal const& ideal) const {
  UnitSubset u(g_->unit_count());
  auto const s = support(ideal);
  for (Index gamma = 0; gamma < g_->size(); ++gamma)
    if (s.test(gamma)) u.set(g_->source_pos(gamma));
  return u;
}

Ideal CStarAlgebra::dynamical_ideal_of(UnitSubset const& u) const {
  auto const& G = *g_;
  if (!is_invariant(G, u)) throw PreconditionError("dynamical_ideal_of: unit set is not invariant");
  Ideal out = zero_ideal();
  for (std::size_t i = 0; i < block_count(); ++i) {
    auto const& e = dec_.blocks[i].idempotent;
    for (std::size_t k = 0; k < G.unit_count(); ++k) {
      if (!u.test(k)) continue;
      // |e_i * delta_u| is the l^2 norm of e_i on G_u.
      double s = 0.0;
      for (Index gamma : G.source_fiber(k)) s += std::norm(e[gamma]);
      if (std::sqrt(s) > zero_eps()) {
        out.blocks.set(i);
        break;
      }
    }
  }
  return out;
}

bool CStarAlgebra::is_dynamical(Ideal const& ideal) const {
  return dynamical_ideal_of(diagonal_support(ideal)) == ideal;
}

bool CStarAlgebra::is_purely_non_dynamical(Ideal const& ideal) const {
  return !ideal.is_zero() && diagonal_part(ideal).empty();
}

ElementSubset CStarAlgebra::reduction_elements(UnitSubset const& u) const {
  ElementSubset s(g_->size());
  for (Index gamma = 0; gamma < g_->size(); ++gamma)
    if (u.test(g_->source_pos(gamma)) && u.test(g_->range_pos(gamma))) s.set(gamma);
  return s;
}

}  // namespace glab
