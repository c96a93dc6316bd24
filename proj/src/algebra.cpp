#include "glab/algebra.hpp"

#include <algorithm>

#include "glab/error.hpp"

namespace glab {

AlgebraElement::AlgebraElement(GroupoidPtr g) : g_(std::move(g)) {
  if (!g_) throw PreconditionError("algebra element without a groupoid");
  c_.assign(g_->size(), Complex{});
}

AlgebraElement::AlgebraElement(GroupoidPtr g, CVector coefficients) : g_(std::move(g)), c_(std::move(coefficients)) {
  if (!g_) throw PreconditionError("algebra element without a groupoid");
  if (c_.size() != g_->size()) {
    throw PreconditionError("coefficient vector of length " + std::to_string(c_.size()) + " for a groupoid with " +
                            std::to_string(g_->size()) + " elements");
  }
}

AlgebraElement AlgebraElement::delta(GroupoidPtr g, Index e) {
  AlgebraElement a(std::move(g));
  if (e >= a.size()) throw PreconditionError("delta of an element outside the groupoid");
  a.c_[e] = 1.0;
  return a;
}

AlgebraElement AlgebraElement::one(GroupoidPtr g) {
  AlgebraElement a(std::move(g));
  for (Index u : a.g_->units()) a.c_[u] = 1.0;
  return a;
}

void AlgebraElement::check_same(AlgebraElement const& other) const {
  if (g_ != other.g_ && !(*g_ == *other.g_)) throw PreconditionError("algebra elements over different groupoids");
}

AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
  check_same(other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(AlgebraElement const& other) {
  check_same(other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex s) {
  for (auto& z : c_) z *= s;
  return *this;
}

bool AlgebraElement::is_zero(double eps) const {
  return std::all_of(c_.begin(), c_.end(), [eps](Complex z) { return std::abs(z) <= eps; });
}

AlgebraElement convolve(AlgebraElement const& f, AlgebraElement const& g) {
  if (f.groupoid() != g.groupoid() && !(*f.groupoid() == *g.groupoid())) {
    throw PreconditionError("convolution of elements over different groupoids");
  }
  auto const& G = *f.groupoid();
  AlgebraElement out(f.groupoid());
  // Every composable pair (alpha, beta) contributes f(alpha) g(beta) at alpha beta.
  for (Index alpha = 0; alpha < G.size(); ++alpha) {
    Complex const fa = f[alpha];
    if (fa == Complex{}) continue;
    for (Index beta : G.range_fiber(G.source_pos(alpha))) {
      Complex const gb = g[beta];
      if (gb == Complex{}) continue;
      out[G.compose(alpha, beta)] += fa * gb;
    }
  }
  return out;
}

AlgebraElement involute(AlgebraElement const& f) {
  auto const& G = *f.groupoid();
  AlgebraElement out(f.groupoid());
  for (Index e = 0; e < G.size(); ++e) out[e] = std::conj(f[G.inverse(e)]);
  return out;
}

RegularBasis regular_basis(FiniteGroupoid const& g) {
  RegularBasis b;
  b.position_of.assign(g.size(), npos);
  for (std::size_t k = 0; k < g.unit_count(); ++k) {
    b.fiber_offset.push_back(b.element_at.size());
    for (Index e : g.source_fiber(k)) {
      b.position_of[e] = b.element_at.size();
      b.element_at.push_back(e);
    }
  }
  return b;
}

CMatrix fiber_representation(AlgebraElement const& f, std::size_t unit_pos) {
  auto const& G = *f.groupoid();
  auto const fiber = G.source_fiber(unit_pos);
  std::size_t const d = fiber.size();
  // Local index inside the fiber.
  std::vector<std::size_t> local(G.size(), npos);
  for (std::size_t i = 0; i < d; ++i) local[fiber[i]] = i;
  CMatrix m(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    Index const gamma = fiber[col];
    for (Index alpha : G.source_fiber(G.range_pos(gamma))) {
      Complex const fa = f[alpha];
      if (fa == Complex{}) continue;
      m(local[G.compose(alpha, gamma)], col) += fa;
    }
  }
  return m;
}

CMatrix full_representation(AlgebraElement const& f) {
  auto const& G = *f.groupoid();
  auto const basis = regular_basis(G);
  CMatrix m(G.size(), G.size());
  for (std::size_t k = 0; k < G.unit_count(); ++k) {
    auto const block = fiber_representation(f, k);
    std::size_t const off = basis.fiber_offset[k];
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) m(off + i, off + j) = block(i, j);
  }
  return m;
}

AlgebraElement expectation(AlgebraElement const& f) {
  AlgebraElement out(f.groupoid());
  for (Index u : f.groupoid()->units()) out[u] = f[u];
  return out;
}

CVector jmap(AlgebraElement const& f) { return f.coefficients(); }

double norm(AlgebraElement const& f, TolerancePolicy const& tol) {
  double n = 0.0;
  for (std::size_t k = 0; k < f.groupoid()->unit_count(); ++k) {
    n = std::max(n, operator_norm(fiber_representation(f, k), tol));
  }
  return n;
}

Complex regular_trace(AlgebraElement const& f) {
  auto const& G = *f.groupoid();
  Complex t{};
  for (std::size_t k = 0; k < G.unit_count(); ++k) t += f[G.unit(k)] * static_cast<double>(G.range_fiber(k).size());
  return t;
}

}  // namespace glab
