// The convolution *-algebra of a finite groupoid and its regular
// representation.
//
// For a finite groupoid every function is compactly supported and the
// regular representation is faithful, so C*_r(G) is C_c(G) itself with the
// norm pulled back from the block-diagonal operator algebra
// (+)_x B(l^2(G_x)).  The j map is the identity on coefficient vectors.

#ifndef GLAB_ALGEBRA_HPP
#define GLAB_ALGEBRA_HPP

#include <memory>
#include <vector>

#include "glab/groupoid.hpp"
#include "glab/linalg.hpp"

namespace glab {

using GroupoidPtr = std::shared_ptr<FiniteGroupoid const>;

class AlgebraElement {
 public:
  explicit AlgebraElement(GroupoidPtr g);  // zero
  AlgebraElement(GroupoidPtr g, CVector coefficients);

  static AlgebraElement delta(GroupoidPtr g, Index e);
  // Indicator of the unit space: the identity of the algebra.
  static AlgebraElement one(GroupoidPtr g);

  GroupoidPtr const& groupoid() const noexcept { return g_; }
  CVector const& coefficients() const noexcept { return c_; }
  CVector& coefficients() noexcept { return c_; }
  Complex operator[](Index e) const { return c_[e]; }
  Complex& operator[](Index e) { return c_[e]; }
  std::size_t size() const noexcept { return c_.size(); }

  AlgebraElement& operator+=(AlgebraElement const& other);
  AlgebraElement& operator-=(AlgebraElement const& other);
  AlgebraElement& operator*=(Complex s);
  friend AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) { return a -= b; }
  friend AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }

  // Euclidean norm of the coefficient vector (the l^2(G) norm, not the
  // C*-norm).
  double coefficient_norm() const { return norm2(c_); }
  bool is_zero(double eps) const;

 private:
  void check_same(AlgebraElement const& other) const;

  GroupoidPtr g_;
  CVector c_;
};

// (f*g)(gamma) = sum over alpha in G^{r(gamma)} of f(alpha) g(alpha^{-1} gamma).
AlgebraElement convolve(AlgebraElement const& f, AlgebraElement const& g);
// f*(gamma) = conj(f(gamma^{-1})).
AlgebraElement involute(AlgebraElement const& f);

// Basis of l^2(G) = (+)_x l^2(G_x): fiber of unit position 0 first, each
// fiber in source_fiber() order.
struct RegularBasis {
  std::vector<Index> element_at;    // basis position -> element
  std::vector<std::size_t> position_of;  // element -> basis position
  std::vector<std::size_t> fiber_offset;  // unit position -> first basis position
};

RegularBasis regular_basis(FiniteGroupoid const& g);

// pi_x(f) on l^2(G_x) in source_fiber(x) order:
// pi_x(f) delta_gamma = sum over alpha in G_{r(gamma)} of f(alpha) delta_{alpha gamma}.
CMatrix fiber_representation(AlgebraElement const& f, std::size_t unit_pos);
// Block-diagonal sum of all fiber representations, in regular_basis order.
CMatrix full_representation(AlgebraElement const& f);

// Restriction of f to the unit space.
AlgebraElement expectation(AlgebraElement const& f);
CVector jmap(AlgebraElement const& f);

// Reduced C*-norm: the largest fiber operator norm.
double norm(AlgebraElement const& f, TolerancePolicy const& tol = {});

// Trace of the regular representation: sum over units u of f(u)|G^u|.
Complex regular_trace(AlgebraElement const& f);

}  // namespace glab

#endif  // GLAB_ALGEBRA_HPP
