// Small dense complex linear algebra used by the C*-algebra engine.
//
// Matrices here are at most a few hundred rows with O(1) entries, so all
// routines are straightforward O(n^3) dense algorithms with absolute
// thresholds taken from a single TolerancePolicy.

#ifndef GLAB_LINALG_HPP
#define GLAB_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace glab {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

struct TolerancePolicy {
  // Absolute threshold for "numerically zero"; also the single pivot
  // threshold for every rank decision.
  double zero_eps = 1e-9;
  // Eigenpair residual bound, relative to the operator norm.
  double eig_residual = 1e-10;

  // Throws PreconditionError unless both thresholds are positive.
  void check() const;
};

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix from_rows(std::vector<std::vector<Complex>> const& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Complex const& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex const> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  CVector column(std::size_t j) const;

  CMatrix adjoint() const;
  CMatrix operator*(CMatrix const& other) const;
  CMatrix operator+(CMatrix const& other) const;
  CMatrix operator-(CMatrix const& other) const;
  CMatrix operator*(Complex s) const;
  CVector operator*(std::span<Complex const> v) const;

  // Largest entrywise modulus.
  double max_abs() const;
  double frobenius_norm() const;
  // Largest entrywise modulus of M - M*.
  double hermitian_defect() const;

  bool operator==(CMatrix const&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // column k belongs to eigenvalues[k]
};

// Cyclic complex Jacobi.  Requires a square matrix that is Hermitian up to
// zero_eps; the returned eigenbasis is orthonormal and every pair satisfies
// |Mv - lv| <= eig_residual * |M|.
HermitianEigen hermitian_eigen(CMatrix const& m, TolerancePolicy const& tol = {});

// Largest singular value.
double operator_norm(CMatrix const& m, TolerancePolicy const& tol = {});

double norm2(std::span<Complex const> v);
Complex inner(std::span<Complex const> a, std::span<Complex const> b);  // conj(a).b

// Orthonormal basis of span(vectors); a vector whose residual after
// projection is at most zero_eps * max(1, |v|) is dropped.
std::vector<CVector> orthonormalize(std::span<CVector const> vectors, TolerancePolicy const& tol = {});

// Distance from v to span(basis), computed by orthogonal projection.
double distance_to_span(std::span<CVector const> basis, std::span<Complex const> v,
                        TolerancePolicy const& tol = {});

// True iff v lies within zero_eps * max(1, |v|) of span(basis).
bool subspace_membership(std::span<CVector const> basis, std::span<Complex const> v,
                         TolerancePolicy const& tol = {});

// Basis of {x : Mx = 0} from a reduced row echelon form with complete
// pivoting; pivots below zero_eps * max(1, max|M|) count as zero.
std::vector<CVector> nullspace(CMatrix const& m, TolerancePolicy const& tol = {});

std::size_t rank(CMatrix const& m, TolerancePolicy const& tol = {});

}  // namespace glab

#endif  // GLAB_LINALG_HPP
