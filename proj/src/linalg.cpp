#include "glab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "glab/error.hpp"

namespace glab {

void TolerancePolicy::check() const {
  if (!(zero_eps > 0.0) || !(eig_residual > 0.0)) {
    throw PreconditionError("tolerances must be positive (zero_eps=" + std::to_string(zero_eps) +
                            ", eig_residual=" + std::to_string(eig_residual) + ")");
  }
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw PreconditionError("matrix entry count " + std::to_string(data_.size()) + " != " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::from_rows(std::vector<std::vector<Complex>> const& rows) {
  std::size_t const r = rows.size();
  std::size_t const c = r == 0 ? 0 : rows.front().size();
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw PreconditionError("ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * c));
  }
  return m;
}

CVector CMatrix::column(std::size_t j) const {
  CVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

CMatrix CMatrix::operator*(CMatrix const& other) const {
  if (cols_ != other.rows_) throw PreconditionError("matrix product dimension mismatch");
  CMatrix m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Complex const a = (*this)(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) m(i, j) += a * other(k, j);
    }
  }
  return m;
}

CMatrix CMatrix::operator+(CMatrix const& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw PreconditionError("matrix sum dimension mismatch");
  CMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += other.data_[i];
  return m;
}

CMatrix CMatrix::operator-(CMatrix const& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw PreconditionError("matrix difference dimension mismatch");
  CMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= other.data_[i];
  return m;
}

CMatrix CMatrix::operator*(Complex s) const {
  CMatrix m = *this;
  for (auto& z : m.data_) z *= s;
  return m;
}

CVector CMatrix::operator*(std::span<Complex const> v) const {
  if (v.size() != cols_) throw PreconditionError("matrix-vector dimension mismatch");
  CVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (auto const& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (auto const& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::hermitian_defect() const {
  if (!is_square()) throw PreconditionError("hermitian defect of a non-square matrix");
  double d = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j) d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

namespace {

double off_diagonal_norm2(CMatrix const& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

}  // namespace

HermitianEigen hermitian_eigen(CMatrix const& m, TolerancePolicy const& tol) {
  tol.check();
  if (!m.is_square()) {
    throw PreconditionError("hermitian_eigen: matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", not square");
  }
  if (double const d = m.hermitian_defect(); d > tol.zero_eps) {
    throw PreconditionError("hermitian_eigen: matrix is not Hermitian (max |M - M*| = " + std::to_string(d) + ")");
  }
  std::size_t const n = m.rows();
  CMatrix a = m;
  // Symmetrize exactly so rounding in the input cannot stall the sweeps.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      Complex const avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  CMatrix v = CMatrix::identity(n);
  double const scale = std::max(a.frobenius_norm(), 1e-300);
  double const target = 1e-32 * scale * scale;

  for (int sweep = 0; sweep < 100 && off_diagonal_norm2(a) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        Complex const c = a(p, q);
        double const abs_c = std::abs(c);
        if (abs_c < 1e-300) continue;
        double const app = a(p, p).real();
        double const aqq = a(q, q).real();
        // Phase-normalize the (p,q) entry, then apply a real Jacobi rotation.
        Complex const phase = c / abs_c;
        double const theta = (aqq - app) / (2.0 * abs_c);
        double const t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double const cs = 1.0 / std::sqrt(t * t + 1.0);
        double const sn = t * cs;
        // Unitary U on span{e_p, e_q}: U = diag(1, conj(phase)) * [[cs, sn], [-sn, cs]].
        Complex const upp = cs;
        Complex const upq = sn;
        Complex const uqp = -sn * std::conj(phase);
        Complex const uqq = cs * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          Complex const akp = a(k, p);
          Complex const akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          Complex const apk = a(p, k);
          Complex const aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          Complex const vkp = v(k, p);
          Complex const vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

double operator_norm(CMatrix const& m, TolerancePolicy const& tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  // Use the smaller Gram matrix.
  CMatrix const gram = m.rows() >= m.cols() ? m.adjoint() * m : m * m.adjoint();
  auto const eig = hermitian_eigen(gram, TolerancePolicy{std::max(tol.zero_eps, 1e-12 * gram.max_abs()),
                                                          tol.eig_residual});
  return std::sqrt(std::max(0.0, eig.eigenvalues.back()));
}

double norm2(std::span<Complex const> v) {
  double s = 0.0;
  for (auto const& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex inner(std::span<Complex const> a, std::span<Complex const> b) {
  if (a.size() != b.size()) throw PreconditionError("inner product dimension mismatch");
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

namespace {

// Removes the components of w along the orthonormal set q (two passes).
void project_out(std::vector<CVector> const& q, CVector& w) {
  for (int pass = 0; pass < 2; ++pass) {
    for (auto const& e : q) {
      Complex const c = inner(e, w);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * e[i];
    }
  }
}

void check_lengths(std::span<CVector const> vectors, std::size_t n) {
  for (auto const& v : vectors) {
    if (v.size() != n) {
      throw PreconditionError("vector length " + std::to_string(v.size()) + " != " + std::to_string(n));
    }
  }
}

}  // namespace

std::vector<CVector> orthonormalize(std::span<CVector const> vectors, TolerancePolicy const& tol) {
  std::vector<CVector> q;
  if (vectors.empty()) return q;
  check_lengths(vectors, vectors.front().size());
  for (auto const& v : vectors) {
    CVector w = v;
    project_out(q, w);
    double const r = norm2(w);
    if (r <= tol.zero_eps * std::max(1.0, norm2(v))) continue;
    for (auto& z : w) z /= r;
    q.push_back(std::move(w));
  }
  return q;
}

double distance_to_span(std::span<CVector const> basis, std::span<Complex const> v, TolerancePolicy const& tol) {
  check_lengths(basis, v.size());
  auto const q = orthonormalize(basis, tol);
  CVector w(v.begin(), v.end());
  project_out(q, w);
  return norm2(w);
}

bool subspace_membership(std::span<CVector const> basis, std::span<Complex const> v, TolerancePolicy const& tol) {
  return distance_to_span(basis, v, tol) <= tol.zero_eps * std::max(1.0, norm2(v));
}

namespace {

struct Echelon {
  CMatrix reduced;
  std::vector<std::size_t> pivot_cols;  // pivot column of row r
};

Echelon row_reduce(CMatrix m, TolerancePolicy const& tol) {
  std::size_t const rows = m.rows();
  std::size_t const cols = m.cols();
  double const threshold = tol.zero_eps * std::max(1.0, m.max_abs());
  std::vector<std::size_t> col_perm(cols);
  std::iota(col_perm.begin(), col_perm.end(), std::size_t{0});
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (; r < rows && r < cols; ++r) {
    // Complete pivoting over the trailing submatrix.
    std::size_t bi = r;
    std::size_t bj = r;
    double best = -1.0;
    for (std::size_t i = r; i < rows; ++i) {
      for (std::size_t j = r; j < cols; ++j) {
        double const a = std::abs(m(i, col_perm[j]));
        if (a > best) {
          best = a;
          bi = i;
          bj = j;
        }
      }
    }
    if (best <= threshold) break;
    std::swap(col_perm[r], col_perm[bj]);
    if (bi != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(bi, j));
    std::size_t const pc = col_perm[r];
    Complex const piv = m(r, pc);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Complex const f = m(i, pc);
      if (f == Complex{}) continue;
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(pc);
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

std::vector<CVector> nullspace(CMatrix const& m, TolerancePolicy const& tol) {
  std::size_t const cols = m.cols();
  auto const ech = row_reduce(m, tol);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<CVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    CVector x(cols, Complex{});
    x[free] = 1.0;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) x[ech.pivot_cols[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(CMatrix const& m, TolerancePolicy const& tol) { return row_reduce(m, tol).pivot_cols.size(); }

}  // namespace glab
