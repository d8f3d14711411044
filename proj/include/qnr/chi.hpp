// Complex-adjoint embedding of quaternionic matrices and the dense complex
// kernels built on it: Hermitian and general eigenvalues, operator norm and
// the angle sweep of the complex numerical range.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qnr/qmat.hpp"

namespace qnr {

class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t m) : m_(m), entries_(m * m) {}
  CMatrix(std::size_t m, std::vector<Complex> entries);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t m);

  std::size_t m() const { return m_; }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * m_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * m_ + c]; }
  const std::vector<Complex>& entries() const { return entries_; }

  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator*(Complex s) const;
  std::vector<Complex> operator*(const std::vector<Complex>& x) const;

  CMatrix adjoint() const;
  double frobenius_norm() const;
  /// Frobenius distance to another matrix of the same size.
  double distance(const CMatrix& o) const;
  bool is_hermitian(double tol) const;

 private:
  std::size_t m_ = 0;
  std::vector<Complex> entries_;
};

/// Thrown when an eigenvalue iteration fails to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// chi_A = [[A1, A2], [-conj(A2), conj(A1)]] where A = A1 + A2 j entrywise.
CMatrix chi_embed(const QMatrix& a);

/// Conjugate-linear dot product sum conj(x_l) y_l.
Complex cdot(const std::vector<Complex>& x, const std::vector<Complex>& y);
double cnorm(const std::vector<Complex>& x);

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  CMatrix vectors;             ///< column c is the eigenvector of values[c]
};

/// Cyclic complex Jacobi. Throws std::invalid_argument when H is not
/// Hermitian within 1e-10 (relative to max(1, |H|_F)).
HermitianEigen hermitian_eigen(const CMatrix& h);

/// Eigenvalues only, ascending (Householder tridiagonalization + implicit QL).
/// Used on hot paths; no Hermitian check beyond reading the lower triangle.
std::vector<double> hermitian_eigenvalues(const CMatrix& h);

/// All m eigenvalues with multiplicity (Hessenberg reduction + shifted QR).
std::vector<Complex> general_eigenvalues(const CMatrix& b);

/// Smallest singular value of B (square root of the smallest eigenvalue of B*B).
double smallest_singular_value(const CMatrix& b);

/// Solves B x = rhs by Gaussian elimination with partial pivoting. Zero
/// pivots are replaced by a tiny multiple of |B|_F, which is what inverse
/// iteration needs near an exact eigenvalue.
std::vector<Complex> solve_perturbed(const CMatrix& b, const std::vector<Complex>& rhs);

/// Spectral norm of a complex matrix.
double operator_norm(const CMatrix& b);
/// Operator norm over H^n, equal to the spectral norm of chi_A.
double operator_norm(const QMatrix& a);

struct SweepResult {
  double radius = 0.0;                ///< complex numerical radius
  std::vector<Complex> boundary;      ///< supporting points, one per grid angle (when collected)
  int angles = 0;
  std::vector<double> thetas;         ///< grid angles
  std::vector<double> support;        ///< lambda_max of Re(e^{i theta} B) on the grid
  double best_theta = 0.0;            ///< refined angle attaining the radius
};

/// lambda_max of (e^{i theta} B + e^{-i theta} B*) / 2.
double support_value(const CMatrix& b, double theta);

/// Supporting point <u, B u> for the top eigenvector u at angle theta.
Complex supporting_point(const CMatrix& b, double theta);

/// Angle sweep of W(B). Requires angles >= 8. The radius is the maximum of
/// the support function, refined by golden-section search around every
/// competitive grid maximum until the bracket is below 1e-10.
SweepResult complex_range_sweep(const CMatrix& b, int angles = 720, bool collect_boundary = true);

/// min over theta of [support(theta) - Re(e^{i theta} z)]: nonnegative iff
/// z lies in W(B). Uses the grid of `sweep` and refines near the minimum.
double range_margin(const CMatrix& b, const SweepResult& sweep, Complex z);

inline bool in_numerical_range(const CMatrix& b, const SweepResult& sweep, Complex z, double tol) {
  return range_margin(b, sweep, z) >= -tol;
}

}  // namespace qnr
