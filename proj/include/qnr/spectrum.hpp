// Spherical spectrum of a quaternionic matrix through its complex adjoint.
#pragma once

#include <stdexcept>
#include <vector>

#include "qnr/chi.hpp"

namespace qnr {

/// Standard eigenvalues: upper half-plane representatives of the right
/// eigenvalue classes, with multiplicities summing to n.
struct StdEigenList {
  std::vector<Complex> values;
  std::vector<int> multiplicities;
};

class SpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A^2 - 2 re(q) A + |q|^2 I.
QMatrix delta_matrix(const QMatrix& a, const Quaternion& q);

/// Eigenvalues of chi_A folded into the upper half-plane and clustered.
/// Clusters are formed within dedup_tol (relative to max(1, spectral scale));
/// when a cluster breaks the conjugate pairing the tolerance grows tenfold,
/// up to 1e-4, to absorb the O(eps^(1/k)) spread of defective eigenvalues.
/// Throws SpectrumError if pairing still fails.
StdEigenList spherical_spectrum(const QMatrix& a, double dedup_tol = 1e-7);

/// Unit X with A X = X z, recovered from a null vector of chi_A - z I.
/// Throws SpectrumError when z is not a standard eigenvalue or the
/// recovered vector misses |A X - X z| <= 1e-7 |A|.
QVector right_eigenvector(const QMatrix& a, Complex z);

struct SpectrumCheck {
  Complex value;
  int multiplicity = 0;
  QVector eigenvector;
  double eigen_residual = 0.0;  ///< |A X - X z|
  double delta_residual = 0.0;  ///< |Delta_z(A) X|
  bool pass = false;
};

struct SpectrumReport {
  std::vector<SpectrumCheck> checks;
  double bound = 0.0;  ///< 1e-6 |A|^2
  bool all_pass = true;
};

/// Checks the defining null-space condition for every standard eigenvalue.
SpectrumReport verify_spectrum(const QMatrix& a);

}  // namespace qnr
