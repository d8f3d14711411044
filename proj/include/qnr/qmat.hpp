// Dense vectors and square matrices over the quaternions.
//
// H^n is treated as a right module: scalars act on vectors from the right,
// and the inner product <X, Y> = sum conj(x_l) y_l is conjugate-linear in
// its first argument, so <X, Y q> = <X, Y> q.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "qnr/quat.hpp"

namespace qnr {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : entries_(n) {}
  QVector(std::initializer_list<Quaternion> xs) : entries_(xs) {}
  explicit QVector(std::vector<Quaternion> xs) : entries_(std::move(xs)) {}

  static QVector basis(std::size_t n, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  Quaternion& operator[](std::size_t l) { return entries_[l]; }
  const Quaternion& operator[](std::size_t l) const { return entries_[l]; }
  const std::vector<Quaternion>& entries() const { return entries_; }

  double norm2() const;
  double norm() const { return std::sqrt(norm2()); }
  QVector normalized() const;

  /// X q (right scalar multiplication).
  QVector operator*(const Quaternion& q) const;
  QVector operator+(const QVector& o) const;
  QVector operator-(const QVector& o) const;

  /// The 4n real coordinates (q0, q1, q2, q3 per entry).
  std::vector<double> to_real() const;
  static QVector from_real(const std::vector<double>& x);

 private:
  std::vector<Quaternion> entries_;
};

class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  /// Row-major entries; throws DimensionError unless entries.size() == n*n.
  QMatrix(std::size_t n, std::vector<Quaternion> entries);
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const std::vector<Quaternion>& d);
  /// diag(A, B).
  static QMatrix block_diagonal(const QMatrix& a, const QMatrix& b);

  std::size_t n() const { return n_; }
  Quaternion& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  const std::vector<Quaternion>& entries() const { return entries_; }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(double s) const;
  /// Entrywise right multiplication A q.
  QMatrix right_scaled(const Quaternion& q) const;

  double frobenius_norm() const;
  bool all_finite() const;

 private:
  std::size_t n_ = 0;
  std::vector<Quaternion> entries_;
};

Quaternion qdot(const QVector& x, const QVector& y);
QVector qmatvec(const QMatrix& a, const QVector& x);
QMatrix qmatmul(const QMatrix& a, const QMatrix& b);
QMatrix qadjoint(const QMatrix& a);

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) { return qmatmul(a, b); }
inline QVector operator*(const QMatrix& a, const QVector& x) { return qmatvec(a, x); }

/// <X, A X> for unit X; throws std::invalid_argument when |X| differs from 1 by more than 1e-10.
Quaternion quadratic_form(const QMatrix& a, const QVector& x);
/// <X, A X> without the unit-norm precondition.
Quaternion quadratic_form_unchecked(const QMatrix& a, const QVector& x);

bool is_selfadjoint(const QMatrix& a, double tol = kDefaultTol);
bool is_normal(const QMatrix& a, double tol = kDefaultTol);
bool is_unitary(const QMatrix& a, double tol = kDefaultTol);

/// Uniform draw from the unit sphere of H^n (4n Gaussian components, normalized).
QVector random_unit_vector(std::size_t n, std::uint64_t seed);
QVector random_unit_vector(std::size_t n, Rng& rng);

/// Matrix with independent standard-normal components.
QMatrix random_matrix(std::size_t n, Rng& rng);

/// Random unitary built from quaternionic Householder reflections I - 2 v v*.
QMatrix random_unitary(std::size_t n, Rng& rng);

/// Orthonormalizes the columns in order (Gram-Schmidt over H, right module).
/// Columns that become numerically dependent are replaced by random directions.
std::vector<QVector> orthonormalize(const std::vector<QVector>& columns, Rng& rng);

/// Matrix whose r-th column is columns[r].
QMatrix from_columns(const std::vector<QVector>& columns);
QVector column(const QMatrix& a, std::size_t c);

}  // namespace qnr
