// Quaternion scalars, imaginary units and the equivalence-class helpers
// used throughout the library.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace qnr {

using Complex = std::complex<double>;

/// Default absolute tolerance for scalar comparisons.
inline constexpr double kDefaultTol = 1e-10;

/// q = q0 + q1 i + q2 j + q3 k.
struct Quaternion {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a, double b = 0.0, double c = 0.0, double d = 0.0)
      : q0(a), q1(b), q2(c), q3(d) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  /// Embeds a + bi as a quaternion in the standard slice.
  static constexpr Quaternion from_complex(Complex z) { return {z.real(), z.imag(), 0, 0}; }

  constexpr std::array<double, 4> components() const { return {q0, q1, q2, q3}; }

  constexpr double re() const { return q0; }
  constexpr Quaternion im() const { return {0, q1, q2, q3}; }
  constexpr Quaternion conj() const { return {q0, -q1, -q2, -q3}; }
  constexpr double norm2() const { return q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3; }
  double norm() const { return std::sqrt(norm2()); }
  double im_norm() const { return std::sqrt(q1 * q1 + q2 * q2 + q3 * q3); }
  Quaternion inverse() const;

  constexpr Quaternion operator-() const { return {-q0, -q1, -q2, -q3}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    q0 += o.q0; q1 += o.q1; q2 += o.q2; q3 += o.q3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    q0 -= o.q0; q1 -= o.q1; q2 -= o.q2; q3 -= o.q3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    q0 *= s; q1 *= s; q2 *= s; q3 *= s;
    return *this;
  }

  constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Hamilton product (ij = k, jk = i, ki = j).
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
          a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
          a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
          a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0};
}

inline Quaternion Quaternion::inverse() const { return conj() / norm2(); }

inline Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }
inline Quaternion qconj(const Quaternion& q) { return q.conj(); }
inline double qmod(const Quaternion& q) { return q.norm(); }
inline double qre(const Quaternion& q) { return q.re(); }
inline Quaternion qim(const Quaternion& q) { return q.im(); }

/// Euclidean distance in R^4.
inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

/// A unit imaginary quaternion m, so m^2 = -1.
class ImaginaryUnit {
 public:
  /// Normalizes (u1, u2, u3); throws std::invalid_argument on a zero vector.
  ImaginaryUnit(double u1, double u2, double u3);

  double u1() const { return u1_; }
  double u2() const { return u2_; }
  double u3() const { return u3_; }
  Quaternion quaternion() const { return {0.0, u1_, u2_, u3_}; }

 private:
  double u1_, u2_, u3_;
};

/// (z1, z2) with q = z1 + z2 j.
std::pair<Complex, Complex> complex_pair(const Quaternion& q);

/// Inverse of complex_pair.
Quaternion from_complex_pair(Complex z1, Complex z2);

/// re(q) + i |im(q)|: the representative of [q] in the closed upper half-plane.
Complex class_rep(const Quaternion& q);

bool same_class(const Quaternion& p, const Quaternion& q, double tol = kDefaultTol);

/// Unit s with s^{-1} i s = m.
Quaternion conjugator_to(const ImaginaryUnit& m);

/// s^{-1} q s for nonzero s.
inline Quaternion similarity(const Quaternion& q, const Quaternion& s) { return s.inverse() * q * s; }

/// Draws m uniformly from the imaginary unit sphere.
template <class Rng>
ImaginaryUnit random_imaginary_unit(Rng& rng);

/// Samples of the circularization of a set of upper half-plane points.
/// Each point contributes m_samples values alpha + beta m.
std::vector<Quaternion> circularize(const std::vector<Complex>& points, int m_samples,
                                    std::uint64_t seed, double tol = kDefaultTol);

}  // namespace qnr

#include "qnr/detail/random.hpp"

namespace qnr {

template <class Rng>
ImaginaryUnit random_imaginary_unit(Rng& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    const double a = normal(rng), b = normal(rng), c = normal(rng);
    if (a * a + b * b + c * c > 1e-20) return ImaginaryUnit(a, b, c);
  }
}

}  // namespace qnr
