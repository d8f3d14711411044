#include "qnr/quat.hpp"

#include <stdexcept>

namespace qnr {

ImaginaryUnit::ImaginaryUnit(double u1, double u2, double u3) {
  const double n = std::sqrt(u1 * u1 + u2 * u2 + u3 * u3);
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("imaginary unit must be a nonzero finite vector");
  u1_ = u1 / n;
  u2_ = u2 / n;
  u3_ = u3 / n;
}

std::pair<Complex, Complex> complex_pair(const Quaternion& q) {
  return {Complex(q.q0, q.q1), Complex(q.q2, q.q3)};
}

Quaternion from_complex_pair(Complex z1, Complex z2) {
  return {z1.real(), z1.imag(), z2.real(), z2.imag()};
}

Complex class_rep(const Quaternion& q) { return {q.re(), q.im_norm()}; }

bool same_class(const Quaternion& p, const Quaternion& q, double tol) {
  return std::abs(p.re() - q.re()) <= tol && std::abs(p.im_norm() - q.im_norm()) <= tol;
}

Quaternion conjugator_to(const ImaginaryUnit& m) {
  // r = normalize(1 + e.m + e x m) rotates the unit e onto m via v -> r v r^-1,
  // and s^-1 e s = r e r^-1 for s = conj(r).
  if (m.u1() >= 0.0) {
    const Quaternion r(1.0 + m.u1(), 0.0, -m.u3(), m.u2());
    return (r / r.norm()).conj();
  }
  // Near -i: j takes i to -i, then rotate -i onto m.
  const Quaternion r(1.0 - m.u1(), 0.0, m.u3(), -m.u2());
  return Quaternion::j() * (r / r.norm()).conj();
}

std::vector<Quaternion> circularize(const std::vector<Complex>& points, int m_samples,
                                    std::uint64_t seed, double tol) {
  if (m_samples < 1) throw std::invalid_argument("circularize: m_samples must be >= 1");
  for (const auto& z : points)
    if (z.imag() < -tol) throw std::invalid_argument("circularize: point below the real axis");

  Rng rng(seed);
  std::vector<Quaternion> out;
  out.reserve(points.size() * static_cast<std::size_t>(m_samples));
  for (const auto& z : points) {
    const double beta = std::max(z.imag(), 0.0);
    for (int s = 0; s < m_samples; ++s) {
      const Quaternion m = random_imaginary_unit(rng).quaternion();
      out.push_back(Quaternion(z.real()) + m * beta);
    }
  }
  return out;
}

}  // namespace qnr
