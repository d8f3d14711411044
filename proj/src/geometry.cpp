#include "qnr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qnr {

std::vector<Complex> hull2d(std::vector<Complex> points) {
  if (points.empty()) throw std::invalid_argument("hull2d: empty point set");
  auto less = [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  };
  std::sort(points.begin(), points.end(), less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // Extreme pair; a set of rounding-level diameter is a single point.
  const Complex first = points.front();
  Complex far = first;
  for (const auto& p : points)
    if (std::norm(p - first) > std::norm(far - first)) far = p;
  Complex other = far;
  double diam2 = 0.0;
  for (const auto& p : points) {
    if (std::norm(p - far) > diam2) {
      diam2 = std::norm(p - far);
      other = p;
    }
  }
  if (diam2 <= 1e-28 * std::max(1.0, std::norm(far))) return {far};
  if (points.size() < 3) return points;

  constexpr double kCollinear = 1e-12;
  std::vector<Complex> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= kCollinear) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= kCollinear) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);

  // Numerically collinear input: the chain's endpoints follow rounding noise
  // in the sort key, so return the true extreme pair instead.
  double area = 0.0;
  for (std::size_t l = 0; l < hull.size(); ++l) area += cross(Complex(), hull[l], hull[(l + 1) % hull.size()]);
  if (hull.size() < 3 || std::abs(area) <= 1e-12 * diam2) return {far, other};
  return hull;
}

double distance_to_segment(Complex a, Complex b, Complex z) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

double signed_distance_to_hull(const std::vector<Complex>& hull, Complex z) {
  if (hull.empty()) throw std::invalid_argument("signed_distance_to_hull: empty hull");
  if (hull.size() == 1) return std::abs(z - hull[0]);
  if (hull.size() == 2) return distance_to_segment(hull[0], hull[1], z);

  bool inside = true;
  double edge = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < hull.size(); ++l) {
    const Complex a = hull[l], b = hull[(l + 1) % hull.size()];
    edge = std::min(edge, distance_to_segment(a, b, z));
    if (cross(a, b, z) < 0.0) inside = false;
  }
  return inside ? -edge : edge;
}

double distance_to_hull(const std::vector<Complex>& hull, Complex z) {
  return std::max(0.0, signed_distance_to_hull(hull, z));
}

double interior_depth(const std::vector<Complex>& hull, Complex z, double tol) {
  const double outside = distance_to_hull(hull, z);
  if (outside > tol) return -outside;
  if (hull.size() == 1) return 0.0;
  if (hull.size() == 2) return std::min(std::abs(z - hull[0]), std::abs(z - hull[1]));
  return std::max(0.0, -signed_distance_to_hull(hull, z));
}

bool point_in_hull(const std::vector<Complex>& hull, Complex z, double tol) {
  return distance_to_hull(hull, z) <= tol;
}

double directed_hausdorff(const std::vector<Complex>& p, const std::vector<Complex>& q) {
  if (p.empty() || q.empty()) throw std::invalid_argument("hausdorff: empty point set");
  double worst = 0.0;
  for (const auto& a : p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& b : q) {
      best = std::min(best, std::norm(a - b));
      if (best <= worst) break;
    }
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

double hausdorff(const std::vector<Complex>& p, const std::vector<Complex>& q) {
  return std::max(directed_hausdorff(p, q), directed_hausdorff(q, p));
}

double hull_hausdorff(const std::vector<Complex>& p, const std::vector<Complex>& q) {
  // The distance to a convex set is convex, so its maximum over a polygon
  // sits at a vertex.
  double worst = 0.0;
  for (const auto& a : p) worst = std::max(worst, distance_to_hull(q, a));
  for (const auto& b : q) worst = std::max(worst, distance_to_hull(p, b));
  return worst;
}

}  // namespace qnr
