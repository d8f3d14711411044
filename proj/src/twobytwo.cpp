#include "qnr/twobytwo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qnr/spectrum.hpp"

namespace qnr {

namespace {

Complex fold(Complex z) { return {z.real(), std::abs(z.imag())}; }

Quaternion q_of(Complex z) { return Quaternion::from_complex(z); }

// Witness in triangular coordinates mapped back through U.
QVector lift(const TriangularForm2& t, const QVector& w) { return t.u * w; }

// Clip a convex polygon to im >= 0.
std::vector<Complex> clip_upper(const std::vector<Complex>& poly) {
  std::vector<Complex> out;
  const std::size_t m = poly.size();
  for (std::size_t l = 0; l < m; ++l) {
    const Complex a = poly[l], b = poly[(l + 1) % m];
    const bool ina = a.imag() >= 0.0, inb = b.imag() >= 0.0;
    if (ina) out.push_back(a);
    if (ina != inb) {
      const double s = a.imag() / (a.imag() - b.imag());
      out.emplace_back(a.real() + s * (b.real() - a.real()), 0.0);
    }
  }
  return out;
}

// The section of diag(z1, z2) as vertices of a segment or triangle.
std::vector<Complex> diagonal_section(Complex z1, Complex z2, double tol, RegionKind& kind) {
  if (std::abs(z1 - z2) <= tol) {
    kind = RegionKind::Segment;
    return {Complex(z1.real(), 0.0), z1};
  }
  const double b1 = z1.imag(), b2 = z2.imag();
  if (b1 + b2 > tol) {
    kind = RegionKind::Triangle;
    const double v = (z1.real() * b2 + b1 * z2.real()) / (b1 + b2);
    return {z1, z2, Complex(v, 0.0)};
  }
  kind = RegionKind::Segment;
  return {Complex(std::min(z1.real(), z2.real()), 0.0), Complex(std::max(z1.real(), z2.real()), 0.0)};
}

double base_distance(const std::vector<Complex>& vertices, Complex z) {
  if (vertices.size() == 2) return distance_to_segment(vertices[0], vertices[1], z);
  return distance_to_hull(hull2d(vertices), z);
}

double polygon_area(const std::vector<Complex>& poly) {
  double s = 0.0;
  for (std::size_t l = 0; l < poly.size(); ++l) {
    const Complex a = poly[l], b = poly[(l + 1) % poly.size()];
    s += a.real() * b.imag() - b.real() * a.imag();
  }
  return std::abs(s) / 2.0;
}

}  // namespace

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::Segment: return "segment";
    case RegionKind::Triangle: return "triangle";
    case RegionKind::HalfDisk: return "half_disk";
    case RegionKind::MinkowskiBound: return "minkowski_bound";
  }
  return "unknown";
}

TriangularForm2 triangularize2(const QMatrix& a) {
  if (a.n() != 2) throw DimensionError("triangularize2: matrix must be 2x2");
  const auto spec = spherical_spectrum(a);
  TriangularForm2 t;
  t.z1 = spec.values.front();
  const QVector x = right_eigenvector(a, t.z1);

  // Complete {X} to an orthonormal basis with the coordinate vector least aligned with X.
  const std::size_t pick = x[0].norm() <= x[1].norm() ? 0 : 1;
  const QVector e = QVector::basis(2, pick);
  QVector y = (e - x * qdot(x, e)).normalized();

  t.p = qdot(x, a * y);
  const Quaternion z2 = qdot(y, a * y);
  if (z2.im_norm() > 0.0) {
    // s^-1 i s = m; replacing Y by Y s^-1 turns z2 into s z2 s^-1 = re + |im| i.
    const Quaternion s_inv = conjugator_to(ImaginaryUnit(z2.q1, z2.q2, z2.q3)).inverse();
    y = y * s_inv;
    t.p = t.p * s_inv;
  }
  t.z2 = class_rep(qdot(y, a * y));
  t.u = from_columns({x, y});

  const QMatrix tri{{q_of(t.z1), t.p}, {Quaternion(), q_of(t.z2)}};
  const QMatrix diff = qadjoint(t.u) * a * t.u - tri;
  t.residual = diff.frobenius_norm();
  const double norm = operator_norm(a);
  if (t.residual > 1e-8 * std::max(norm, std::numeric_limits<double>::min()))
    throw TriangularizationError("triangularize2: residual exceeds 1e-8 |A|");
  return t;
}

Region2D classify_case(const TriangularForm2& t, double tol) {
  Region2D r;
  const bool equal = std::abs(t.z1 - t.z2) <= tol;
  const bool p_zero = t.p.norm() <= tol;
  if (equal && p_zero) {
    r.case_number = 1;
    r.kind = RegionKind::Segment;
    r.vertices = {Complex(t.z1.real(), 0.0), t.z1};
    return r;
  }
  if (p_zero) {
    r.case_number = 2;
    r.vertices = diagonal_section(t.z1, t.z2, tol, r.kind);
    return r;
  }
  if (std::abs(t.z1) <= tol && std::abs(t.z2) <= tol) {
    r.case_number = 3;
    r.kind = RegionKind::HalfDisk;
    r.center = 0.0;
    r.radius = t.p.norm() / 2.0;
    return r;
  }
  r.case_number = 4;
  r.kind = RegionKind::MinkowskiBound;
  RegionKind base;
  r.vertices = diagonal_section(t.z1, t.z2, tol, base);
  r.radius = t.p.norm() / 2.0;
  r.leftover = equal;
  return r;
}

double region_distance(const Region2D& r, Complex z) {
  switch (r.kind) {
    case RegionKind::Segment:
    case RegionKind::Triangle:
      return base_distance(r.vertices, z);
    case RegionKind::HalfDisk: {
      if (z.imag() >= 0.0) return std::max(0.0, std::abs(z - r.center) - r.radius);
      const double x = std::clamp(z.real(), r.center.real() - r.radius, r.center.real() + r.radius);
      return std::abs(z - Complex(x, r.center.imag()));
    }
    case RegionKind::MinkowskiBound: {
      const double d = std::max(0.0, base_distance(r.vertices, z) - r.radius);
      return z.imag() >= 0.0 ? d : std::max(d, -z.imag());
    }
  }
  return std::numeric_limits<double>::infinity();
}

bool region_contains(const Region2D& r, Complex z, double tol) { return region_distance(r, z) <= tol; }

std::vector<Complex> region_discretization(const Region2D& r, int resolution) {
  std::vector<Complex> out;
  const int m = std::max(resolution, 2);
  switch (r.kind) {
    case RegionKind::Segment:
      for (int l = 0; l <= m; ++l) out.push_back(r.vertices[0] + (r.vertices[1] - r.vertices[0]) * (double(l) / m));
      break;
    case RegionKind::Triangle: {
      const int k = std::max(m / 5, 2);
      for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b) {
          const double wa = double(a) / k, wb = double(b) / k;
          out.push_back(wa * r.vertices[0] + wb * r.vertices[1] + (1.0 - wa - wb) * r.vertices[2]);
        }
      for (int e = 0; e < 3; ++e) {
        const Complex p = r.vertices[e], q = r.vertices[(e + 1) % 3];
        for (int l = 0; l < m; ++l) out.push_back(p + (q - p) * (double(l) / m));
      }
      break;
    }
    case RegionKind::HalfDisk: {
      for (int l = 0; l <= m; ++l) {
        const double phi = std::numbers::pi * l / m;
        out.push_back(r.center + std::polar(r.radius, phi));
        out.push_back(r.center + Complex(r.radius * (2.0 * l / m - 1.0), 0.0));
      }
      const int k = std::max(m / 5, 2);
      for (int a = 1; a < k; ++a)
        for (int b = 0; b <= k; ++b) out.push_back(r.center + std::polar(r.radius * a / k, std::numbers::pi * b / k));
      break;
    }
    case RegionKind::MinkowskiBound:
      throw std::invalid_argument("region_discretization: bound regions are not discretized");
  }
  return out;
}

std::vector<Complex> region_outline(const Region2D& r, int resolution) {
  switch (r.kind) {
    case RegionKind::Segment:
      return r.vertices;
    case RegionKind::Triangle:
      return hull2d(r.vertices);
    case RegionKind::HalfDisk: {
      std::vector<Complex> out;
      for (int l = 0; l <= resolution; ++l) out.push_back(r.center + std::polar(r.radius, std::numbers::pi * l / resolution));
      return out;
    }
    case RegionKind::MinkowskiBound: {
      std::vector<Complex> pts;
      for (const auto& v : r.vertices)
        for (int l = 0; l < resolution; ++l) pts.push_back(v + std::polar(r.radius, 2.0 * std::numbers::pi * l / resolution));
      return clip_upper(hull2d(pts));
    }
  }
  return {};
}

QVector case2_edge_witness(Complex z_from, Complex z_other, double t) {
  const double a1 = z_from.real(), b1 = z_from.imag();
  const double a2 = z_other.real(), b2 = z_other.imag();
  const double v = (a1 * b2 + b1 * a2) / (b1 + b2);
  const double u = a1 * (1.0 - t) + v * t;
  QVector w(2);
  const Quaternion x(std::sqrt(std::max(0.0, (a2 - u) / (a2 - a1))));
  const Quaternion y = Quaternion::j() * std::sqrt(std::max(0.0, (u - a1) / (a2 - a1)));
  w[0] = x;
  w[1] = y;
  return w;
}

bool CaseReport::pass() const {
  if (containment > containment_tol) return false;
  if (filled && *filled >= filled_tol) return false;
  if (witness_residual && *witness_residual >= 1e-8) return false;
  if (young_slack && *young_slack < -1e-12) return false;
  if (v_attained && *v_attained >= 1e-6) return false;
  if (real_interval && !*real_interval) return false;
  return true;
}

CaseReport case_equality_check(const QMatrix& a, std::size_t samples, std::uint64_t seed) {
  if (a.n() != 2) throw DimensionError("case_equality_check: matrix must be 2x2");
  CaseReport report;
  report.form = triangularize2(a);
  report.region = classify_case(report.form);
  report.samples = samples;
  const auto& t = report.form;
  const auto& region = report.region;

  const auto section = refined_section(a, samples, seed);
  for (const auto& z : section.points) report.containment = std::max(report.containment, region_distance(region, z));

  if (region.case_number <= 3) {
    const auto grid = region_discretization(region);
    double worst = 0.0;
    for (const auto& z : grid) worst = std::max(worst, distance_to_hull(section.hull, z));
    report.filled = worst;
    report.filled_points = directed_hausdorff(grid, section.points);
  }

  auto section_value = [&](const QVector& w) { return class_rep(quadratic_form(a, lift(t, w).normalized())); };

  switch (region.case_number) {
    case 1: {
      // x = sqrt((1+beta)/2), y = j sqrt((1-beta)/2) gives re z + i b beta.
      double worst = 0.0;
      for (int l = 0; l <= 8; ++l) {
        const double beta = l / 8.0;
        QVector w(2);
        w[0] = Quaternion(std::sqrt((1.0 + beta) / 2.0));
        w[1] = Quaternion::j() * std::sqrt((1.0 - beta) / 2.0);
        const Complex expected(t.z1.real(), t.z1.imag() * beta);
        worst = std::max(worst, std::abs(section_value(w) - expected));
      }
      report.witness_residual = worst;
      break;
    }
    case 2: {
      if (region.kind != RegionKind::Triangle) {
        report.note = "real eigenvalues: section is the segment between them";
        break;
      }
      const double b1 = t.z1.imag(), b2 = t.z2.imag();
      const Complex v = region.vertices[2];
      QVector w(2);
      w[0] = Quaternion(std::sqrt(b2 / (b1 + b2)));
      w[1] = Quaternion::j() * std::sqrt(b1 / (b1 + b2));
      double worst = std::abs(section_value(w) - v);
      if (std::abs(t.z1.real() - t.z2.real()) > 1e-9) {
        for (int l = 0; l <= 4; ++l) {
          const double s = l / 4.0;
          auto edge = [&](Complex from, Complex other, bool swapped) {
            QVector e = case2_edge_witness(from, other, s);
            if (swapped) std::swap(e[0], e[1]);
            return std::abs(section_value(e) - (from * (1.0 - s) + v * s));
          };
          worst = std::max({worst, edge(t.z1, t.z2, false), edge(t.z2, t.z1, true)});
        }
      } else {
        report.note = "a1 = a2: edge parametrization skipped";
      }
      report.witness_residual = worst;
      const auto found = attain_section_point(a, v, 32, split_seed(seed, 7));
      report.v_attained = found ? std::abs(class_rep(quadratic_form(a, *found)) - v) : 1.0;
      break;
    }
    case 3: {
      const double absp = t.p.norm();
      double slack = std::numeric_limits<double>::infinity();
      for (const auto& z : section.points) slack = std::min(slack, absp / 2.0 - std::abs(z));
      report.young_slack = slack;
      // x = e^{-i theta} cos(alpha), y = p^-1 |p| sin(alpha) with sin(2 alpha) = 2|z| / |p|.
      double worst = 0.0;
      for (int l = 0; l <= 8; ++l)
        for (int k = 0; k <= 4; ++k) {
          const Complex z = std::polar(absp / 2.0 * l / 8.0, std::numbers::pi * k / 4.0);
          const double alpha = 0.5 * std::asin(std::min(1.0, 2.0 * std::abs(z) / absp));
          QVector w(2);
          w[0] = Quaternion::from_complex(std::polar(std::cos(alpha), -std::arg(z)));
          w[1] = t.p.inverse() * (absp * std::sin(alpha));
          worst = std::max(worst, std::abs(section_value(w) - fold(z)));
        }
      report.witness_residual = worst;
      break;
    }
    default: {
      if (region.leftover) report.note = "z1 = z2 != 0 with p != 0: outer bound only";
      // W cap R must be empty or connected: attained real targets form one run.
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (const auto& z : section.points) {
        lo = std::min(lo, z.real());
        hi = std::max(hi, z.real());
      }
      const int grid = 17;
      std::vector<bool> hit(grid);
      for (int l = 0; l < grid; ++l) {
        const double x = lo + (hi - lo) * l / (grid - 1);
        hit[l] = attain_section_point(a, Complex(x, 0.0), 16, split_seed(seed, 100 + l)).has_value();
      }
      int runs = 0;
      for (int l = 0; l < grid; ++l)
        if (hit[l] && (l == 0 || !hit[l - 1])) ++runs;
      report.real_interval = runs <= 1;

      // Gamma cap C+ area minus the sampled hull area, on a lattice.
      const auto outline = region_outline(region);
      double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y1 = 0.0;
      for (const auto& z : outline) {
        x0 = std::min(x0, z.real());
        x1 = std::max(x1, z.real());
        y1 = std::max(y1, z.imag());
      }
      const int cells = 200;
      const double dx = (x1 - x0) / cells, dy = y1 / cells;
      int inside = 0;
      for (int i = 0; i < cells; ++i)
        for (int j = 0; j < cells; ++j)
          if (region_contains(region, Complex(x0 + (i + 0.5) * dx, (j + 0.5) * dy), 0.0)) ++inside;
      report.gap_area = inside * dx * dy - polygon_area(section.hull);
      break;
    }
  }
  return report;
}

}  // namespace qnr
