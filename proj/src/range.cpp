#include "qnr/range.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qnr/spectrum.hpp"

namespace qnr {

namespace {

constexpr double kAttainTol = 1e-6;
constexpr std::array<Quaternion, 4> kUnits = {Quaternion(1, 0, 0, 0), Quaternion(0, 1, 0, 0),
                                             Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)};

Complex co(const Quaternion& q) { return {q.q0, q.q1}; }

Complex fold(Complex z) { return {z.real(), std::abs(z.imag())}; }

// Multistart: half of the starts are the samples nearest the target under
// `metric`, the rest are plain random points. Returns the best attempt and
// stops early once the metric drops below `good`.
SphereSolveResult multistart(const QMatrix& a, const QuaternionResidual& res,
                             const std::function<double(const Quaternion&)>& metric, int starts,
                             std::uint64_t seed, double good) {
  const std::size_t n = a.n();
  Rng rng(split_seed(seed, 0x5eed));
  const std::size_t pool = std::max<std::size_t>(256, 8 * static_cast<std::size_t>(starts));
  std::vector<std::pair<double, QVector>> candidates;
  candidates.reserve(pool);
  for (std::size_t l = 0; l < pool; ++l) {
    QVector x = random_unit_vector(n, rng);
    candidates.emplace_back(metric(quadratic_form_unchecked(a, x)), std::move(x));
  }
  const std::size_t nearest = std::min<std::size_t>(pool, (starts + 1) / 2);
  std::partial_sort(candidates.begin(), candidates.begin() + nearest, candidates.end(),
                    [](const auto& l, const auto& r) { return l.first < r.first; });

  SphereSolveResult best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int s = 0; s < starts; ++s) {
    const QVector& start = static_cast<std::size_t>(s) < nearest ? candidates[s].second
                                                                   : candidates[nearest + s].second;
    auto result = solve_on_sphere(a, start, res);
    result.x = result.x.normalized();
    result.residual = metric(quadratic_form_unchecked(a, result.x));
    if (result.residual < best.residual) best = std::move(result);
    if (best.residual < good) break;
  }
  return best;
}

std::optional<QVector> attain(const QMatrix& a, Complex target, int starts, std::uint64_t seed) {
  auto metric = [target](const Quaternion& q) { return std::abs(class_rep(q) - target); };
  const auto best = multistart(a, section_target_residual(target), metric, starts, seed, 1e-10);
  if (best.residual < kAttainTol) return best.x;
  return std::nullopt;
}

}  // namespace

std::vector<SamplePoint> sample_range(const QMatrix& a, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SamplePoint> out;
  out.reserve(count);
  for (std::size_t l = 0; l < count; ++l) {
    QVector x = random_unit_vector(a.n(), rng);
    const Quaternion q = quadratic_form_unchecked(a, x);
    out.push_back({q, std::move(x)});
  }
  return out;
}

Section2D make_section(std::vector<Complex> points) {
  Section2D s;
  s.points = std::move(points);
  if (!s.points.empty()) s.hull = hull2d(s.points);
  return s;
}

Section2D section_plus(const std::vector<SamplePoint>& samples) {
  std::vector<Complex> pts;
  pts.reserve(samples.size());
  for (const auto& s : samples) pts.push_back(class_rep(s.value));
  return make_section(std::move(pts));
}

Section2D refined_section(const QMatrix& a, std::size_t samples, std::uint64_t seed, int directions,
                          int ascent_steps) {
  const auto drawn = sample_range(a, samples, seed);
  std::vector<Complex> pts;
  pts.reserve(drawn.size() + 2 * static_cast<std::size_t>(std::max(directions, 0)));
  for (const auto& s : drawn) pts.push_back(class_rep(s.value));
  if (drawn.empty() || directions <= 0) return make_section(std::move(pts));

  const auto dir = [directions](int k) { return std::polar(1.0, 2.0 * std::numbers::pi * k / directions); };
  const auto along = [](Complex d, const Quaternion& q) {
    const Complex z = class_rep(q);
    return d.real() * z.real() + d.imag() * z.imag();
  };
  // Downward directions favour im q = 0, where |im q| has a cone kink; ascend
  // a smoothed version there.
  const double eps = 1e-4 * std::max(1.0, a.frobenius_norm());
  const auto smooth_along = [eps](Complex d, const Quaternion& q) {
    if (d.imag() >= 0.0) return d.real() * q.q0 + d.imag() * q.im_norm();
    const double v = q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
    return d.real() * q.q0 + d.imag() * (std::sqrt(v + eps * eps) - eps);
  };
  std::vector<QVector> witness(static_cast<std::size_t>(directions));
  std::vector<double> value(witness.size(), -std::numeric_limits<double>::infinity());
  auto polish = [&](int k, const QVector& start) {
    const Complex d = dir(k);
    const auto up =
        ascend_on_sphere(a, start, [&](const Quaternion& q) { return smooth_along(d, q); }, 1e-6, ascent_steps);
    if (up.value > value[k]) {
      value[k] = up.value;
      witness[k] = up.x;
    }
  };
  for (int k = 0; k < directions; ++k) {
    const Complex d = dir(k);
    std::size_t best = 0;
    for (std::size_t l = 1; l < drawn.size(); ++l)
      if (along(d, drawn[l].value) > along(d, drawn[best].value)) best = l;
    polish(k, drawn[best].witness);
  }
  // Continuation around the circle in both senses lifts directions that
  // stalled below a neighbour's optimum.
  for (int sense : {1, -1})
    for (int step = 1; step <= directions; ++step) {
      const int k = ((sense * step) % directions + directions) % directions;
      const int prev = ((k - sense) % directions + directions) % directions;
      if (smooth_along(dir(k), quadratic_form(a, witness[prev])) > value[k] + 1e-12) polish(k, witness[prev]);
    }
  for (const auto& w : witness) pts.push_back(class_rep(quadratic_form(a, w)));
  return make_section(std::move(pts));
}

std::vector<Complex> complex_projection_samples(const std::vector<SamplePoint>& samples) {
  std::vector<Complex> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(co(s.value));
  return out;
}

double numerical_radius(const QMatrix& a, int angles) {
  return complex_range_sweep(chi_embed(a), angles, false).radius;
}

RadiusLowerBound radius_lower_bound(const QMatrix& a, std::size_t count, std::uint64_t seed, int ascent_steps) {
  auto samples = sample_range(a, std::max<std::size_t>(count, 1), seed);
  const std::size_t top = std::min<std::size_t>(4, samples.size());
  std::partial_sort(samples.begin(), samples.begin() + top, samples.end(),
                    [](const auto& l, const auto& r) { return l.value.norm() > r.value.norm(); });
  RadiusLowerBound best{samples.front().value.norm(), samples.front().witness};
  for (std::size_t s = 0; s < top; ++s) {
    const auto climb = ascend_modulus(a, samples[s].witness, 1e-6, ascent_steps);
    const QVector x = climb.x.normalized();
    const double v = quadratic_form_unchecked(a, x).norm();
    if (v > best.value) best = {v, x};
  }
  return best;
}

std::optional<QVector> attain_section_point(const QMatrix& a, Complex target, int starts, std::uint64_t seed) {
  if (target.imag() < 0.0) throw std::invalid_argument("attain_section_point: target must have im >= 0");
  return attain(a, target, starts, seed);
}

SphereSolveResult closest_projection(const QMatrix& a, Complex target, int starts, std::uint64_t seed) {
  auto metric = [target](const Quaternion& q) { return std::abs(co(q) - target); };
  return multistart(a, projection_target_residual(target), metric, starts, seed, 1e-10);
}

std::optional<QVector> attain_projection_point(const QMatrix& a, Complex target, int starts, std::uint64_t seed) {
  auto best = closest_projection(a, target, starts, seed);
  if (best.residual < kAttainTol) return best.x;
  return std::nullopt;
}

ConvexityReport section_convexity_check(const QMatrix& a, int pairs, std::uint64_t seed, int starts) {
  if (pairs < 1) throw std::invalid_argument("section_convexity_check: pairs must be >= 1");
  const std::size_t n = a.n();
  Rng rng(seed);
  ConvexityReport report;
  report.pairs = pairs;
  for (int p = 0; p < pairs; ++p) {
    const QVector x = random_unit_vector(n, rng);
    const QVector y = random_unit_vector(n, rng);
    const Complex mid = 0.5 * (class_rep(quadratic_form_unchecked(a, x)) + class_rep(quadratic_form_unchecked(a, y)));

    // Compression of A onto span{X, Y}.
    const auto basis = n >= 2 ? orthonormalize({x, y}, rng) : std::vector<QVector>{x};
    const std::size_t m = basis.size();
    QMatrix b(m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) b(r, c) = qdot(basis[r], a * basis[c]);

    auto try_budget = [&](int budget, std::uint64_t s) -> std::optional<double> {
      const auto v = attain(b, mid, budget, s);
      if (!v) return std::nullopt;
      QVector w(n);
      for (std::size_t c = 0; c < m; ++c) w = w + basis[c] * (*v)[c];
      return std::abs(class_rep(quadratic_form_unchecked(a, w.normalized())) - mid);
    };

    const std::uint64_t s = split_seed(seed, static_cast<std::uint64_t>(p));
    auto residual = try_budget(starts, s);
    if (!residual || *residual >= kAttainTol) {
      ++report.retried;
      residual = try_budget(4 * starts, split_seed(s, 1));
    }
    if (residual && *residual < kAttainTol) {
      ++report.attained;
      report.max_residual = std::max(report.max_residual, *residual);
    } else {
      report.failures.push_back(mid);
    }
  }
  return report;
}

bool vertical_line_connectedness(const Section2D& section, double alpha, double gap_tol, double strip_width) {
  if (gap_tol <= 0.0) throw std::invalid_argument("vertical_line_connectedness: gap_tol must be > 0");
  if (strip_width <= 0.0) strip_width = gap_tol / 2.0;
  std::vector<double> ims;
  for (const auto& z : section.points)
    if (std::abs(z.real() - alpha) < strip_width) ims.push_back(z.imag());
  std::sort(ims.begin(), ims.end());
  for (std::size_t l = 1; l < ims.size(); ++l)
    if (ims[l] - ims[l - 1] >= gap_tol) return false;
  return true;
}

double omega_support(const std::vector<Complex>& s, const std::array<double, 4>& d) {
  if (s.empty()) throw std::invalid_argument("omega_support: empty set");
  const double im = std::sqrt(d[1] * d[1] + d[2] * d[2] + d[3] * d[3]);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& z : s) {
    if (z.imag() < 0.0) throw std::invalid_argument("omega_support: point with negative imaginary part");
    best = std::max(best, z.real() * d[0] + z.imag() * im);
  }
  return best;
}

std::array<double, 4> random_direction4(Rng& rng) {
  std::normal_distribution<double> normal;
  std::array<double, 4> d{};
  double s = 0.0;
  do {
    s = 0.0;
    for (auto& c : d) {
      c = normal(rng);
      s += c * c;
    }
  } while (s < 1e-24);
  s = std::sqrt(s);
  for (auto& c : d) c /= s;
  return d;
}

PropConvReport prop_conv_check(const std::vector<Complex>& s, int probes, std::uint64_t seed) {
  if (s.empty()) throw std::invalid_argument("prop_conv_check: empty set");
  Rng rng(seed);
  const auto vertices = hull2d(s);

  std::vector<Complex> dense(vertices);
  std::exponential_distribution<double> expo(1.0);
  for (int l = 0; l < 2000; ++l) {
    Complex z = 0.0;
    double total = 0.0;
    for (const auto& p : s) {
      const double w = expo(rng);
      z += w * p;
      total += w;
    }
    dense.push_back(z / total);
  }

  PropConvReport report;
  report.probes = probes;
  for (int l = 0; l < probes; ++l) {
    const auto d = random_direction4(rng);
    const double hs = omega_support(s, d);
    const double dev = std::max(std::abs(hs - omega_support(vertices, d)), std::abs(hs - omega_support(dense, d)));
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  report.pass = report.max_deviation < 1e-9;
  return report;
}

bool SetOpsReport::pass() const {
  const double tol = 1e-9 * scale;
  return affine_error <= tol && sum_error <= tol && unitary_witness_error <= tol && adjoint_witness_error <= tol &&
         unitary_hausdorff < hausdorff_tol && adjoint_hausdorff < hausdorff_tol;
}

SetOpsReport set_ops_check(const QMatrix& a, const QMatrix& b, std::uint64_t seed, std::size_t samples) {
  if (a.n() != b.n()) throw DimensionError("set_ops_check: dimension mismatch");
  const std::size_t n = a.n();
  Rng rng(seed);
  std::normal_distribution<double> normal;
  const double alpha = normal(rng), beta = normal(rng);
  const QMatrix affine = QMatrix::identity(n) * alpha + a * beta;
  const QMatrix sum = a + b;
  const QMatrix u = random_unitary(n, rng);
  const QMatrix rotated = qadjoint(u) * a * u;
  const QMatrix adj = qadjoint(a);

  SetOpsReport report;
  report.scale = std::max({1.0, a.frobenius_norm() * (1.0 + std::abs(beta)) + std::abs(alpha), b.frobenius_norm()});
  const std::size_t witnesses = std::min<std::size_t>(samples, 2000);
  for (std::size_t l = 0; l < witnesses; ++l) {
    const QVector x = random_unit_vector(n, rng);
    const Quaternion qa = quadratic_form_unchecked(a, x);
    report.affine_error =
        std::max(report.affine_error, distance(quadratic_form_unchecked(affine, x), Quaternion(alpha) + qa * beta));
    report.sum_error =
        std::max(report.sum_error, distance(quadratic_form_unchecked(sum, x), qa + quadratic_form_unchecked(b, x)));
    report.unitary_witness_error = std::max(
        report.unitary_witness_error, distance(quadratic_form_unchecked(rotated, x), quadratic_form_unchecked(a, u * x)));
    report.adjoint_witness_error =
        std::max(report.adjoint_witness_error, std::abs(class_rep(quadratic_form_unchecked(adj, x)) - class_rep(qa)));
  }

  const auto base = refined_section(a, samples, split_seed(seed, 1));
  report.unitary_hausdorff = hull_hausdorff(refined_section(rotated, samples, split_seed(seed, 2)).hull, base.hull);
  report.adjoint_hausdorff = hull_hausdorff(refined_section(adj, samples, split_seed(seed, 3)).hull, base.hull);
  return report;
}

NormalHullReport normal_hull_check(const QMatrix& a, int probes, std::uint64_t seed) {
  const double scale = std::max(1.0, a.frobenius_norm());
  if (!is_normal(a, 1e-9 * scale * scale)) throw std::invalid_argument("normal_hull_check: matrix is not normal");
  const auto sweep = complex_range_sweep(chi_embed(a), 720, true);
  std::vector<Complex> folded;
  folded.reserve(sweep.boundary.size());
  for (const auto& z : sweep.boundary) folded.push_back(fold(z));
  const auto eig = spherical_spectrum(a).values;

  Rng rng(seed);
  NormalHullReport report;
  report.probes = probes;
  for (int l = 0; l < probes; ++l) {
    const auto d = random_direction4(rng);
    report.max_deviation = std::max(report.max_deviation, std::abs(omega_support(folded, d) - omega_support(eig, d)));
  }
  report.pass = report.max_deviation <= 1e-6;
  return report;
}

ProjectionReport projection_check(const QMatrix& a, std::size_t samples, std::uint64_t seed, int angles,
                                  int boundary_targets, double inside_tol) {
  const CMatrix chi = chi_embed(a);
  const auto sweep = complex_range_sweep(chi, angles, true);
  ProjectionReport report;
  report.samples = samples;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& s : sample_range(a, samples, seed)) {
    const Complex zp = class_rep(s.value);
    const double m =
        std::min({range_margin(chi, sweep, co(s.value)), range_margin(chi, sweep, zp), range_margin(chi, sweep, std::conj(zp))});
    report.min_margin = std::min(report.min_margin, m);
    if (m < -inside_tol) ++report.outside;
  }

  const auto vertices = hull2d(sweep.boundary);
  const int targets = std::min<int>(boundary_targets, static_cast<int>(vertices.size()));
  report.boundary_targets = targets;
  for (int t = 0; t < targets; ++t) {
    const Complex target = vertices[static_cast<std::size_t>(t) * vertices.size() / targets];
    const auto best = closest_projection(a, target, 8, split_seed(seed, 100 + t));
    report.max_boundary_gap = std::max(report.max_boundary_gap, best.residual);
  }
  return report;
}

Quaternion polarization_sum(const QMatrix& a, const QVector& x, const QVector& y) {
  Quaternion total;
  for (const auto& e : kUnits) {
    const QVector xe = x * e;
    const Quaternion diff = quadratic_form_unchecked(a, xe + y) - quadratic_form_unchecked(a, xe - y);
    total += diff * e;
  }
  return total;
}

PolarizationReport polarization_check(const QMatrix& a, int trials, std::uint64_t seed) {
  const std::size_t n = a.n();
  const double w = numerical_radius(a);
  const QMatrix h = (a + qadjoint(a)) * 0.5;
  Rng rng(seed);
  std::uniform_real_distribution<double> length(0.25, 2.0);
  PolarizationReport report;
  report.bound_slack = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const QVector x = random_unit_vector(n, rng) * Quaternion(length(rng));
    const QVector y = random_unit_vector(n, rng) * Quaternion(length(rng));
    const Quaternion p = polarization_sum(a, x, y);
    const Quaternion axy = qdot(x, a * y);
    const Quaternion general = Quaternion(8.0 * axy.re()) - qdot(y, a * x) * 4.0;
    report.general_error = std::max(report.general_error, distance(p, general));
    report.hermitian_error = std::max(report.hermitian_error, distance(polarization_sum(h, x, y), qdot(x, h * y) * 4.0));
    report.stated_gap = std::max(report.stated_gap, distance(p, axy * 4.0));
    report.bound_slack = std::min(report.bound_slack, 8.0 * w * (x.norm2() + y.norm2()) - p.norm());
  }
  return report;
}

std::string ConvexityEvidence::note() const {
  std::ostringstream out;
  if (counterexample()) {
    out << "nonconvex: " << (projection_probes - projection_attained) << " of " << projection_probes
        << " projected classes and " << (boundary_probes - boundary_attained) << " of " << boundary_probes
        << " W(chi_A) boundary classes were not attained";
  } else {
    out << "no counterexample in " << projection_probes + boundary_probes
        << " probes; the existence condition can only be falsified by sampling";
  }
  return out.str();
}

ConvexityEvidence convexity_evidence(const QMatrix& a, int probes, std::uint64_t seed, int angles) {
  ConvexityEvidence ev;
  const auto samples = sample_range(a, static_cast<std::size_t>(probes), seed);
  for (std::size_t l = 0; l < samples.size(); ++l) {
    ++ev.projection_probes;
    if (attain(a, fold(co(samples[l].value)), 32, split_seed(seed, l))) ++ev.projection_attained;
  }
  const auto sweep = complex_range_sweep(chi_embed(a), angles, true);
  const auto vertices = hull2d(sweep.boundary);
  const int targets = std::min<int>(probes, static_cast<int>(vertices.size()));
  for (int t = 0; t < targets; ++t) {
    ++ev.boundary_probes;
    const Complex target = fold(vertices[static_cast<std::size_t>(t) * vertices.size() / targets]);
    if (attain(a, target, 32, split_seed(seed, 1000 + t))) ++ev.boundary_attained;
  }
  return ev;
}

}  // namespace qnr
