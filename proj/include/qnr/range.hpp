// Sampling and refinement of the quaternionic numerical range W(A), its
// upper complex section, the projection onto C, the numerical radius, and
// the support-function toolkit for circularized sets.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnr/chi.hpp"
#include "qnr/geometry.hpp"
#include "qnr/sphere_opt.hpp"

namespace qnr {

struct SamplePoint {
  Quaternion value;  ///< <X, A X>
  QVector witness;   ///< the unit X
};

struct Section2D {
  std::vector<Complex> points;  ///< all with im >= 0
  std::vector<Complex> hull;    ///< convex hull vertices, counter-clockwise
};

struct SupportProbe {
  std::array<double, 4> direction{};
  double value = 0.0;
};

/// count independent X uniform on the unit sphere of H^n. Deterministic per seed.
std::vector<SamplePoint> sample_range(const QMatrix& a, std::size_t count, std::uint64_t seed);

/// class_rep of each sample, plus the hull.
Section2D section_plus(const std::vector<SamplePoint>& samples);
Section2D make_section(std::vector<Complex> points);

/// Sampled section whose hull is sharpened: for each of `directions` unit
/// directions d, the sample maximizing <d, class_rep(q)> is pushed further by
/// ascent and the attained value is added to the points.
Section2D refined_section(const QMatrix& a, std::size_t samples, std::uint64_t seed, int directions = 128,
                          int ascent_steps = 2000);

/// co(q) = q0 + q1 i of each sample.
std::vector<Complex> complex_projection_samples(const std::vector<SamplePoint>& samples);

/// w(A) as the complex numerical radius of chi_A.
double numerical_radius(const QMatrix& a, int angles = 720);

struct RadiusLowerBound {
  double value = 0.0;
  QVector witness;
};

/// Best sampled |<X, A X>|, refined by finite-difference ascent from the
/// four best samples. ascent_steps caps the iterations of each ascent.
RadiusLowerBound radius_lower_bound(const QMatrix& a, std::size_t count = 4096, std::uint64_t seed = 42,
                                    int ascent_steps = 20000);

/// Searches for a unit X with class_rep(<X, A X>) = target (target.im >= 0).
/// Multistart from the `starts` sampled points closest to the target; a
/// witness is returned only when the residual is below 1e-6.
std::optional<QVector> attain_section_point(const QMatrix& a, Complex target, int starts = 32,
                                            std::uint64_t seed = 42);

/// Same, for co(<X, A X>) = target.
std::optional<QVector> attain_projection_point(const QMatrix& a, Complex target, int starts = 32,
                                               std::uint64_t seed = 42);

/// Best multistart attempt at co(<X, A X>) = target; `residual` is the
/// achieved |co(q) - target| whether or not the target is in range.
SphereSolveResult closest_projection(const QMatrix& a, Complex target, int starts = 8, std::uint64_t seed = 42);

struct ConvexityReport {
  int pairs = 0;
  int attained = 0;
  int retried = 0;  ///< pairs that needed the enlarged budget
  double max_residual = 0.0;
  std::vector<Complex> failures;  ///< midpoints never attained
  bool pass() const { return attained == pairs; }
};

/// Midpoints of random pairs of section points, attained inside the
/// compression of A onto span{X, Y}. A failed pair is retried once with four
/// times the multistart budget.
ConvexityReport section_convexity_check(const QMatrix& a, int pairs, std::uint64_t seed, int starts = 32);

/// Points of the section within strip_width of re = alpha, sorted by im, form
/// a single cluster (consecutive gaps below gap_tol). Vacuously true when the
/// strip is empty. strip_width <= 0 means gap_tol / 2.
bool vertical_line_connectedness(const Section2D& section, double alpha, double gap_tol, double strip_width = 0.0);

/// Support function of conv(Omega_S) at the direction d in R^4:
/// max over a + ib in S of a d0 + b |(d1, d2, d3)|. Throws on im < 0.
double omega_support(const std::vector<Complex>& s, const std::array<double, 4>& d);

std::array<double, 4> random_direction4(Rng& rng);

struct PropConvReport {
  int probes = 0;
  double max_deviation = 0.0;
  bool pass = true;
};

/// Compares the support of conv(Omega_S) computed from S, from the hull
/// vertices of S, and from dense convex combinations of S; each must agree
/// within 1e-9.
PropConvReport prop_conv_check(const std::vector<Complex>& s, int probes, std::uint64_t seed);

struct SetOpsReport {
  double affine_error = 0.0;        ///< max |<X,(aI+bA)X> - (a + b<X,AX>)|
  double sum_error = 0.0;           ///< max |<X,(A+B)X> - <X,AX> - <X,BX>|
  double unitary_witness_error = 0.0;  ///< max |<X,U*AUX> - <UX,AUX>|
  double unitary_hausdorff = 0.0;   ///< section hulls of U*AU and A
  double adjoint_witness_error = 0.0;  ///< max |class_rep <X,A*X> - class_rep <X,AX>|
  double adjoint_hausdorff = 0.0;   ///< section hulls of A* and A
  double hausdorff_tol = 2e-2;
  double scale = 1.0;  ///< identity errors are compared against 1e-9 * scale
  bool pass() const;
};

/// Set operations on W: affine maps and sums witness by witness, unitary
/// invariance and adjoint invariance on the sampled sections.
SetOpsReport set_ops_check(const QMatrix& a, const QMatrix& b, std::uint64_t seed, std::size_t samples = 100000);

struct NormalHullReport {
  int probes = 0;
  double max_deviation = 0.0;
  bool pass = true;
};

/// For normal A, the support functions of conv(Omega) of W(chi_A) and of the
/// standard eigenvalues agree within 1e-6. Throws std::invalid_argument when A
/// is not normal.
NormalHullReport normal_hull_check(const QMatrix& a, int probes = 200, std::uint64_t seed = 42);

struct ProjectionReport {
  std::size_t samples = 0;
  double min_margin = 0.0;    ///< smallest support margin over co(q) and z_+-; >= -tol means inside
  std::size_t outside = 0;    ///< samples with any margin below -tol
  int boundary_targets = 0;
  double max_boundary_gap = 0.0;  ///< worst distance from a sweep point to a refined projection
  bool pass(double inside_tol = 1e-7, double gap_tol = 5e-3) const {
    return outside == 0 && min_margin >= -inside_tol && max_boundary_gap <= gap_tol;
  }
};

/// co(q) and both class representatives re(q) +- i|im(q)| of every sample lie
/// in W(chi_A); conversely `boundary_targets` points of the sweep boundary are
/// reached by optimizer-refined projections.
ProjectionReport projection_check(const QMatrix& a, std::size_t samples, std::uint64_t seed, int angles = 720,
                                  int boundary_targets = 24, double inside_tol = 1e-7);

struct PolarizationReport {
  double general_error = 0.0;  ///< |P - (8 re<X,AY> - 4<Y,AX>)|
  double hermitian_error = 0.0;  ///< |P_H - 4<X,HY>| for H = (A + A*)/2
  double stated_gap = 0.0;     ///< |P - 4<X,AY>|, zero only when A is self-adjoint
  double bound_slack = 0.0;    ///< min of w (|X|^2+|Y|^2) 8 - |P|, must be >= 0
};

/// P(X, Y) = sum over e in {1,i,j,k} of [q(Xe + Y) - q(Xe - Y)] e, where
/// q(Z) = <Z, A Z>, for `trials` random pairs.
PolarizationReport polarization_check(const QMatrix& a, int trials, std::uint64_t seed);

/// Sum above for one pair.
Quaternion polarization_sum(const QMatrix& a, const QVector& x, const QVector& y);

struct ConvexityEvidence {
  int projection_probes = 0;
  int projection_attained = 0;  ///< class of co(<X,AX>) attained in W
  int boundary_probes = 0;
  int boundary_attained = 0;    ///< sweep boundary points of W(chi_A) attained in W
  bool counterexample() const {
    return projection_attained < projection_probes || boundary_attained < boundary_probes;
  }
  std::string note() const;
};

/// Sampled evidence on the equivalent convexity conditions: whether co(q)
/// for sampled q lies in W cap C, and whether W(chi_A) points belong to W.
/// A miss is evidence of nonconvexity; full attainment proves nothing.
ConvexityEvidence convexity_evidence(const QMatrix& a, int probes, std::uint64_t seed, int angles = 720);

}  // namespace qnr
