#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracle.hpp"
#include "qnr/range.hpp"

using qnr::Complex;
using qnr::QMatrix;
using qnr::Quaternion;
using qnr::QVector;

namespace {

const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();

QMatrix radius_half_norm() { return QMatrix{{0, Quaternion(1, 0, 0, std::sqrt(3.0)), 0}, {0, 0, 0}, {0, 0, J}}; }
QMatrix nilpotent_jk() { return QMatrix{{0, 0, 0}, {J, 0, 0}, {0, K, 0}}; }
QMatrix diag_k11() { return QMatrix::diagonal({K, 1, 1}); }

}  // namespace

TEST_CASE("samples of the identity and of [[j]]") {
  for (const auto& s : qnr::sample_range(QMatrix::identity(3), 1000, 1)) CHECK(qnr::distance(s.value, 1.0) < 1e-14);
  for (const auto& s : qnr::sample_range(QMatrix{{J}}, 10000, 2)) {
    CHECK(std::abs(s.value.norm() - 1.0) < 1e-10);
    CHECK(std::abs(s.value.re()) < 1e-12);
  }
}

TEST_CASE("samples carry their witness and are deterministic per seed") {
  qnr::Rng rng(50);
  const auto a = qnr::random_matrix(3, rng);
  const auto s = qnr::sample_range(a, 100, 9), t = qnr::sample_range(a, 100, 9);
  for (std::size_t l = 0; l < s.size(); ++l) {
    CHECK(s[l].value == t[l].value);
    CHECK(qnr::distance(qnr::quadratic_form(a, s[l].witness), s[l].value) < 1e-14);
  }
  CHECK(qnr::sample_range(a, 10, 10)[0].value != s[0].value);
}

TEST_CASE("diag(k,1,1) keeps the range away from zero") {
  // |q|^2 = (1-t)^2 + t^2 with t = |x|^2, minimized at t = 1/2.
  double brute = 1e9;
  for (int l = 0; l <= 100000; ++l) {
    const double t = l / 100000.0;
    brute = std::min(brute, std::hypot(1.0 - t, t));
  }
  CHECK(brute == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
  double sampled = 1e9;
  for (const auto& s : qnr::sample_range(diag_k11(), 100000, 3)) sampled = std::min(sampled, s.value.norm());
  CHECK(sampled >= brute - 1e-12);
  CHECK(sampled > 0.7);
  CHECK(sampled < brute + 1e-2);
}

TEST_CASE("sections") {
  for (const auto& z : qnr::section_plus(qnr::sample_range(QMatrix::diagonal({K, K}), 20000, 4)).points) {
    CHECK(std::abs(z.real()) < 1e-12);
    CHECK(z.imag() >= 0.0);
    CHECK(z.imag() <= 1.0 + 1e-12);
  }
  const auto id = qnr::section_plus(qnr::sample_range(QMatrix::identity(2), 100, 5));
  REQUIRE(id.hull.size() == 1);
  CHECK(std::abs(id.hull[0] - 1.0) < 1e-14);

  const auto disk = qnr::section_plus(qnr::sample_range(QMatrix{{0, 1}, {0, 0}}, 100000, 6));
  double rmax = 0.0;
  for (const auto& z : disk.points) {
    CHECK(z.imag() >= 0.0);
    rmax = std::max(rmax, std::abs(z));
  }
  CHECK(rmax <= 0.5 + 1e-12);
  CHECK(rmax > 0.49);
}

TEST_CASE("complex projections lie in the complex range of chi") {
  const auto co = qnr::complex_projection_samples(qnr::sample_range(QMatrix::identity(2), 50, 1));
  for (const auto& z : co) CHECK(std::abs(z - 1.0) < 1e-14);

  const QMatrix j{{J}};
  const auto chi = qnr::chi_embed(j);
  const auto sweep = qnr::complex_range_sweep(chi);
  for (const auto& z : qnr::complex_projection_samples(qnr::sample_range(j, 2000, 2))) {
    CHECK(std::abs(z.real()) < 1e-12);
    CHECK(qnr::range_margin(chi, sweep, z) >= -1e-7);
  }

  qnr::Rng rng(51);
  for (int t = 0; t < 3; ++t) {
    const auto a = qnr::random_matrix(2 + t, rng);
    const auto report = qnr::projection_check(a, 10000, 7 + t);
    CHECK(report.outside == 0);
    CHECK(report.min_margin >= -1e-7);
    CHECK(report.max_boundary_gap <= 5e-3);
  }
}

TEST_CASE("numerical radius of the worked examples") {
  CHECK(qnr::numerical_radius(QMatrix::identity(3)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qnr::numerical_radius(radius_half_norm()) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(qnr::numerical_radius(nilpotent_jk()) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(qnr::numerical_radius(QMatrix{{0, 2.0 * J}, {0, 0}}) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("numerical radius against the Eigen oracle and its lower bound") {
  qnr::Rng rng(52);
  for (int t = 0; t < 8; ++t) {
    const auto a = qnr::random_matrix(1 + t % 4, rng);
    const double w = qnr::numerical_radius(a);
    CHECK(w == doctest::Approx(oracle::numerical_radius(a)).epsilon(1e-9));
    const auto lb = qnr::radius_lower_bound(a, 2048, 3 + t);
    CHECK(lb.value <= w + 1e-8);
    CHECK(lb.value >= w * (1.0 - 1e-3));
    CHECK(qnr::quadratic_form(a, lb.witness).norm() == doctest::Approx(lb.value).epsilon(1e-12));
  }
}

TEST_CASE("radius lower bounds with known witnesses") {
  auto lb = qnr::radius_lower_bound(QMatrix::identity(2));
  CHECK(lb.value == doctest::Approx(1.0).epsilon(1e-12));
  lb = qnr::radius_lower_bound(QMatrix::diagonal({K, K}));
  CHECK(lb.value == doctest::Approx(1.0).epsilon(1e-10));
  lb = qnr::radius_lower_bound(radius_half_norm());
  CHECK(lb.value >= 1.0 - 1e-4);
  CHECK(qnr::quadratic_form(radius_half_norm(), QVector::basis(3, 2)).norm() == doctest::Approx(1.0));
}

TEST_CASE("attaining section points") {
  const auto kk = QMatrix::diagonal({K, K});
  const auto x = qnr::attain_section_point(kk, Complex(0, 0.5));
  REQUIRE(x.has_value());
  CHECK(std::abs(qnr::class_rep(qnr::quadratic_form(kk, *x)) - Complex(0, 0.5)) < 1e-6);

  const auto y = qnr::attain_section_point(QMatrix::identity(2), 1.0);
  REQUIRE(y.has_value());
  CHECK(std::abs(qnr::class_rep(qnr::quadratic_form(QMatrix::identity(2), *y)) - 1.0) < 1e-6);

  CHECK_FALSE(qnr::attain_section_point(diag_k11(), 0.0).has_value());
  CHECK_FALSE(qnr::attain_section_point(QMatrix{{J}}, 0.0, 64).has_value());
  CHECK_THROWS_AS(qnr::attain_section_point(kk, Complex(0, -0.5)), std::invalid_argument);

  const auto p = qnr::attain_projection_point(QMatrix{{J}}, Complex(0, 0.5));
  REQUIRE(p.has_value());
}

TEST_CASE("section convexity by midpoints") {
  auto r = qnr::section_convexity_check(diag_k11(), 20, 1);
  CHECK(r.pass());
  CHECK(r.max_residual < 1e-6);
  CHECK(qnr::section_convexity_check(QMatrix::identity(2), 5, 1).pass());

  qnr::Rng rng(53);
  r = qnr::section_convexity_check(qnr::random_matrix(4, rng), 50, 2);
  CHECK(r.attained == 50);
  CHECK(r.max_residual < 1e-6);
}

TEST_CASE("vertical line connectedness") {
  const auto tri = qnr::section_plus(qnr::sample_range(QMatrix::diagonal({I, Quaternion(1, 2)}), 100000, 8));
  CHECK(qnr::vertical_line_connectedness(tri, 0.5, 0.05));
  CHECK(qnr::vertical_line_connectedness(tri, 10.0, 0.05));
  const auto split = qnr::make_section({{0.5, 0.1}, {0.5, 0.12}, {0.5, 0.9}});
  CHECK_FALSE(qnr::vertical_line_connectedness(split, 0.5, 0.1));
  CHECK(qnr::vertical_line_connectedness(split, 0.5, 1.0));
}

TEST_CASE("support of the circularization") {
  CHECK(qnr::omega_support({1.0}, {1, 0, 0, 0}) == doctest::Approx(1.0));
  CHECK(qnr::omega_support({Complex(0, 1)}, {0, 1, 0, 0}) == doctest::Approx(1.0));
  CHECK(qnr::omega_support({Complex(0, 1)}, {0, 0, 1, 0}) == doctest::Approx(1.0));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(qnr::omega_support({Complex(1, 1), 2.0}, {r, r, 0, 0}) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(qnr::omega_support({Complex(0, -1)}, {1, 0, 0, 0}), std::invalid_argument);

  // Brute force over circularized samples approaches the closed form from below.
  const std::vector<Complex> s{Complex(0.3, 1.2), Complex(-1, 0.4), 2.0};
  qnr::Rng rng(54);
  for (int t = 0; t < 10; ++t) {
    const auto d = qnr::random_direction4(rng);
    double brute = -1e9;
    for (const auto& q : qnr::circularize(s, 4000, 100 + t))
      brute = std::max(brute, d[0] * q.q0 + d[1] * q.q1 + d[2] * q.q2 + d[3] * q.q3);
    const double exact = qnr::omega_support(s, d);
    CHECK(brute <= exact + 1e-12);
    CHECK(brute >= exact - 5e-2);
  }
}

TEST_CASE("support equality for hulls of finite sets") {
  CHECK(qnr::prop_conv_check({Complex(0, 1), Complex(1, 2), 3.0}, 200, 1).pass);
  CHECK(qnr::prop_conv_check({Complex(0.5, 0.5)}, 50, 2).pass);
  qnr::Rng rng(55);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::vector<Complex> s;
    for (int l = 0; l < 5; ++l) s.emplace_back(g(rng), std::abs(g(rng)));
    const auto r = qnr::prop_conv_check(s, 200, 1000 + t);
    CHECK(r.pass);
    worst = std::max(worst, r.max_deviation);
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("set operations") {
  qnr::Rng rng(56);
  auto r = qnr::set_ops_check(QMatrix::identity(2), qnr::random_matrix(2, rng), 1, 20000);
  CHECK(r.affine_error < 1e-12);
  CHECK(r.pass());

  const auto a = qnr::random_matrix(3, rng), b = qnr::random_matrix(3, rng);
  r = qnr::set_ops_check(a, b, 2);
  CHECK(r.affine_error <= 1e-9 * r.scale);
  CHECK(r.sum_error <= 1e-9 * r.scale);
  CHECK(r.unitary_witness_error <= 1e-9 * r.scale);
  CHECK(r.adjoint_witness_error <= 1e-9 * r.scale);
  CHECK(r.unitary_hausdorff < 2e-2);
  CHECK(r.adjoint_hausdorff < 2e-2);

  const QMatrix j{{J}};
  r = qnr::set_ops_check(j, j, 3, 5000);
  CHECK(r.unitary_hausdorff < 1e-12);
  CHECK(r.adjoint_hausdorff < 1e-12);
  for (const auto& z : qnr::section_plus(qnr::sample_range(qnr::qadjoint(j), 1000, 4)).points)
    CHECK(std::abs(z - Complex(0, 1)) < 1e-10);
}

TEST_CASE("refined sections stay inside the range") {
  const auto disk = qnr::refined_section(QMatrix{{0, 1}, {0, 0}}, 2000, 3, 32);
  for (const auto& z : disk.points) CHECK(std::abs(z) <= 0.5 + 1e-12);
  double rmax = 0.0;
  for (const auto& z : disk.hull) rmax = std::max(rmax, std::abs(z));
  CHECK(rmax == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("hull of a normal matrix is spanned by its eigenvalues") {
  CHECK(qnr::normal_hull_check(QMatrix::diagonal({J, -J})).pass);
  CHECK(qnr::normal_hull_check(QMatrix::identity(3)).pass);
  qnr::Rng rng(57);
  for (int t = 0; t < 5; ++t) {
    std::normal_distribution<double> g;
    std::vector<Quaternion> d;
    for (int l = 0; l < 3; ++l) d.emplace_back(g(rng), g(rng));
    const auto u = qnr::random_unitary(3, rng);
    const auto r = qnr::normal_hull_check(qnr::qadjoint(u) * QMatrix::diagonal(d) * u, 200, t);
    CHECK(r.pass);
    CHECK(r.max_deviation < 1e-6);
  }
  CHECK_THROWS_AS(qnr::normal_hull_check(radius_half_norm()), std::invalid_argument);
}

TEST_CASE("polarization sums") {
  qnr::Rng rng(58);
  const auto a = qnr::random_matrix(3, rng);
  auto r = qnr::polarization_check(a, 50, 1);
  CHECK(r.general_error < 1e-10);
  CHECK(r.hermitian_error < 1e-10);
  CHECK(r.bound_slack >= 0.0);
  CHECK(r.stated_gap > 1e-3);

  const auto h = a + qnr::qadjoint(a);
  r = qnr::polarization_check(h, 50, 2);
  CHECK(r.stated_gap < 1e-10);
  CHECK(r.general_error < 1e-10);
}

TEST_CASE("convexity evidence") {
  CHECK(qnr::convexity_evidence(diag_k11(), 8, 1).counterexample());
  CHECK_FALSE(qnr::convexity_evidence(QMatrix::identity(2), 4, 1).counterexample());
}
