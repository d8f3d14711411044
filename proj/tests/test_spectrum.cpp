#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "qnr/spectrum.hpp"

using qnr::Complex;
using qnr::QMatrix;
using qnr::Quaternion;
using qnr::QVector;

namespace {

const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();

// Real matrix of X -> A X - X z on H^n = R^{4n}.
Eigen::MatrixXd real_operator(const QMatrix& a, Complex z) {
  const std::size_t dim = 4 * a.n();
  Eigen::MatrixXd m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<double> e(dim, 0.0);
    e[c] = 1.0;
    const QVector x = QVector::from_real(e);
    const auto y = (a * x - x * Quaternion::from_complex(z)).to_real();
    for (std::size_t r = 0; r < dim; ++r) m(Eigen::Index(r), Eigen::Index(c)) = y[r];
  }
  return m;
}

double eigen_residual(const QMatrix& a, const QVector& x, Complex z) {
  return (a * x - x * Quaternion::from_complex(z)).norm();
}

}  // namespace

TEST_CASE("delta matrix") {
  CHECK(qnr::delta_matrix(QMatrix::identity(3), Quaternion(1)).frobenius_norm() == 0.0);
  CHECK(qnr::delta_matrix(QMatrix::diagonal({J, -J}), I).frobenius_norm() < 1e-15);
  // Delta depends on q only through its class.
  qnr::Rng rng(41);
  const auto a = qnr::random_matrix(3, rng);
  const auto d1 = qnr::delta_matrix(a, Quaternion(0.5, 1, 0, 0)), d2 = qnr::delta_matrix(a, Quaternion(0.5, 0, 0.6, -0.8));
  CHECK((d1 - d2).frobenius_norm() < 1e-14);
}

TEST_CASE("spherical spectrum of the worked examples") {
  auto s = qnr::spherical_spectrum(QMatrix::diagonal({J, -J}));
  REQUIRE(s.values.size() == 1);
  CHECK(std::abs(s.values[0] - Complex(0, 1)) < 1e-10);
  CHECK(s.multiplicities[0] == 2);

  s = qnr::spherical_spectrum(QMatrix::identity(3));
  REQUIRE(s.values.size() == 1);
  CHECK(std::abs(s.values[0] - 1.0) < 1e-12);
  CHECK(s.multiplicities[0] == 3);

  s = qnr::spherical_spectrum(QMatrix::diagonal({Quaternion(1, 0, 2, 0), 3}));
  REQUIRE(s.values.size() == 2);
  CHECK(std::abs(s.values[0] - Complex(1, 2)) < 1e-10);
  CHECK(std::abs(s.values[1] - 3.0) < 1e-10);
}

TEST_CASE("spectrum of U* D U recovers the class representatives of D") {
  qnr::Rng rng(42);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + t % 4;
    std::vector<Quaternion> d;
    std::vector<Complex> expected;
    std::normal_distribution<double> g;
    for (std::size_t l = 0; l < n; ++l) {
      const Quaternion q(g(rng), g(rng), g(rng), g(rng));
      d.push_back(q);
      expected.push_back(qnr::class_rep(q));
    }
    const auto u = qnr::random_unitary(n, rng);
    const auto a = qnr::qadjoint(u) * QMatrix::diagonal(d) * u;
    const auto s = qnr::spherical_spectrum(a);
    int total = 0;
    for (int m : s.multiplicities) total += m;
    CHECK(total == int(n));
    for (const auto& z : expected) {
      const double best = std::abs(*std::min_element(s.values.begin(), s.values.end(), [&](Complex x, Complex y) {
        return std::abs(x - z) < std::abs(y - z);
      }) - z);
      CHECK(best < 1e-8);
    }
    const auto report = qnr::verify_spectrum(a);
    CHECK(report.all_pass);
  }
}

TEST_CASE("spectrum agrees with folded Eigen eigenvalues of chi") {
  qnr::Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    const auto a = qnr::random_matrix(1 + t % 5, rng);
    const auto s = qnr::spherical_spectrum(a);
    const auto ref = oracle::folded_eigenvalues(a);
    for (const auto& z : ref) {
      double best = 1e9;
      for (const auto& v : s.values) best = std::min(best, std::abs(v - z));
      CHECK(best < 1e-8);
    }
  }
}

TEST_CASE("defective eigenvalue is clustered, not split") {
  // Jordan block over C: double eigenvalue 1 + i.
  const QMatrix a{{Quaternion(1, 1), 1}, {0, Quaternion(1, 1)}};
  const auto s = qnr::spherical_spectrum(a);
  REQUIRE(s.values.size() == 1);
  CHECK(s.multiplicities[0] == 2);
  CHECK(std::abs(s.values[0] - Complex(1, 1)) < 1e-6);
}

TEST_CASE("right eigenvectors lie in the real null space") {
  const auto a = QMatrix::diagonal({J, -J});
  const auto x = qnr::right_eigenvector(a, Complex(0, 1));
  CHECK(x.norm() == doctest::Approx(1.0));
  CHECK(eigen_residual(a, x, Complex(0, 1)) < 1e-10);

  // Independent route: the null space of the R^8 operator is 4-dimensional
  // here (each diagonal entry contributes a copy of C), and x lies in it.
  const auto op = real_operator(a, Complex(0, 1));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(op, Eigen::ComputeFullV);
  const auto sv = svd.singularValues();
  int nullity = 0;
  for (Eigen::Index l = 0; l < sv.size(); ++l)
    if (sv(l) < 1e-12) ++nullity;
  CHECK(nullity == 4);
  const auto xr = x.to_real();
  CHECK((op * Eigen::VectorXd::Map(xr.data(), Eigen::Index(xr.size()))).norm() < 1e-10);

  const auto e = qnr::right_eigenvector(QMatrix::identity(3), 1.0);
  CHECK(eigen_residual(QMatrix::identity(3), e, 1.0) < 1e-12);

  const auto d = QMatrix::diagonal({3, Quaternion(1, 0, 2, 0)});
  const auto x3 = qnr::right_eigenvector(d, 3.0);
  CHECK(x3[0].norm() == doctest::Approx(1.0));
  CHECK(x3[1].norm() < 1e-10);

  CHECK_THROWS_AS(qnr::right_eigenvector(d, Complex(5, 0)), qnr::SpectrumError);
}

TEST_CASE("verification report over random matrices") {
  qnr::Rng rng(44);
  for (int t = 0; t < 20; ++t) {
    const auto a = qnr::random_matrix(1 + t % 6, rng);
    const auto report = qnr::verify_spectrum(a);
    CHECK(report.all_pass);
    for (const auto& c : report.checks) {
      CHECK(c.delta_residual <= report.bound);
      CHECK(c.eigen_residual <= 1e-7 * qnr::operator_norm(a));
    }
  }
  CHECK(qnr::verify_spectrum(QMatrix::diagonal({J, -J})).all_pass);
  CHECK(qnr::verify_spectrum(QMatrix::identity(2)).all_pass);
}
