#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qnr/twobytwo.hpp"

using qnr::Complex;
using qnr::QMatrix;
using qnr::Quaternion;
using qnr::QVector;
using qnr::RegionKind;

namespace {

const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();

}  // namespace

TEST_CASE("triangular input is recognized") {
  const auto t = qnr::triangularize2(QMatrix{{I, 1}, {0, 2.0 * I}});
  CHECK(std::abs(t.z1 - Complex(0, 1)) < 1e-10);
  CHECK(std::abs(t.z2 - Complex(0, 2)) < 1e-10);
  CHECK(t.p.norm() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(t.residual < 1e-12);
  CHECK(qnr::is_unitary(t.u, 1e-12));
}

TEST_CASE("diag(j, -j) has a repeated standard eigenvalue and p = 0") {
  const auto t = qnr::triangularize2(QMatrix::diagonal({J, -J}));
  CHECK(std::abs(t.z1 - Complex(0, 1)) < 1e-10);
  CHECK(std::abs(t.z2 - Complex(0, 1)) < 1e-10);
  CHECK(t.p.norm() < 1e-10);
}

TEST_CASE("triangularization round trip through a random unitary") {
  qnr::Rng rng(61);
  const QMatrix tri{{Quaternion(1, 1), J}, {0, 2}};
  for (int t = 0; t < 20; ++t) {
    const auto u = qnr::random_unitary(2, rng);
    const auto f = qnr::triangularize2(qnr::qadjoint(u) * tri * u);
    CHECK(std::abs(f.z1 - Complex(1, 1)) < 1e-7);
    CHECK(std::abs(f.z2 - 2.0) < 1e-7);
    CHECK(f.p.norm() == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("triangularization of random matrices preserves the Frobenius norm") {
  qnr::Rng rng(62);
  for (int t = 0; t < 30; ++t) {
    const auto a = qnr::random_matrix(2, rng);
    const auto f = qnr::triangularize2(a);
    CHECK(f.residual < 1e-8 * qnr::operator_norm(a));
    CHECK(f.z1.imag() >= 0.0);
    CHECK(f.z2.imag() >= 0.0);
    const double fro = std::norm(f.z1) + std::norm(f.z2) + f.p.norm2();
    CHECK(fro == doctest::Approx(a.frobenius_norm() * a.frobenius_norm()).epsilon(1e-10));
  }
  CHECK_THROWS_AS(qnr::triangularize2(QMatrix::identity(3)), qnr::DimensionError);
}

TEST_CASE("case classification of the worked examples") {
  auto r = qnr::classify_case(qnr::triangularize2(QMatrix::diagonal({K, K})));
  CHECK(r.case_number == 1);
  CHECK(r.kind == RegionKind::Segment);
  CHECK(std::abs(r.vertices[0]) < 1e-10);
  CHECK(std::abs(r.vertices[1] - Complex(0, 1)) < 1e-10);

  r = qnr::classify_case(qnr::triangularize2(QMatrix::diagonal({I, Quaternion(1, 2)})));
  CHECK(r.case_number == 2);
  CHECK(r.kind == RegionKind::Triangle);
  REQUIRE(r.vertices.size() == 3);
  CHECK(std::abs(r.vertices[2] - 1.0 / 3.0) < 1e-10);

  r = qnr::classify_case(qnr::triangularize2(QMatrix{{0, 2.0 * J}, {0, 0}}));
  CHECK(r.case_number == 3);
  CHECK(r.kind == RegionKind::HalfDisk);
  CHECK(r.radius == doctest::Approx(1.0));

  r = qnr::classify_case(qnr::triangularize2(QMatrix{{I, 1}, {0, Quaternion(1, 2)}}));
  CHECK(r.case_number == 4);
  CHECK(r.kind == RegionKind::MinkowskiBound);
  CHECK_FALSE(r.leftover);

  r = qnr::classify_case(qnr::triangularize2(QMatrix{{I, 1}, {0, I}}));
  CHECK(r.case_number == 4);
  CHECK(r.leftover);

  // Two real eigenvalues: the section is the real segment between them.
  r = qnr::classify_case(qnr::triangularize2(QMatrix::diagonal({1, 3})));
  CHECK(r.case_number == 2);
  CHECK(r.kind == RegionKind::Segment);
  CHECK(qnr::to_string(r.kind) == "segment");
}

TEST_CASE("region membership") {
  qnr::Region2D seg;
  seg.kind = RegionKind::Segment;
  seg.vertices = {0.0, Complex(0, 1)};
  CHECK(qnr::region_contains(seg, Complex(0, 0.5), 1e-12));
  CHECK_FALSE(qnr::region_contains(seg, Complex(0.1, 0.5), 1e-3));

  qnr::Region2D tri;
  tri.kind = RegionKind::Triangle;
  tri.vertices = {Complex(0, 1), Complex(1, 2), 1.0 / 3.0};
  const Complex centroid = (tri.vertices[0] + tri.vertices[1] + tri.vertices[2]) / 3.0;
  CHECK(qnr::region_contains(tri, centroid, 0.0));
  CHECK_FALSE(qnr::region_contains(tri, Complex(1, 0), 1e-3));

  qnr::Region2D disk;
  disk.kind = RegionKind::HalfDisk;
  disk.radius = 0.5;
  CHECK_FALSE(qnr::region_contains(disk, 0.6, 1e-9));
  CHECK(qnr::region_contains(disk, Complex(0.3, 0.3), 0.0));
  CHECK(qnr::region_distance(disk, Complex(0, -0.2)) == doctest::Approx(0.2));
}

TEST_CASE("region discretizations lie in the region") {
  qnr::Region2D disk;
  disk.kind = RegionKind::HalfDisk;
  disk.radius = 1.0;
  for (const auto& z : qnr::region_discretization(disk)) CHECK(qnr::region_distance(disk, z) < 1e-12);
  qnr::Region2D tri;
  tri.kind = RegionKind::Triangle;
  tri.vertices = {Complex(0, 1), Complex(1, 2), 1.0 / 3.0};
  for (const auto& z : qnr::region_discretization(tri)) CHECK(qnr::region_distance(tri, z) < 1e-12);
  qnr::Region2D bound;
  bound.kind = RegionKind::MinkowskiBound;
  CHECK_THROWS_AS(qnr::region_discretization(bound), std::invalid_argument);
}

TEST_CASE("explicit Case 2 edge witnesses") {
  // diag(z1, z2) with the witness (x, y j): <w, D w> = x^2 z1 + y^2 conj(z2).
  const Complex z1(0, 1), z2(1, 2);
  const QMatrix d = QMatrix::diagonal({Quaternion::from_complex(z1), Quaternion::from_complex(z2)});
  const Complex v = 1.0 / 3.0;
  for (int l = 0; l <= 10; ++l) {
    const double t = l / 10.0;
    const QVector w = qnr::case2_edge_witness(z1, z2, t);
    CHECK(w.norm() == doctest::Approx(1.0).epsilon(1e-12));
    const Complex got = qnr::class_rep(qnr::quadratic_form(d, w));
    CHECK(std::abs(got - (z1 * (1.0 - t) + v * t)) < 1e-12);
  }
}

TEST_CASE("closed-form cases against sampled sections") {
  auto r = qnr::case_equality_check(QMatrix::diagonal({K, K}), 100000, 1);
  CHECK(r.region.case_number == 1);
  CHECK(r.pass());
  CHECK(*r.filled < 5e-2);
  CHECK(r.containment < 5e-3);

  r = qnr::case_equality_check(QMatrix{{0, 1}, {0, 0}}, 100000, 2);
  CHECK(r.region.case_number == 3);
  CHECK(r.region.radius == doctest::Approx(0.5));
  CHECK(r.pass());
  CHECK(*r.young_slack >= -1e-12);
  CHECK(*r.witness_residual < 1e-8);

  r = qnr::case_equality_check(QMatrix::diagonal({I, Quaternion(1, 2)}), 100000, 3);
  CHECK(r.region.case_number == 2);
  CHECK(r.pass());
  CHECK(*r.v_attained < 1e-6);

  r = qnr::case_equality_check(QMatrix{{I, 1}, {0, Quaternion(1, 2)}}, 100000, 4);
  CHECK(r.region.case_number == 4);
  CHECK(r.containment < 5e-3);
  CHECK(*r.real_interval);
  CHECK_FALSE(r.filled.has_value());
}
