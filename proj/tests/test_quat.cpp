#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qnr/quat.hpp"

using qnr::Complex;
using qnr::Quaternion;

namespace {

bool near(const Quaternion& a, const Quaternion& b, double tol = 1e-12) { return qnr::distance(a, b) <= tol; }

Quaternion random_quaternion(qnr::Rng& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng), g(rng), g(rng)};
}

}  // namespace

TEST_CASE("hamilton product of the units") {
  const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(near(i * j, k));
  CHECK(near(j * k, i));
  CHECK(near(k * i, j));
  CHECK(near(j * i, -k));
  CHECK(near(i * j * k, Quaternion(-1)));
  CHECK(near(i * i, Quaternion(-1)));
}

TEST_CASE("product against hand expansion and identity") {
  const Quaternion q(2, 3, -1, 1);
  CHECK(near(Quaternion(1) * q, q));
  CHECK(near(q * Quaternion(1), q));
  CHECK(near(Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0), Quaternion(1, 1, 1, 1)));
}

TEST_CASE("product agrees with 2x2 complex representation") {
  qnr::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_quaternion(rng), b = random_quaternion(rng);
    CHECK(near(a * b, oracle::product(a, b), 1e-12));
  }
}

TEST_CASE("product is associative, conjugation reverses order, modulus multiplies") {
  qnr::Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_quaternion(rng), b = random_quaternion(rng), c = random_quaternion(rng);
    CHECK(near((a * b) * c, a * (b * c), 1e-11));
    CHECK(near((a * b).conj(), b.conj() * a.conj(), 1e-12));
    CHECK((a * b).norm() == doctest::Approx(a.norm() * b.norm()).epsilon(1e-13));
    CHECK(near(a * a.inverse(), Quaternion(1), 1e-12));
  }
}

TEST_CASE("conjugate, modulus, real and imaginary parts") {
  const Quaternion q(1, 2, 3, 4);
  CHECK(qnr::qconj(q) == Quaternion(1, -2, -3, -4));
  CHECK(qnr::qmod(q) == doctest::Approx(std::sqrt(30.0)));
  CHECK(qnr::qre(q) == 1.0);
  CHECK(qnr::qim(q) == Quaternion(0, 2, 3, 4));
  CHECK(near(qnr::qconj(Quaternion::j()) * Quaternion::j(), Quaternion(1)));
}

TEST_CASE("complex pair decomposition") {
  auto [a1, a2] = qnr::complex_pair(Quaternion::j());
  CHECK(a1 == Complex(0, 0));
  CHECK(a2 == Complex(1, 0));
  auto [b1, b2] = qnr::complex_pair(Quaternion(1, 2, 3, 4));
  CHECK(b1 == Complex(1, 2));
  CHECK(b2 == Complex(3, 4));
  auto [c1, c2] = qnr::complex_pair(Quaternion::i());
  CHECK(c1 == Complex(0, 1));
  CHECK(c2 == Complex(0, 0));

  // z1 + z2 j rebuilt with the Hamilton product.
  qnr::Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto q = random_quaternion(rng);
    auto [z1, z2] = qnr::complex_pair(q);
    CHECK(near(Quaternion::from_complex(z1) + Quaternion::from_complex(z2) * Quaternion::j(), q));
    CHECK(near(qnr::from_complex_pair(z1, z2), q));
  }
}

TEST_CASE("class representatives") {
  CHECK(qnr::class_rep(Quaternion::j()) == Complex(0, 1));
  CHECK(qnr::class_rep(Quaternion(3)) == Complex(3, 0));
  const Complex z = qnr::class_rep(Quaternion(1, 1, 1, 1));
  CHECK(z.real() == doctest::Approx(1.0));
  CHECK(z.imag() == doctest::Approx(std::sqrt(3.0)));
  CHECK(qnr::class_rep(Quaternion(0, -2, 0, 0)) == Complex(0, 2));
}

TEST_CASE("class representative is invariant under similarity") {
  qnr::Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto q = random_quaternion(rng), s = random_quaternion(rng);
    const Complex a = qnr::class_rep(q), b = qnr::class_rep(qnr::similarity(q, s));
    CHECK(std::abs(a - b) < 1e-12);
  }
}

TEST_CASE("same class") {
  CHECK(qnr::same_class(Quaternion::j(), Quaternion::k()));
  const Quaternion q(0.3, -1, 2, 0.5);
  CHECK(qnr::same_class(q, q));
  CHECK_FALSE(qnr::same_class(Quaternion(1, 1), Quaternion(1, 2)));
  CHECK(qnr::same_class(Quaternion(0, 1), Quaternion(0, -1)));
}

TEST_CASE("conjugator maps i onto the requested unit") {
  CHECK(near(qnr::conjugator_to(qnr::ImaginaryUnit(1, 0, 0)), Quaternion(1)));
  const Quaternion s = qnr::conjugator_to(qnr::ImaginaryUnit(-1, 0, 0));
  CHECK(near(qnr::similarity(Quaternion::i(), s), -Quaternion::i()));

  auto check = [](const qnr::ImaginaryUnit& m) {
    const Quaternion s = qnr::conjugator_to(m);
    CHECK(s.norm() == doctest::Approx(1.0));
    CHECK(qnr::distance(s.inverse() * Quaternion::i() * s, m.quaternion()) < 1e-10);
  };
  check(qnr::ImaginaryUnit(0, 1, 0));
  check(qnr::ImaginaryUnit(0, 0, 1));
  check(qnr::ImaginaryUnit(-1, 1e-9, 0));
  qnr::Rng rng(9);
  for (int t = 0; t < 200; ++t) check(qnr::random_imaginary_unit(rng));
}

TEST_CASE("imaginary unit rejects zero") { CHECK_THROWS_AS(qnr::ImaginaryUnit(0, 0, 0), std::invalid_argument); }

TEST_CASE("circularization") {
  for (const auto& q : qnr::circularize({Complex(3, 0)}, 20, 1)) CHECK(near(q, Quaternion(3)));
  for (const auto& q : qnr::circularize({Complex(0, 1)}, 50, 2)) {
    CHECK(q.re() == doctest::Approx(0.0));
    CHECK(q.norm() == doctest::Approx(1.0));
    CHECK(near(q * q, Quaternion(-1), 1e-12));
  }
  for (const auto& q : qnr::circularize({Complex(1, 2)}, 20, 3)) CHECK(std::abs(qnr::class_rep(q) - Complex(1, 2)) < 1e-12);
  CHECK(qnr::circularize({Complex(1, 2), Complex(0, 0)}, 7, 4).size() == 14);
  CHECK(qnr::circularize({Complex(1, 2)}, 5, 4) == qnr::circularize({Complex(1, 2)}, 5, 4));
  CHECK_THROWS_AS(qnr::circularize({Complex(0, -1)}, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(qnr::circularize({Complex(0, 1)}, 0, 1), std::invalid_argument);
}
