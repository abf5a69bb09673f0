// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qcorr/quat22.hpp"

using qcorr::Cx;
using qcorr::Mat4;
using qcorr::Quat22;

namespace {

bool approx_quat(const Quat22& p, const Quat22& q, double tol) {
  return qcorr::modulus(p - q) <= tol;
}

double rel_tol(const Quat22& ref, double eps) {
  return eps * std::max(1.0, qcorr::modulus(ref));
}

const Quat22 kQ1(Cx(1, 4), Cx(-1, 2));
const Quat22 kQ2(Cx(2, 5), Cx(3, -1));

}  // namespace

TEST_CASE("addition is componentwise") {
  CHECK(kQ1 + kQ2 == Quat22(Cx(3, 9), Cx(2, 1)));
  const Quat22 q = oracles::random_quat();
  CHECK(q + Quat22() == q);
  CHECK(q + (-q) == Quat22());
}

TEST_CASE("product of the reference pair") {
  CHECK(kQ1 * kQ2 == Quat22(Cx(-17, 6), Cx(-5, 10)));
  CHECK(kQ2 * kQ1 == Quat22(Cx(-17, 6), Cx(-5, 10)));
}

TEST_CASE("basis unit products") {
  const Quat22 e1 = Quat22::e1(), e2 = Quat22::e2(), e3 = Quat22::e3(), e4 = Quat22::e4();
  CHECK(e2 * e2 == -e1);
  CHECK(e2 * e3 == e4);
  CHECK(e2 * e4 == -e3);
  CHECK(e3 * e2 == e4);
  CHECK(e3 * e3 == -e1);
  CHECK(e3 * e4 == -e2);
  CHECK(e4 * e2 == -e3);
  CHECK(e4 * e3 == -e2);
  CHECK(e4 * e4 == e1);
  CHECK(e1 * e2 == e2);
  CHECK(e1 * e3 == e3);
  CHECK(e1 * e4 == e4);
}

TEST_CASE("zero divisors exist") {
  const Quat22 p = Quat22::e1() + Quat22::e4();
  const Quat22 q = Quat22::e1() - Quat22::e4();
  CHECK(p != Quat22());
  CHECK(q != Quat22());
  CHECK(p * q == Quat22());
}

TEST_CASE("second component zero reduces to complex arithmetic") {
  for (int t = 0; t < 200; ++t) {
    const Cx a(oracles::uniform(), oracles::uniform());
    const Cx b(oracles::uniform(), oracles::uniform());
    const Quat22 prod = Quat22(a, Cx(0, 0)) * Quat22(b, Cx(0, 0));
    CHECK(prod.c2 == Cx(0, 0));
    CHECK(std::abs(prod.c1 - a * b) <= 1e-12 * std::max(1.0, std::abs(a * b)));
  }
}

TEST_CASE("commutativity is exact") {
  for (int t = 0; t < 10000; ++t) {
    const Quat22 p = oracles::random_quat();
    const Quat22 q = oracles::random_quat();
    CHECK(p * q == q * p);
  }
}

TEST_CASE("associativity and distributivity within 1e-12") {
  for (int t = 0; t < 10000; ++t) {
    const Quat22 p = oracles::random_quat();
    const Quat22 q = oracles::random_quat();
    const Quat22 r = oracles::random_quat();
    const Quat22 lhs = (p * q) * r;
    CHECK(approx_quat(lhs, p * (q * r), rel_tol(lhs, 1e-12)));
    const Quat22 dist = p * (q + r);
    CHECK(approx_quat(dist, p * q + p * r, rel_tol(dist, 1e-12)));
  }
}

TEST_CASE("matrix form of the product") {
  const Mat4 M = to_matrix(kQ1);

  SUBCASE("first column is the quaternion itself") {
    const auto v = kQ1.to_array();
    for (std::size_t r = 0; r < 4; ++r) CHECK(M.at(r, 0) == v[r]);
  }

  SUBCASE("determinant of the reference matrix") {
    CHECK(std::abs(M.det() - 340.0) <= 1e-9);
  }

  SUBCASE("identity quaternion maps to the identity matrix") {
    const Mat4 I = to_matrix(Quat22::e1());
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) CHECK(I.at(r, c) == (r == c ? 1.0 : 0.0));
  }

  SUBCASE("matrix route equals the scalar product bit for bit") {
    for (int t = 0; t < 1000; ++t) {
      const Quat22 q = oracles::random_quat();
      const Quat22 p = oracles::random_quat();
      const auto via_matrix = to_matrix(q).apply(p.to_array());
      const auto direct = (q * p).to_array();
      for (std::size_t i = 0; i < 4; ++i) CHECK(via_matrix[i] == direct[i]);
    }
  }
}

TEST_CASE("conjugation") {
  CHECK(conj(Quat22::e2()) == -Quat22::e2());
  CHECK(conj(Quat22::e3()) == Quat22::e3());
  CHECK(conj(Quat22::e4()) == -Quat22::e4());
  const Quat22 q = oracles::random_quat();
  CHECK(conj(conj(q)) == q);
}

TEST_CASE("product with own conjugate") {
  for (int t = 0; t < 200; ++t) {
    const Quat22 q = oracles::random_quat();
    const Cx first = q.c1 * std::conj(q.c1) - q.c2 * std::conj(q.c2);
    const Cx second = q.c1 * std::conj(q.c2) + q.c2 * std::conj(q.c1);
    const Quat22 want(first, second);
    CHECK(approx_quat(q * conj(q), want, rel_tol(want, 1e-12)));
  }
  const Quat22 c(Cx(3, -2), Cx(0, 0));
  const Quat22 prod = c * conj(c);
  CHECK(std::abs(prod.c1 - Cx(13, 0)) <= 1e-12);
  CHECK(prod.c2 == Cx(0, 0));
}

TEST_CASE("modulus") {
  CHECK(qcorr::modulus(Quat22(Cx(3, 0), Cx(4, 0))) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(qcorr::modulus(Quat22::e1()) == 1.0);
  CHECK(qcorr::modulus(Quat22::e2()) == 1.0);
  CHECK(qcorr::modulus(Quat22::e3()) == 1.0);
  CHECK(qcorr::modulus(Quat22::e4()) == 1.0);
  CHECK(qcorr::modulus(kQ1) == doctest::Approx(std::sqrt(22.0)).epsilon(1e-14));
  for (int t = 0; t < 200; ++t) {
    const Quat22 q = oracles::random_quat();
    const double m2 = qcorr::modulus(q) * qcorr::modulus(q);
    const double want = std::norm(q.c1) + std::norm(q.c2);
    CHECK(std::abs(m2 - want) <= 8 * std::numeric_limits<double>::epsilon() * want + 1e-300);
  }
}

TEST_CASE("squaring") {
  CHECK(square(Quat22::e4()) == Quat22::e1());
  CHECK(square(Quat22::e2()) == -Quat22::e1());
  for (int t = 0; t < 1000; ++t) {
    const Quat22 q = oracles::random_quat();
    CHECK(square(q) == q * q);
    const Quat22 algebraic(q.c1 * q.c1 - q.c2 * q.c2, 2.0 * (q.c1 * q.c2));
    CHECK(approx_quat(square(q), algebraic, rel_tol(algebraic, 1e-12)));
  }
}

TEST_CASE("scaling") {
  CHECK(scale(2.0, Quat22(Cx(1, 0), Cx(0, 3))) == Quat22(Cx(2, 0), Cx(0, 6)));
  const Quat22 q = oracles::random_quat();
  CHECK(scale(1.0, q) == q);
  CHECK(scale(Cx(0, 1), Quat22::e1()) == Quat22::e2());
}

TEST_CASE("roots of unity") {
  CHECK(qcorr::root_of_unity(7, 0) == Quat22::e1());
  CHECK(qcorr::root_of_unity(7, 7) == Quat22::e1());
  CHECK(qcorr::root_of_unity(7, -14) == Quat22::e1());
  CHECK(approx_quat(qcorr::root_of_unity(4, 1), -Quat22::e2(), 1e-15));
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + std::size_t(oracles::uniform(0, 40));
    const long long p = static_cast<long long>(oracles::uniform(-100, 100));
    const Quat22 w = qcorr::root_of_unity(n, p);
    CHECK(w.c2 == Cx(0, 0));
    CHECK(qcorr::modulus(w) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(qcorr::root_of_unity(0, 1), std::invalid_argument);
}

TEST_CASE("non-finite components are rejected") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Quat22(nan, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Quat22(0, inf, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Quat22(Cx(0, 0), Cx(0, -inf)), std::invalid_argument);
}
