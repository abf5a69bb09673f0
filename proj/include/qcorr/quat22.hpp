// SPDX-License-Identifier: Apache-2.0
//
// Commutative quaternions stored as a pair of complex numbers.
//
// A quaternion q = a + b*e2 + c*e3 + d*e4 is kept as two complex components
// c1 = a + i*b and c2 = c + i*d.  The basis units multiply commutatively
// (e2*e2 = e3*e3 = -1, e4*e4 = +1, e2*e3 = e4, e2*e4 = -e3, e3*e4 = -e2),
// which collapses the product of two quaternions into complex arithmetic:
//
//   [a1, a2] * [b1, b2] = [a1*b1 - a2*b2, a1*b2 + a2*b1]
//
// The algebra has zero divisors, e.g. (1 + e4)*(1 - e4) = 0, so there is no
// general multiplicative inverse.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace qcorr {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// 4x4 real matrix, row major.  Holds the linear-map form of a quaternion
// product in either model.
struct Mat4 {
  std::array<double, 16> m{};

  double& at(std::size_t r, std::size_t c) { return m[4 * r + c]; }
  double at(std::size_t r, std::size_t c) const { return m[4 * r + c]; }

  // Each row is summed as (t0 + t1) + (t2 + t3).  The scalar quaternion
  // products use the same grouping, so both routes round identically.
  std::array<double, 4> apply(const std::array<double, 4>& v) const {
    std::array<double, 4> out{};
    for (std::size_t r = 0; r < 4; ++r) {
      const double* row = m.data() + 4 * r;
      out[r] = (row[0] * v[0] + row[1] * v[1]) + (row[2] * v[2] + row[3] * v[3]);
    }
    return out;
  }

  Mat4 transposed() const {
    Mat4 t;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) t.at(r, c) = at(c, r);
    return t;
  }

  Mat4 mul(const Mat4& o) const {
    Mat4 p;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        double s = 0.0;
        for (std::size_t k = 0; k < 4; ++k) s += at(r, k) * o.at(k, c);
        p.at(r, c) = s;
      }
    return p;
  }

  // Cofactor expansion along the first row.
  double det() const {
    auto d3 = [](double a, double b, double c, double d, double e, double f,
                 double g, double h, double i) {
      return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
    };
    const auto& v = m;
    const double m00 = d3(v[5], v[6], v[7], v[9], v[10], v[11], v[13], v[14], v[15]);
    const double m01 = d3(v[4], v[6], v[7], v[8], v[10], v[11], v[12], v[14], v[15]);
    const double m02 = d3(v[4], v[5], v[7], v[8], v[9], v[11], v[12], v[13], v[15]);
    const double m03 = d3(v[4], v[5], v[6], v[8], v[9], v[10], v[12], v[13], v[14]);
    return v[0] * m00 - v[1] * m01 + v[2] * m02 - v[3] * m03;
  }
};

// Value type for the commutative model.  Construction rejects NaN/Inf so
// corrupt data fails at the boundary instead of propagating through a
// correlation.
struct Quat22 {
  Cx c1{0.0, 0.0};
  Cx c2{0.0, 0.0};

  Quat22() = default;

  Quat22(Cx first, Cx second) : c1(first), c2(second) { check_finite(); }

  // Components in basis order (1, e2, e3, e4).
  Quat22(double a, double b, double c, double d) : c1(a, b), c2(c, d) { check_finite(); }

  static Quat22 e1() { return {1.0, 0.0, 0.0, 0.0}; }
  static Quat22 e2() { return {0.0, 1.0, 0.0, 0.0}; }
  static Quat22 e3() { return {0.0, 0.0, 1.0, 0.0}; }
  static Quat22 e4() { return {0.0, 0.0, 0.0, 1.0}; }

  std::array<double, 4> to_array() const {
    return {c1.real(), c1.imag(), c2.real(), c2.imag()};
  }

 private:
  void check_finite() const {
    if (!(std::isfinite(c1.real()) && std::isfinite(c1.imag()) &&
          std::isfinite(c2.real()) && std::isfinite(c2.imag())))
      throw std::invalid_argument("Quat22: non-finite component");
  }
};

inline bool operator==(const Quat22& p, const Quat22& q) {
  return p.c1 == q.c1 && p.c2 == q.c2;
}
inline bool operator!=(const Quat22& p, const Quat22& q) { return !(p == q); }

inline Quat22 operator+(const Quat22& p, const Quat22& q) {
  return Quat22(p.c1 + q.c1, p.c2 + q.c2);
}
inline Quat22 operator-(const Quat22& p, const Quat22& q) {
  return Quat22(p.c1 - q.c1, p.c2 - q.c2);
}
inline Quat22 operator-(const Quat22& q) { return Quat22(-q.c1, -q.c2); }

// Product [a1*b1 - a2*b2, a1*b2 + a2*b1], written out in reals with the same
// pairwise grouping as Mat4::apply.  This makes p*q == q*p and
// vec(p*q) == to_matrix(p).apply(vec(q)) hold bit-exactly, not just to
// floating-point tolerance.
inline Quat22 operator*(const Quat22& p, const Quat22& q) {
  const double a11 = p.c1.real(), a12 = p.c1.imag();
  const double a21 = p.c2.real(), a22 = p.c2.imag();
  const double b11 = q.c1.real(), b12 = q.c1.imag();
  const double b21 = q.c2.real(), b22 = q.c2.imag();
  const double ra = (a11 * b11 - a12 * b12) + (-a21 * b21 + a22 * b22);
  const double rb = (a12 * b11 + a11 * b12) + (-a22 * b21 - a21 * b22);
  const double rc = (a21 * b11 - a22 * b12) + (a11 * b21 - a12 * b22);
  const double rd = (a22 * b11 + a21 * b12) + (a12 * b21 + a11 * b22);
  return Quat22(Cx(ra, rb), Cx(rc, rd));
}

inline Quat22 conj(const Quat22& q) {
  return Quat22(std::conj(q.c1), std::conj(q.c2));
}

inline double modulus(const Quat22& q) {
  return std::sqrt(std::norm(q.c1) + std::norm(q.c2));
}

// q*q = [a1^2 - a2^2, 2*a1*a2].  Shares the evaluation order of the general
// product so the two agree exactly.
inline Quat22 square(const Quat22& q) { return q * q; }

inline Quat22 scale(double k, const Quat22& q) {
  return Quat22(k * q.c1, k * q.c2);
}
inline Quat22 scale(Cx k, const Quat22& q) {
  return Quat22(k * q.c1, k * q.c2);
}

// Matrix of left multiplication by q: vec(q*p) = to_matrix(q).apply(vec(p)).
// The first column is vec(q) itself.
inline Mat4 to_matrix(const Quat22& q) {
  const double a11 = q.c1.real(), a12 = q.c1.imag();
  const double a21 = q.c2.real(), a22 = q.c2.imag();
  Mat4 M;
  M.m = {a11, -a12, -a21, a22,
         a12, a11,  -a22, -a21,
         a21, -a22, a11,  -a12,
         a22, a21,  a12,  a11};
  return M;
}

// Exponential kernel along -e2: [exp(-i*2*pi*power/n), 0].  The power is
// reduced mod n first, so whole turns come back as exactly 1.
inline Quat22 root_of_unity(std::size_t n, long long power) {
  if (n == 0) throw std::invalid_argument("root_of_unity: n must be positive");
  const long long nn = static_cast<long long>(n);
  long long k = power % nn;
  if (k < 0) k += nn;
  if (k == 0) return Quat22(Cx(1.0, 0.0), Cx(0.0, 0.0));
  const double ang = -2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
  return Quat22(Cx(std::cos(ang), std::sin(ang)), Cx(0.0, 0.0));
}

}  // namespace qcorr
