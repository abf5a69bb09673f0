// SPDX-License-Identifier: Apache-2.0
//
// Classical noncommutative quaternions, kept as the comparison baseline for
// the commutative model.  Two multiplication conventions are provided:
// mul_ij follows i*j = k, j*k = i, k*i = j; mul_ji follows the reversed
// rules j*i = k, k*j = i, i*k = j.  Reversing the rules is the same as
// swapping the operands, so mul_ji(p, q) == mul_ij(q, p) exactly.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qcorr/quat22.hpp"

namespace qcorr {

struct QuatH {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  QuatH() = default;

  QuatH(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d)))
      throw std::invalid_argument("QuatH: non-finite component");
  }

  std::array<double, 4> to_array() const { return {a, b, c, d}; }
};

inline bool operator==(const QuatH& p, const QuatH& q) {
  return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
}
inline bool operator!=(const QuatH& p, const QuatH& q) { return !(p == q); }

inline QuatH operator+(const QuatH& p, const QuatH& q) {
  return QuatH(p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d);
}
inline QuatH operator-(const QuatH& p, const QuatH& q) {
  return QuatH(p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d);
}
inline QuatH operator-(const QuatH& q) { return QuatH(-q.a, -q.b, -q.c, -q.d); }

// Product under i*j = k.  Terms are grouped pairwise to match Mat4::apply
// and so that mul_ji(p, q) reproduces mul_ij(q, p) bit-exactly.
inline QuatH mul_ij(const QuatH& p, const QuatH& q) {
  return QuatH((p.a * q.a - p.b * q.b) + (-p.c * q.c - p.d * q.d),
               (p.b * q.a + p.a * q.b) + (-p.d * q.c + p.c * q.d),
               (p.c * q.a + p.d * q.b) + (p.a * q.c - p.b * q.d),
               (p.d * q.a - p.c * q.b) + (p.b * q.c + p.a * q.d));
}

// Product under the reversed rules j*i = k.
inline QuatH mul_ji(const QuatH& p, const QuatH& q) {
  return QuatH((p.a * q.a - p.b * q.b) + (-p.c * q.c - p.d * q.d),
               (p.b * q.a + p.a * q.b) + (p.d * q.c - p.c * q.d),
               (p.c * q.a - p.d * q.b) + (p.a * q.c + p.b * q.d),
               (p.d * q.a + p.c * q.b) + (-p.b * q.c + p.a * q.d));
}

inline QuatH conj(const QuatH& q) { return QuatH(q.a, -q.b, -q.c, -q.d); }

inline double modulus(const QuatH& q) {
  return std::sqrt(q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d);
}

// Matrix of left multiplication under i*j = k:
// vec(mul_ij(q, p)) = to_matrix_ij(q).apply(vec(p)).
// A^T A = |q|^2 I and det A = |q|^4.
inline Mat4 to_matrix_ij(const QuatH& q) {
  Mat4 M;
  M.m = {q.a, -q.b, -q.c, -q.d,
         q.b, q.a,  -q.d, q.c,
         q.c, q.d,  q.a,  -q.b,
         q.d, -q.c, q.b,  q.a};
  return M;
}

struct QuatHSignal {
  std::vector<QuatH> samples;
  int lag_offset = 0;  // sample i holds lag i - lag_offset
};

// Noncommutative correlation r_n = sum_k q_k * v_{k-n} (mul_ij order) over
// lags n = -(L-1) .. N-1; same container and offset convention as the
// commutative path.
QuatHSignal correlate_direct_13(const QuatHSignal& v, const QuatHSignal& q);

}  // namespace qcorr
