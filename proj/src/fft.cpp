// SPDX-License-Identifier: Apache-2.0

#include "qcorr/fft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "qcorr/opcount.hpp"
#include "qcorr/parallel.hpp"

namespace qcorr {
namespace {

constexpr double kTau = 2.0 * kPi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

template <bool Counted>
inline Cx cmul(Cx a, Cx b) {
  if constexpr (Counted) opcount::tally_cmul();
  return a * b;
}

// In-place iterative radix-2 transform, no output scaling.  Twiddles come
// from a per-call table built with polar(), so no complex multiplications
// are spent (or charged) generating them and the charged count is the same
// for every call of a given length.
template <bool Counted>
void fft_pow2(CVec& a, bool inverse) {
  const std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  CVec tw(n / 2);
  const double sgn = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n / 2; ++k)
    tw[k] = std::polar(1.0, sgn * kTau * static_cast<double>(k) / static_cast<double>(n));
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const Cx u = a[i + j];
        const Cx t = cmul<Counted>(tw[j * stride], a[i + j + half]);
        a[i + j] = u + t;
        a[i + j + half] = u - t;
      }
    }
  }
}

// Chirp-z reduction: an N-point transform as a power-of-two circular
// convolution of length M >= 2N-1.  The squared index in the chirp is taken
// mod 2N, which keeps the angle argument small without changing its value.
template <bool Counted>
CVec bluestein(std::span<const Cx> x, bool inverse) {
  const std::size_t n = x.size();
  const double sgn = inverse ? 1.0 : -1.0;
  CVec chirp(n);
  const std::size_t two_n = 2 * n;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t k2 = (k * k) % two_n;
    chirp[k] = std::polar(1.0, sgn * kPi * static_cast<double>(k2) / static_cast<double>(n));
  }
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;
  CVec a(m, Cx{0.0, 0.0}), b(m, Cx{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) a[k] = cmul<Counted>(x[k], chirp[k]);
  b[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);
  fft_pow2<Counted>(a, false);
  fft_pow2<Counted>(b, false);
  for (std::size_t k = 0; k < m; ++k) a[k] = cmul<Counted>(a[k], b[k]);
  fft_pow2<Counted>(a, true);
  const double inv_m = 1.0 / static_cast<double>(m);
  CVec out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = cmul<Counted>(chirp[k], a[k] * inv_m);
  return out;
}

template <bool Counted>
CVec dft_impl(std::span<const Cx> x, bool inverse) {
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("dft: empty input");
  CVec out;
  if (is_pow2(n)) {
    out.assign(x.begin(), x.end());
    fft_pow2<Counted>(out, inverse);
  } else {
    out = bluestein<Counted>(x, inverse);
  }
  if (inverse) {
    const double s = 1.0 / static_cast<double>(n);
    for (auto& v : out) v *= s;
  }
  return out;
}

void check_grid(const ComplexGrid& g, const char* who) {
  if (g.rows == 0 || g.cols == 0 || g.data.size() != g.rows * g.cols)
    throw std::invalid_argument(std::string(who) + ": malformed grid");
}

template <bool Counted>
void correlation_spectrum_line(const CVec& v1, const CVec& v2,
                               const CVec& q1, const CVec& q2,
                               std::size_t n, CVec& r1, CVec& r2) {
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t rp = p == 0 ? 0 : n - p;
    const Cx a = v1[rp], b = v2[rp];
    r1[p] = cmul<Counted>(a, q1[p]) - cmul<Counted>(b, q2[p]);
    r2[p] = cmul<Counted>(a, q2[p]) + cmul<Counted>(b, q1[p]);
  }
}

}  // namespace

CVec dft(std::span<const Cx> x, FftDirection dir) {
  const bool inv = dir == FftDirection::inverse;
  return opcount::counting_active() ? dft_impl<true>(x, inv) : dft_impl<false>(x, inv);
}

namespace spectral_detail {

CVec dft_radix2(std::span<const Cx> x, bool inverse) {
  if (!is_pow2(x.size()))
    throw std::invalid_argument("dft_radix2: length must be a power of two");
  CVec out(x.begin(), x.end());
  fft_pow2<false>(out, inverse);
  if (inverse) {
    const double s = 1.0 / static_cast<double>(out.size());
    for (auto& v : out) v *= s;
  }
  return out;
}

CVec dft_bluestein(std::span<const Cx> x, bool inverse) {
  if (x.empty()) throw std::invalid_argument("dft_bluestein: empty input");
  CVec out = bluestein<false>(x, inverse);
  if (inverse) {
    const double s = 1.0 / static_cast<double>(out.size());
    for (auto& v : out) v *= s;
  }
  return out;
}

}  // namespace spectral_detail

ComplexGrid dft2d(const ComplexGrid& g, FftDirection dir) {
  check_grid(g, "dft2d");
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(g.rows);
  const std::ptrdiff_t cols = static_cast<std::ptrdiff_t>(g.cols);
  ComplexGrid out(g.rows, g.cols);

  // Row pass, then column pass.  Lines are independent, so they can run in
  // parallel; under an active counting scope everything stays on the
  // calling thread so the tally is complete.
  const bool counted = opcount::counting_active();

  auto row_pass = [&](std::ptrdiff_t r) {
    CVec line(g.data.begin() + r * cols, g.data.begin() + (r + 1) * cols);
    CVec t = dft(line, dir);
    std::copy(t.begin(), t.end(), out.data.begin() + r * cols);
  };
  auto col_pass = [&](std::ptrdiff_t c) {
    CVec line(g.rows);
    for (std::ptrdiff_t r = 0; r < rows; ++r) line[r] = out.data[r * cols + c];
    CVec t = dft(line, dir);
    for (std::ptrdiff_t r = 0; r < rows; ++r) out.data[r * cols + c] = t[r];
  };

  if (counted || !parallel::enabled()) {
    for (std::ptrdiff_t r = 0; r < rows; ++r) row_pass(r);
    for (std::ptrdiff_t c = 0; c < cols; ++c) col_pass(c);
  } else {
    QCORR_PRAGMA_OMP(parallel for schedule(static) if (rows > 1))
    for (std::ptrdiff_t r = 0; r < rows; ++r) row_pass(r);
    QCORR_PRAGMA_OMP(parallel for schedule(static) if (cols > 1))
    for (std::ptrdiff_t c = 0; c < cols; ++c) col_pass(c);
  }
  return out;
}

QSpectrum qdft_e2(const QuatSignal& s) {
  auto [f, g] = component_planes(s);
  return QSpectrum{dft(f, FftDirection::forward), dft(g, FftDirection::forward)};
}

QuatSignal qdft_e2_inverse(const QSpectrum& S) {
  if (S.first.size() != S.second.size() || S.first.empty())
    throw std::invalid_argument("qdft_e2_inverse: malformed spectrum");
  CVec f = dft(S.first, FftDirection::inverse);
  CVec g = dft(S.second, FftDirection::inverse);
  return signal_from_planes(f, g);
}

QSpectrum2D qdft2d_e2(const QuatImage& img) {
  auto [f, g] = component_planes(img);
  return QSpectrum2D{dft2d(f, FftDirection::forward), dft2d(g, FftDirection::forward)};
}

QuatImage qdft2d_e2_inverse(const QSpectrum2D& S) {
  if (S.first.rows != S.second.rows || S.first.cols != S.second.cols)
    throw std::invalid_argument("qdft2d_e2_inverse: malformed spectrum");
  ComplexGrid f = dft2d(S.first, FftDirection::inverse);
  ComplexGrid g = dft2d(S.second, FftDirection::inverse);
  return image_from_planes(f, g);
}

QSpectrum reverse_spectrum(const QSpectrum& S) {
  const std::size_t n = S.first.size();
  if (n == 0 || S.second.size() != n)
    throw std::invalid_argument("reverse_spectrum: malformed spectrum");
  QSpectrum out{CVec(n), CVec(n)};
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t rp = p == 0 ? 0 : n - p;
    out.first[p] = S.first[rp];
    out.second[p] = S.second[rp];
  }
  return out;
}

QSpectrum2D reverse_spectrum(const QSpectrum2D& S) {
  check_grid(S.first, "reverse_spectrum");
  check_grid(S.second, "reverse_spectrum");
  const std::size_t rows = S.first.rows, cols = S.first.cols;
  QSpectrum2D out{ComplexGrid(rows, cols), ComplexGrid(rows, cols)};
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t rr = r == 0 ? 0 : rows - r;
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t rc = c == 0 ? 0 : cols - c;
      out.first.at(r, c) = S.first.at(rr, rc);
      out.second.at(r, c) = S.second.at(rr, rc);
    }
  }
  return out;
}

QSpectrum correlation_spectrum(const QSpectrum& V, const QSpectrum& Q) {
  const std::size_t n = V.first.size();
  if (n == 0 || V.second.size() != n || Q.first.size() != n || Q.second.size() != n)
    throw std::invalid_argument("correlation_spectrum: size mismatch");
  QSpectrum R{CVec(n), CVec(n)};
  if (opcount::counting_active()) {
    correlation_spectrum_line<true>(V.first, V.second, Q.first, Q.second, n, R.first, R.second);
  } else {
    correlation_spectrum_line<false>(V.first, V.second, Q.first, Q.second, n, R.first, R.second);
  }
  return R;
}

QSpectrum2D correlation_spectrum(const QSpectrum2D& V, const QSpectrum2D& Q) {
  check_grid(V.first, "correlation_spectrum");
  check_grid(Q.first, "correlation_spectrum");
  const std::size_t rows = V.first.rows, cols = V.first.cols;
  if (V.second.rows != rows || V.second.cols != cols || Q.first.rows != rows ||
      Q.first.cols != cols || Q.second.rows != rows || Q.second.cols != cols)
    throw std::invalid_argument("correlation_spectrum: size mismatch");
  QSpectrum2D R{ComplexGrid(rows, cols), ComplexGrid(rows, cols)};

  const bool counted = opcount::counting_active();
  auto line = [&](std::ptrdiff_t r) {
    const std::size_t rr = r == 0 ? 0 : rows - static_cast<std::size_t>(r);
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t rc = c == 0 ? 0 : cols - c;
      const Cx a = V.first.at(rr, rc), b = V.second.at(rr, rc);
      const Cx q1 = Q.first.at(r, c), q2 = Q.second.at(r, c);
      if (counted) {
        R.first.at(r, c) = cmul<true>(a, q1) - cmul<true>(b, q2);
        R.second.at(r, c) = cmul<true>(a, q2) + cmul<true>(b, q1);
      } else {
        R.first.at(r, c) = a * q1 - b * q2;
        R.second.at(r, c) = a * q2 + b * q1;
      }
    }
  };
  const std::ptrdiff_t prows = static_cast<std::ptrdiff_t>(rows);
  if (counted || !parallel::enabled()) {
    for (std::ptrdiff_t r = 0; r < prows; ++r) line(r);
  } else {
    QCORR_PRAGMA_OMP(parallel for schedule(static) if (prows > 1))
    for (std::ptrdiff_t r = 0; r < prows; ++r) line(r);
  }
  return R;
}

}  // namespace qcorr
