// SPDX-License-Identifier: Apache-2.0

#include "qcorr/kernels.hpp"

#include <algorithm>

#include "qcorr/opcount.hpp"
#include "qcorr/parallel.hpp"

namespace qcorr::kernels {
namespace {

using std::ptrdiff_t;

struct RawMul {
  Cx operator()(Cx a, Cx b) const { return a * b; }
};

struct CountedMul {
  Cx operator()(Cx a, Cx b) const {
    opcount::tally_cmul();
    return a * b;
  }
};

// One output sample: sum over the overlap of x shifted by lag = i - (L-1).
template <class Mul>
inline Cx xcorr_at(const Cx* x, ptrdiff_t L, const Cx* y, ptrdiff_t N,
                   ptrdiff_t i, Mul mul) {
  const ptrdiff_t lag = i - (L - 1);
  const ptrdiff_t k0 = lag > 0 ? lag : 0;
  const ptrdiff_t k1 = std::min<ptrdiff_t>(N - 1, lag + L - 1);
  Cx acc{0.0, 0.0};
  for (ptrdiff_t k = k0; k <= k1; ++k) acc += mul(x[k - lag], y[k]);
  return acc;
}

template <class Mul>
inline Cx xcorr2d_at(const Cx* x, ptrdiff_t L1, ptrdiff_t L2,
                     const Cx* y, ptrdiff_t N1, ptrdiff_t N2,
                     ptrdiff_t ir, ptrdiff_t ic, Mul mul) {
  const ptrdiff_t lr = ir - (L1 - 1);
  const ptrdiff_t lc = ic - (L2 - 1);
  const ptrdiff_t r0 = lr > 0 ? lr : 0;
  const ptrdiff_t r1 = std::min<ptrdiff_t>(N1 - 1, lr + L1 - 1);
  const ptrdiff_t c0 = lc > 0 ? lc : 0;
  const ptrdiff_t c1 = std::min<ptrdiff_t>(N2 - 1, lc + L2 - 1);
  Cx acc{0.0, 0.0};
  for (ptrdiff_t r = r0; r <= r1; ++r) {
    const Cx* xrow = x + (r - lr) * L2 - lc;
    const Cx* yrow = y + r * N2;
    for (ptrdiff_t c = c0; c <= c1; ++c) acc += mul(xrow[c], yrow[c]);
  }
  return acc;
}

}  // namespace

void xcorr_serial(const Cx* x, std::size_t L, const Cx* y, std::size_t N, Cx* out) {
  const ptrdiff_t len = static_cast<ptrdiff_t>(N + L - 1);
  for (ptrdiff_t i = 0; i < len; ++i)
    out[i] = xcorr_at(x, static_cast<ptrdiff_t>(L), y, static_cast<ptrdiff_t>(N), i, RawMul{});
}

void xcorr_counted(const Cx* x, std::size_t L, const Cx* y, std::size_t N, Cx* out) {
  const ptrdiff_t len = static_cast<ptrdiff_t>(N + L - 1);
  for (ptrdiff_t i = 0; i < len; ++i)
    out[i] = xcorr_at(x, static_cast<ptrdiff_t>(L), y, static_cast<ptrdiff_t>(N), i, CountedMul{});
}

void xcorr_parallel(const Cx* x, std::size_t L, const Cx* y, std::size_t N, Cx* out) {
  const ptrdiff_t len = static_cast<ptrdiff_t>(N + L - 1);
  const ptrdiff_t pL = static_cast<ptrdiff_t>(L), pN = static_cast<ptrdiff_t>(N);
  QCORR_PRAGMA_OMP(parallel for schedule(static) if (pL * pN > 16384))
  for (ptrdiff_t i = 0; i < len; ++i) out[i] = xcorr_at(x, pL, y, pN, i, RawMul{});
}

void xcorr(const Cx* x, std::size_t L, const Cx* y, std::size_t N, Cx* out) {
  if (opcount::counting_active()) return xcorr_counted(x, L, y, N, out);
  return xcorr_parallel(x, L, y, N, out);
}

void xcorr2d_serial(const Cx* x, std::size_t L1, std::size_t L2,
                    const Cx* y, std::size_t N1, std::size_t N2, Cx* out) {
  const ptrdiff_t rows = static_cast<ptrdiff_t>(N1 + L1 - 1);
  const ptrdiff_t cols = static_cast<ptrdiff_t>(N2 + L2 - 1);
  for (ptrdiff_t ir = 0; ir < rows; ++ir)
    for (ptrdiff_t ic = 0; ic < cols; ++ic)
      out[ir * cols + ic] = xcorr2d_at(x, static_cast<ptrdiff_t>(L1), static_cast<ptrdiff_t>(L2),
                                       y, static_cast<ptrdiff_t>(N1), static_cast<ptrdiff_t>(N2),
                                       ir, ic, RawMul{});
}

void xcorr2d_counted(const Cx* x, std::size_t L1, std::size_t L2,
                     const Cx* y, std::size_t N1, std::size_t N2, Cx* out) {
  const ptrdiff_t rows = static_cast<ptrdiff_t>(N1 + L1 - 1);
  const ptrdiff_t cols = static_cast<ptrdiff_t>(N2 + L2 - 1);
  for (ptrdiff_t ir = 0; ir < rows; ++ir)
    for (ptrdiff_t ic = 0; ic < cols; ++ic)
      out[ir * cols + ic] = xcorr2d_at(x, static_cast<ptrdiff_t>(L1), static_cast<ptrdiff_t>(L2),
                                       y, static_cast<ptrdiff_t>(N1), static_cast<ptrdiff_t>(N2),
                                       ir, ic, CountedMul{});
}

void xcorr2d_parallel(const Cx* x, std::size_t L1, std::size_t L2,
                      const Cx* y, std::size_t N1, std::size_t N2, Cx* out) {
  const ptrdiff_t rows = static_cast<ptrdiff_t>(N1 + L1 - 1);
  const ptrdiff_t cols = static_cast<ptrdiff_t>(N2 + L2 - 1);
  const ptrdiff_t pL1 = static_cast<ptrdiff_t>(L1), pL2 = static_cast<ptrdiff_t>(L2);
  const ptrdiff_t pN1 = static_cast<ptrdiff_t>(N1), pN2 = static_cast<ptrdiff_t>(N2);
  QCORR_PRAGMA_OMP(parallel for schedule(static) if (pL1 * pL2 * pN1 * pN2 > 16384))
  for (ptrdiff_t ir = 0; ir < rows; ++ir)
    for (ptrdiff_t ic = 0; ic < cols; ++ic)
      out[ir * cols + ic] = xcorr2d_at(x, pL1, pL2, y, pN1, pN2, ir, ic, RawMul{});
}

void xcorr2d(const Cx* x, std::size_t L1, std::size_t L2,
             const Cx* y, std::size_t N1, std::size_t N2, Cx* out) {
  if (opcount::counting_active()) return xcorr2d_counted(x, L1, L2, y, N1, N2, out);
  return xcorr2d_parallel(x, L1, L2, y, N1, N2, out);
}

}  // namespace qcorr::kernels
