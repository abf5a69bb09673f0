// SPDX-License-Identifier: Apache-2.0
//
// Direct (time-domain) cross-correlation kernels on complex planes, without
// conjugation: out[i] = sum_k x[k - lag] * y[k] with lag = i - (L - 1).
// These are the four per-plane correlations the quaternion component form
// decomposes into.  The _serial versions are the reference; the plain entry
// points run OpenMP-parallel over output samples and fall back to the
// counted serial path inside a counting scope.

#pragma once

#include <cstddef>

#include "qcorr/signal.hpp"

namespace qcorr::kernels {

// x has length L, y length N (L <= N checked by callers); out must have
// room for N + L - 1 samples.
void xcorr_serial(const Cx* x, std::size_t L, const Cx* y, std::size_t N, Cx* out);
void xcorr_counted(const Cx* x, std::size_t L, const Cx* y, std::size_t N, Cx* out);
void xcorr_parallel(const Cx* x, std::size_t L, const Cx* y, std::size_t N, Cx* out);
void xcorr(const Cx* x, std::size_t L, const Cx* y, std::size_t N, Cx* out);

// Row-major 2-D variant: x is L1 x L2, y is N1 x N2, out is
// (N1+L1-1) x (N2+L2-1).
void xcorr2d_serial(const Cx* x, std::size_t L1, std::size_t L2,
                    const Cx* y, std::size_t N1, std::size_t N2, Cx* out);
void xcorr2d_counted(const Cx* x, std::size_t L1, std::size_t L2,
                     const Cx* y, std::size_t N1, std::size_t N2, Cx* out);
void xcorr2d_parallel(const Cx* x, std::size_t L1, std::size_t L2,
                      const Cx* y, std::size_t N1, std::size_t N2, Cx* out);
void xcorr2d(const Cx* x, std::size_t L1, std::size_t L2,
             const Cx* y, std::size_t N1, std::size_t N2, Cx* out);

}  // namespace qcorr::kernels
