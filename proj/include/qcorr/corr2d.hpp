// SPDX-License-Identifier: Apache-2.0
//
// Correlation of quaternion-valued images:
//
//   r_{n,m} = sum_{k,l} v_{k-n,l-m} * q_{k,l}
//
// over lags n = -(L1-1)..N1-1, m = -(L2-1)..N2-1, giving an
// (N1+L1-1) x (N2+L2-1) surface.  Both the direct component form and the
// padded 2-D frequency path are provided, plus peak search for template
// matching.

#pragma once

#include <array>

#include "qcorr/signal.hpp"

namespace qcorr {

// Direct correlation; the template v must fit inside q along both axes.
QuatImage correlate2d_direct(const QuatImage& v, const QuatImage& q);

// Autocorrelation via three distinct plane correlations; the fourth,
// r(g,f), is r(f,g) reflected through the lag origin.
QuatImage autocorrelate2d(const QuatImage& q);

// Frequency-domain correlation; identical lag layout to the direct path.
QuatImage correlate2d_fft(const QuatImage& v, const QuatImage& q);

EnergyPair energies(const QuatImage& img);

QuatImage normalize_componentwise(const QuatImage& r, const EnergyPair& ev,
                                  const EnergyPair& eq);
QuatImage normalize_global(const QuatImage& r, const EnergyPair& ev,
                           const EnergyPair& eq);

struct PeakReport {
  int lag_row = 0, lag_col = 0;
  std::array<double, 4> components{};
  double modulus = 0.0;
};

// Maximum-modulus lag of the (optionally normalized) surface.  Ties go to
// the smallest (row, col) in lexicographic lag order.
PeakReport find_peak(const QuatImage& r, Normalization norm,
                     const EnergyPair& ev, const EnergyPair& eq);

}  // namespace qcorr
