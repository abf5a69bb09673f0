// SPDX-License-Identifier: Apache-2.0
//
// Discrete Fourier transforms and the quaternion spectra built on them.
//
// dft handles any length: power-of-two inputs run the iterative radix-2
// algorithm, everything else goes through the Bluestein chirp-z reduction
// to a power-of-two convolution.  The inverse transform scales by 1/N.
//
// A quaternion signal [f, g] transforms with the exponential kernel along
// the -e2 direction.  That kernel embeds as an ordinary complex exponential
// acting on each plane, so the quaternion spectrum is simply
// (DFT f, DFT g).  Correlation becomes a pointwise product of the
// time-reversed spectrum of one operand with the spectrum of the other.

#pragma once

#include <span>

#include "qcorr/signal.hpp"

namespace qcorr {

enum class FftDirection { forward, inverse };

CVec dft(std::span<const Cx> x, FftDirection dir);
ComplexGrid dft2d(const ComplexGrid& g, FftDirection dir);

namespace spectral_detail {
// Exposed so tests can pin the chirp-z path against the radix-2 path.
CVec dft_radix2(std::span<const Cx> x, bool inverse);
CVec dft_bluestein(std::span<const Cx> x, bool inverse);
}  // namespace spectral_detail

struct QSpectrum {
  CVec first, second;
  std::size_t size() const { return first.size(); }
};

struct QSpectrum2D {
  ComplexGrid first, second;
};

QSpectrum qdft_e2(const QuatSignal& s);
QuatSignal qdft_e2_inverse(const QSpectrum& S);

QSpectrum2D qdft2d_e2(const QuatImage& img);
QuatImage qdft2d_e2_inverse(const QSpectrum2D& S);

// S'_p = S_{(N-p) mod N}: the spectrum of the periodic time reversal.
QSpectrum reverse_spectrum(const QSpectrum& S);
QSpectrum2D reverse_spectrum(const QSpectrum2D& S);

// Frequency-domain correlation product R_p = V_{(N-p) mod N} * Q_p, computed
// as the 2x2 butterfly [V1'F - V2'G, V1'G + V2'F]: exactly 4 complex
// multiplications and 2 complex additions per frequency.
QSpectrum correlation_spectrum(const QSpectrum& V, const QSpectrum& Q);
QSpectrum2D correlation_spectrum(const QSpectrum2D& V, const QSpectrum2D& Q);

}  // namespace qcorr
