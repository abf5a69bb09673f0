// SPDX-License-Identifier: Apache-2.0

#include "qcorr/corr2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcorr/fft.hpp"
#include "qcorr/kernels.hpp"

namespace qcorr {
namespace {

void check_operands(const QuatImage& v, const QuatImage& q, const char* who) {
  if (v.rows == 0 || v.cols == 0 || q.rows == 0 || q.cols == 0)
    throw std::invalid_argument(std::string(who) + ": empty image");
  if (v.rows > q.rows || v.cols > q.cols)
    throw std::invalid_argument(std::string(who) + ": template exceeds reference extent");
}

QuatImage combine_planes(const ComplexGrid& r11, const ComplexGrid& r22,
                         const ComplexGrid& r12, const ComplexGrid& r21,
                         int lag_row, int lag_col) {
  QuatImage out(r11.rows, r11.cols);
  for (std::size_t i = 0; i < r11.data.size(); ++i)
    out.pixels[i] = Quat22(r11.data[i] - r22.data[i], r12.data[i] + r21.data[i]);
  out.lag_offset_row = lag_row;
  out.lag_offset_col = lag_col;
  return out;
}

ComplexGrid zero_pad(const ComplexGrid& g, std::size_t rows, std::size_t cols) {
  ComplexGrid out(rows, cols);
  for (std::size_t r = 0; r < g.rows; ++r)
    std::copy(g.data.begin() + r * g.cols, g.data.begin() + (r + 1) * g.cols,
              out.data.begin() + r * cols);
  return out;
}

double plane_max_abs(const QuatImage& r, bool second) {
  double m = 0.0;
  for (const auto& p : r.pixels) m = std::max(m, std::abs(second ? p.c2 : p.c1));
  return m;
}

}  // namespace

QuatImage correlate2d_direct(const QuatImage& v, const QuatImage& q) {
  check_operands(v, q, "correlate2d_direct");
  const std::size_t L1 = v.rows, L2 = v.cols, N1 = q.rows, N2 = q.cols;
  auto [v1, v2] = component_planes(v);
  auto [f, g] = component_planes(q);
  const std::size_t rows = N1 + L1 - 1, cols = N2 + L2 - 1;
  ComplexGrid r11(rows, cols), r22(rows, cols), r12(rows, cols), r21(rows, cols);
  kernels::xcorr2d(v1.data.data(), L1, L2, f.data.data(), N1, N2, r11.data.data());
  kernels::xcorr2d(v2.data.data(), L1, L2, g.data.data(), N1, N2, r22.data.data());
  kernels::xcorr2d(v1.data.data(), L1, L2, g.data.data(), N1, N2, r12.data.data());
  kernels::xcorr2d(v2.data.data(), L1, L2, f.data.data(), N1, N2, r21.data.data());
  return combine_planes(r11, r22, r12, r21, static_cast<int>(L1) - 1,
                        static_cast<int>(L2) - 1);
}

QuatImage autocorrelate2d(const QuatImage& q) {
  check_operands(q, q, "autocorrelate2d");
  const std::size_t N1 = q.rows, N2 = q.cols;
  auto [f, g] = component_planes(q);
  const std::size_t rows = 2 * N1 - 1, cols = 2 * N2 - 1;
  ComplexGrid rff(rows, cols), rgg(rows, cols), rfg(rows, cols);
  kernels::xcorr2d(f.data.data(), N1, N2, f.data.data(), N1, N2, rff.data.data());
  kernels::xcorr2d(g.data.data(), N1, N2, g.data.data(), N1, N2, rgg.data.data());
  kernels::xcorr2d(f.data.data(), N1, N2, g.data.data(), N1, N2, rfg.data.data());

  // r(g,f) at lag (n,m) is r(f,g) at (-n,-m): reflect through the center
  // instead of running a fourth correlation.
  QuatImage out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const Cx cross = rfg.at(r, c) + rfg.at(rows - 1 - r, cols - 1 - c);
      out.at(r, c) = Quat22(rff.at(r, c) - rgg.at(r, c), cross);
    }
  out.lag_offset_row = static_cast<int>(N1) - 1;
  out.lag_offset_col = static_cast<int>(N2) - 1;
  return out;
}

QuatImage correlate2d_fft(const QuatImage& v, const QuatImage& q) {
  check_operands(v, q, "correlate2d_fft");
  const std::size_t L1 = v.rows, L2 = v.cols, N1 = q.rows, N2 = q.cols;
  const std::size_t rows = N1 + L1 - 1, cols = N2 + L2 - 1;

  auto [v1, v2] = component_planes(v);
  auto [f, g] = component_planes(q);
  QSpectrum2D V{dft2d(zero_pad(v1, rows, cols), FftDirection::forward),
                dft2d(zero_pad(v2, rows, cols), FftDirection::forward)};
  QSpectrum2D Q{dft2d(zero_pad(f, rows, cols), FftDirection::forward),
                dft2d(zero_pad(g, rows, cols), FftDirection::forward)};

  QSpectrum2D R = correlation_spectrum(V, Q);
  QuatImage cyc = qdft2d_e2_inverse(R);

  QuatImage out(rows, cols);
  const long lr = static_cast<long>(rows), lc = static_cast<long>(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const long lag_r = static_cast<long>(r) - static_cast<long>(L1 - 1);
    const std::size_t sr = static_cast<std::size_t>(((lag_r % lr) + lr) % lr);
    for (std::size_t c = 0; c < cols; ++c) {
      const long lag_c = static_cast<long>(c) - static_cast<long>(L2 - 1);
      const std::size_t sc = static_cast<std::size_t>(((lag_c % lc) + lc) % lc);
      out.at(r, c) = cyc.at(sr, sc);
    }
  }
  out.lag_offset_row = static_cast<int>(L1) - 1;
  out.lag_offset_col = static_cast<int>(L2) - 1;
  return out;
}

EnergyPair energies(const QuatImage& img) {
  if (img.pixels.empty()) throw std::invalid_argument("energies: empty image");
  double s1 = 0.0, s2 = 0.0;
  for (const auto& p : img.pixels) {
    s1 += std::norm(p.c1);
    s2 += std::norm(p.c2);
  }
  return EnergyPair{std::sqrt(s1), std::sqrt(s2)};
}

QuatImage normalize_componentwise(const QuatImage& r, const EnergyPair& ev,
                                  const EnergyPair& eq) {
  const double k1 = eq.e1 * ev.e1 + eq.e2 * ev.e2;
  const double k2 = eq.e2 * ev.e1 + eq.e1 * ev.e2;
  if (k1 == 0.0 && plane_max_abs(r, false) != 0.0)
    throw std::domain_error("normalize_componentwise: zero K1 for nonzero first component");
  if (k2 == 0.0 && plane_max_abs(r, true) != 0.0)
    throw std::domain_error("normalize_componentwise: zero K2 for nonzero second component");
  QuatImage out(r.rows, r.cols);
  for (std::size_t i = 0; i < r.pixels.size(); ++i) {
    const Cx c1 = k1 == 0.0 ? Cx{0.0, 0.0} : r.pixels[i].c1 / k1;
    const Cx c2 = k2 == 0.0 ? Cx{0.0, 0.0} : r.pixels[i].c2 / k2;
    out.pixels[i] = Quat22(c1, c2);
  }
  out.lag_offset_row = r.lag_offset_row;
  out.lag_offset_col = r.lag_offset_col;
  return out;
}

QuatImage normalize_global(const QuatImage& r, const EnergyPair& ev,
                           const EnergyPair& eq) {
  const double denom = std::sqrt(ev.e1 * ev.e1 + ev.e2 * ev.e2) *
                       std::sqrt(eq.e1 * eq.e1 + eq.e2 * eq.e2);
  if (denom == 0.0) throw std::domain_error("normalize_global: zero-energy operand");
  QuatImage out(r.rows, r.cols);
  for (std::size_t i = 0; i < r.pixels.size(); ++i)
    out.pixels[i] = Quat22(r.pixels[i].c1 / denom, r.pixels[i].c2 / denom);
  out.lag_offset_row = r.lag_offset_row;
  out.lag_offset_col = r.lag_offset_col;
  return out;
}

PeakReport find_peak(const QuatImage& r, Normalization norm,
                     const EnergyPair& ev, const EnergyPair& eq) {
  if (r.pixels.empty()) throw std::invalid_argument("find_peak: empty surface");
  QuatImage surface = r;
  if (norm == Normalization::componentwise)
    surface = normalize_componentwise(r, ev, eq);
  else if (norm == Normalization::global)
    surface = normalize_global(r, ev, eq);

  PeakReport best;
  double best_mod = -1.0;
  for (std::size_t row = 0; row < surface.rows; ++row)
    for (std::size_t col = 0; col < surface.cols; ++col) {
      const double m = modulus(surface.at(row, col));
      if (m > best_mod) {
        best_mod = m;
        best.lag_row = static_cast<int>(row) - surface.lag_offset_row;
        best.lag_col = static_cast<int>(col) - surface.lag_offset_col;
        best.components = surface.at(row, col).to_array();
        best.modulus = m;
      }
    }
  return best;
}

}  // namespace qcorr
