// SPDX-License-Identifier: Apache-2.0

#include "qcorr/corr1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcorr/fft.hpp"
#include "qcorr/kernels.hpp"

namespace qcorr {
namespace {

void check_operands(const QuatSignal& v, const QuatSignal& q, const char* who) {
  if (v.samples.empty() || q.samples.empty())
    throw std::invalid_argument(std::string(who) + ": empty signal");
  if (v.size() > q.size())
    throw std::invalid_argument(std::string(who) + ": first operand longer than second");
}

// r = [r(v1,f) - r(v2,g), r(v1,g) + r(v2,f)] from four plane correlations.
QuatSignal combine_planes(const CVec& r11, const CVec& r22, const CVec& r12,
                          const CVec& r21, int lag_offset) {
  const std::size_t len = r11.size();
  std::vector<Quat22> samples(len);
  for (std::size_t i = 0; i < len; ++i)
    samples[i] = Quat22(r11[i] - r22[i], r12[i] + r21[i]);
  return QuatSignal(std::move(samples), lag_offset);
}

CVec zero_pad(const CVec& x, std::size_t n) {
  CVec out(n, Cx{0.0, 0.0});
  std::copy(x.begin(), x.end(), out.begin());
  return out;
}

double plane_max_abs(const QuatSignal& r, bool second) {
  double m = 0.0;
  for (const auto& s : r.samples)
    m = std::max(m, std::abs(second ? s.c2 : s.c1));
  return m;
}

}  // namespace

QuatSignal time_reversal(const QuatSignal& v) {
  if (v.samples.empty()) throw std::invalid_argument("time_reversal: empty signal");
  const std::size_t n = v.size();
  std::vector<Quat22> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = v.samples[(n - i) % n];
  return QuatSignal(std::move(out), v.lag_offset);
}

QuatSignal correlate_direct(const QuatSignal& v, const QuatSignal& q) {
  check_operands(v, q, "correlate_direct");
  const std::size_t L = v.size(), N = q.size();
  auto [v1, v2] = component_planes(v);
  auto [f, g] = component_planes(q);
  CVec r11(N + L - 1), r22(N + L - 1), r12(N + L - 1), r21(N + L - 1);
  kernels::xcorr(v1.data(), L, f.data(), N, r11.data());
  kernels::xcorr(v2.data(), L, g.data(), N, r22.data());
  kernels::xcorr(v1.data(), L, g.data(), N, r12.data());
  kernels::xcorr(v2.data(), L, f.data(), N, r21.data());
  return combine_planes(r11, r22, r12, r21, static_cast<int>(L) - 1);
}

QuatSignal autocorrelate(const QuatSignal& q) { return correlate_direct(q, q); }

QuatSignal correlate_fft(const QuatSignal& v, const QuatSignal& q) {
  check_operands(v, q, "correlate_fft");
  const std::size_t L = v.size(), N = q.size();
  const std::size_t np = L + N - 1;

  auto [v1, v2] = component_planes(v);
  auto [f, g] = component_planes(q);
  QSpectrum V{dft(zero_pad(v1, np), FftDirection::forward),
              dft(zero_pad(v2, np), FftDirection::forward)};
  QSpectrum Q{dft(zero_pad(f, np), FftDirection::forward),
              dft(zero_pad(g, np), FftDirection::forward)};

  QSpectrum R = correlation_spectrum(V, Q);
  QuatSignal cyc = qdft_e2_inverse(R);

  // The cyclic result holds nonnegative lags first, negative lags wrapped to
  // the tail; reorder to the linear layout with lag_offset = L - 1.
  std::vector<Quat22> out(np);
  const long lnp = static_cast<long>(np);
  for (std::size_t i = 0; i < np; ++i) {
    const long lag = static_cast<long>(i) - static_cast<long>(L - 1);
    const std::size_t src = static_cast<std::size_t>(((lag % lnp) + lnp) % lnp);
    out[i] = cyc.samples[src];
  }
  return QuatSignal(std::move(out), static_cast<int>(L) - 1);
}

EnergyPair energies(const QuatSignal& s) {
  if (s.samples.empty()) throw std::invalid_argument("energies: empty signal");
  double s1 = 0.0, s2 = 0.0;
  for (const auto& x : s.samples) {
    s1 += std::norm(x.c1);
    s2 += std::norm(x.c2);
  }
  return EnergyPair{std::sqrt(s1), std::sqrt(s2)};
}

QuatSignal normalize_componentwise(const QuatSignal& r, const EnergyPair& ev,
                                   const EnergyPair& eq) {
  const double k1 = eq.e1 * ev.e1 + eq.e2 * ev.e2;
  const double k2 = eq.e2 * ev.e1 + eq.e1 * ev.e2;
  if (k1 == 0.0 && plane_max_abs(r, false) != 0.0)
    throw std::domain_error("normalize_componentwise: zero K1 for nonzero first component");
  if (k2 == 0.0 && plane_max_abs(r, true) != 0.0)
    throw std::domain_error("normalize_componentwise: zero K2 for nonzero second component");
  std::vector<Quat22> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Cx c1 = k1 == 0.0 ? Cx{0.0, 0.0} : r.samples[i].c1 / k1;
    const Cx c2 = k2 == 0.0 ? Cx{0.0, 0.0} : r.samples[i].c2 / k2;
    out[i] = Quat22(c1, c2);
  }
  return QuatSignal(std::move(out), r.lag_offset);
}

QuatSignal normalize_global(const QuatSignal& r, const EnergyPair& ev,
                            const EnergyPair& eq) {
  const double denom = std::sqrt(ev.e1 * ev.e1 + ev.e2 * ev.e2) *
                       std::sqrt(eq.e1 * eq.e1 + eq.e2 * eq.e2);
  if (denom == 0.0) throw std::domain_error("normalize_global: zero-energy operand");
  std::vector<Quat22> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    out[i] = Quat22(r.samples[i].c1 / denom, r.samples[i].c2 / denom);
  return QuatSignal(std::move(out), r.lag_offset);
}

}  // namespace qcorr
