// SPDX-License-Identifier: Apache-2.0

#include "qcorr/hamilton.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace qcorr {

QuatHSignal correlate_direct_13(const QuatHSignal& v, const QuatHSignal& q) {
  using std::ptrdiff_t;
  if (v.samples.empty() || q.samples.empty())
    throw std::invalid_argument("correlate_direct_13: empty signal");
  if (v.samples.size() > q.samples.size())
    throw std::invalid_argument("correlate_direct_13: first operand longer than second");

  const ptrdiff_t L = static_cast<ptrdiff_t>(v.samples.size());
  const ptrdiff_t N = static_cast<ptrdiff_t>(q.samples.size());
  QuatHSignal r;
  r.lag_offset = static_cast<int>(L) - 1;
  r.samples.resize(static_cast<std::size_t>(N + L - 1));

  for (ptrdiff_t i = 0; i < N + L - 1; ++i) {
    const ptrdiff_t lag = i - (L - 1);
    const ptrdiff_t k0 = lag > 0 ? lag : 0;
    const ptrdiff_t k1 = std::min<ptrdiff_t>(N - 1, lag + L - 1);
    QuatH acc;
    for (ptrdiff_t k = k0; k <= k1; ++k)
      acc = acc + mul_ij(q.samples[k], v.samples[k - lag]);
    r.samples[i] = acc;
  }
  return r;
}

}  // namespace qcorr
