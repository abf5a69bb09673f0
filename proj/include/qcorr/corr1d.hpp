// SPDX-License-Identifier: Apache-2.0
//
// Correlation of quaternion-valued 1-D signals in the commutative model:
//
//   r_n = sum_k v_{k-n} * q_k,   n = -(L-1) .. N-1,  no conjugation.
//
// The component form splits this into four complex cross-correlations,
//   r = [r(v1,f) - r(v2,g), r(v1,g) + r(v2,f)],
// which is what the direct path computes.  The frequency path zero-pads
// both signals to N' = L + N - 1 and multiplies the time-reversed spectrum
// of v with the spectrum of q, one 2x2 butterfly per frequency.

#pragma once

#include "qcorr/signal.hpp"

namespace qcorr {

// Periodic time reversal: out[n] = in[(N - n) mod N].
QuatSignal time_reversal(const QuatSignal& v);

// Direct correlation; v must not be longer than q.  Output has N + L - 1
// samples with lag_offset = L - 1.
QuatSignal correlate_direct(const QuatSignal& v, const QuatSignal& q);

// correlate_direct(q, q), via the same component form.
QuatSignal autocorrelate(const QuatSignal& q);

// Frequency-domain correlation; identical lag layout to correlate_direct.
QuatSignal correlate_fft(const QuatSignal& v, const QuatSignal& q);

EnergyPair energies(const QuatSignal& s);

// Divide plane j by K_j built from the operand energies:
//   K1 = E[f]E[v1] + E[g]E[v2],  K2 = E[g]E[v1] + E[f]E[v2].
// A zero K_j demands an identically zero plane (0/0 -> 0); a zero K_j with a
// nonzero plane is an error.
QuatSignal normalize_componentwise(const QuatSignal& r, const EnergyPair& ev,
                                   const EnergyPair& eq);

// Divide every component by E[v]*E[q] with E[q] = sqrt(E[f]^2 + E[g]^2).
QuatSignal normalize_global(const QuatSignal& r, const EnergyPair& ev,
                            const EnergyPair& eq);

}  // namespace qcorr
