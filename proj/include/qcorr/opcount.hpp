// SPDX-License-Identifier: Apache-2.0
//
// Real-multiplication accounting for the correlation paths.  A counting
// scope tallies every complex*complex multiplication executed on the
// calling thread at the conventional cost of 4 real multiplications.
// Real-valued scalings (such as the 1/N of an inverse transform) are not
// charged, which keeps the per-transform count independent of direction.
// Kernels switch to their serial implementations while a scope is active so
// the tally is complete; scopes do not nest.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace qcorr::opcount {

struct OpCounter {
  std::uint64_t complex_multiplications = 0;
  std::uint64_t real_multiplications = 0;
};

namespace detail {
extern thread_local OpCounter* t_active;
}

inline bool counting_active() noexcept { return detail::t_active != nullptr; }

// No-op unless a scope is active on this thread.
inline void tally_cmul(std::uint64_t n = 1) noexcept {
  if (OpCounter* c = detail::t_active) {
    c->complex_multiplications += n;
    c->real_multiplications += 4 * n;
  }
}

// Runs f under an active counter.  Returns the tally, paired with f's result
// when it has one.
template <class F>
auto counting_scope(F&& f) {
  if (detail::t_active)
    throw std::logic_error("counting_scope: scopes do not nest");
  OpCounter counter;
  struct Guard {
    ~Guard() { detail::t_active = nullptr; }
  } guard;
  detail::t_active = &counter;
  if constexpr (std::is_void_v<std::invoke_result_t<F&>>) {
    std::forward<F>(f)();
    return counter;
  } else {
    auto result = std::forward<F>(f)();
    return std::pair{std::move(result), counter};
  }
}

}  // namespace qcorr::opcount
