// SPDX-License-Identifier: Apache-2.0

#include "qcorr/opcount.hpp"

namespace qcorr::opcount::detail {

thread_local OpCounter* t_active = nullptr;

}  // namespace qcorr::opcount::detail
