// The bijection phi_ell between the duplication channel and the
// 0-insertion channel: x_i = xt_i - xt_{i-ell} (mod q), xt_k = 0 for k <= 0.
#pragma once

#include "dupcode/core.hpp"

namespace dupcode {

Word phi(const ChannelParams& params, const Word& xt);
Word phi_inverse(const ChannelParams& params, const Word& x);

}  // namespace dupcode
