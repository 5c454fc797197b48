#pragma once

#include <gmpxx.h>

namespace qpos {

// Every coefficient in the toolkit is an exact arbitrary-precision integer.
// GMP keeps small values cheap, so there is no separate machine-word series
// representation; the one hot loop that benefits from int64 arithmetic (the
// streaming prefix accumulator) handles its own overflow-checked fast path.
using Int = mpz_class;

} // namespace qpos
