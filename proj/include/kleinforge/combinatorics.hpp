#pragma once

#include <cstdint>

namespace kleinforge {

/// C(n, k); zero outside 0 <= k <= n. Exact for n <= 62.
std::uint64_t binomial(int n, int k);

}  // namespace kleinforge
