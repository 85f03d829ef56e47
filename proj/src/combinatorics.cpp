#include "kleinforge/combinatorics.hpp"

#include "kleinforge/errors.hpp"

namespace kleinforge {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > 62) throw CapacityError("binomial: n > 62 overflows 64-bit arithmetic");
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i; split to stay inside 64 bits.
    unsigned __int128 wide = static_cast<unsigned __int128>(result) * static_cast<unsigned>(n - k + i);
    result = static_cast<std::uint64_t>(wide / static_cast<unsigned>(i));
  }
  return result;
}

}  // namespace kleinforge
