#pragma once

#include <cstdint>

namespace clusterkit {

// Largest ground-set size the 64-bit mask representation supports.
inline constexpr int kMaxGround = 62;

// C(n,k) as an exact 64-bit integer. Returns 0 for k < 0 or k > n.
// Every value with n <= 64 fits in uint64_t. Throws for n < 0 or n > 64.
std::uint64_t binomial(int n, int k);

}  // namespace clusterkit
