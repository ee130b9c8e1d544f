#include "clusterkit/binomial.hpp"

#include <array>
#include <stdexcept>

namespace clusterkit {

namespace {

struct PascalTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  constexpr PascalTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

constexpr PascalTable kTable;

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 64)
    throw std::invalid_argument("binomial: n out of supported range [0,64]");
  if (k < 0 || k > n) return 0;
  return kTable.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace clusterkit
