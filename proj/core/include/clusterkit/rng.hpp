#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace clusterkit {

// mt19937_64 with rejection-sampled bounded draws, so the same seed gives the
// same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t residue = std::uint64_t(-1) % bound;
    std::uint64_t limit = std::uint64_t(-1) - residue;  // multiple-of-bound cap
    std::uint64_t x;
    do {
      x = gen_();
    } while (x > limit);
    return x % bound;
  }

  // Fisher-Yates; deterministic under the stream above.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

// Splitmix64 step, for deriving independent per-task seeds from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace clusterkit
