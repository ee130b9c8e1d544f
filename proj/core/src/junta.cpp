#include "clusterkit/junta.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterkit {

Junta::Junta(int n, int k, const KSubset& j_set, std::vector<Mask> generators)
    : n_(n), k_(k), j_(j_set) {
  if (j_set.ambient() != n)
    throw std::invalid_argument("Junta: J has wrong ambient");
  if (k < 0 || k > n) throw std::invalid_argument("Junta: need 0 <= k <= n");
  for (Mask b : generators) {
    if (b & ~j_set.mask())
      throw std::invalid_argument("Junta: generator not a subset of J");
    if (set_size(b) > k)
      throw std::invalid_argument(
          "Junta: generator larger than k cannot be realized");
  }
  std::sort(generators.begin(), generators.end(), lex_less);
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  generators_ = std::move(generators);
}

SetFamily Junta::generate() const {
  Mask j = j_.mask();
  std::vector<Mask> out;
  // Attach every admissible tail to each generator rather than filtering all
  // of C([n],k).
  std::vector<int> free_positions;
  for (int e = 0; e < n_; ++e)
    if (!(j >> e & 1)) free_positions.push_back(e);

  for (Mask b : generators_) {
    int tail = k_ - set_size(b);
    if (tail > static_cast<int>(free_positions.size())) continue;
    for_each_ksubset(static_cast<int>(free_positions.size()), tail,
                     [&](Mask packed) {
                       Mask m = b;
                       for (Mask t = packed; t != 0; t &= t - 1) {
                         int pos = std::countr_zero(t);
                         m |= Mask{1} << free_positions[pos];
                       }
                       out.push_back(m);
                     });
  }
  return SetFamily::from_masks(n_, k_, std::move(out));
}

}  // namespace clusterkit
