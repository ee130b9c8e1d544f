#include "clusterkit/family.hpp"

#include "clusterkit/binomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterkit {

SetFamily::SetFamily(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > kMaxGround)
    throw std::invalid_argument("SetFamily: ambient n out of range");
  // k > n is tolerated (the family is necessarily empty then); restrictions
  // with |B| close to k land in that corner.
  if (k < 0 || k > 64) throw std::invalid_argument("SetFamily: bad uniformity");
}

SetFamily SetFamily::from_masks(int n, int k, std::vector<Mask> masks) {
  SetFamily f(n, k);
  for (Mask m : masks) {
    if (set_size(m) != k)
      throw std::invalid_argument("SetFamily: member of wrong size");
    if (m & ~full_mask(n))
      throw std::invalid_argument("SetFamily: member outside ground set");
  }
  std::sort(masks.begin(), masks.end(), lex_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  f.masks_ = std::move(masks);
  return f;
}

SetFamily SetFamily::full(int n, int k) {
  std::vector<Mask> all;
  all.reserve(binomial(n, k));
  for_each_ksubset(n, k, [&](Mask m) { all.push_back(m); });
  return from_masks(n, k, std::move(all));
}

bool SetFamily::contains(Mask m) const {
  return std::binary_search(masks_.begin(), masks_.end(), m, lex_less);
}

std::vector<KSubset> SetFamily::members() const {
  std::vector<KSubset> out;
  out.reserve(masks_.size());
  for (Mask m : masks_) out.push_back(KSubset::of_mask(m, n_));
  return out;
}

Rational measure(const SetFamily& f) {
  std::uint64_t total = binomial(f.n(), f.k());
  if (total == 0) return Rational(0);
  return Rational(f.size(), total);
}

SetFamily restriction(const SetFamily& f, const KSubset& j_set,
                      const KSubset& b_set) {
  if (j_set.ambient() != f.n() || b_set.ambient() != f.n())
    throw std::invalid_argument("restriction: ambient mismatch");
  Mask j = j_set.mask();
  Mask b = b_set.mask();
  if (b & ~j) throw std::invalid_argument("restriction: B not a subset of J");
  if (b_set.size() > f.k())
    throw std::invalid_argument("restriction: |B| exceeds uniformity k");

  int new_n = f.n() - j_set.size();
  int new_k = f.k() - b_set.size();

  // Order-preserving relabeling of [n]\J onto [1, n-|J|]: compress away the
  // bits of J.
  std::vector<Mask> out;
  for (Mask m : f.masks()) {
    if ((m & j) != b) continue;
    Mask rest = m & ~j;
    Mask packed = 0;
    int pos = 0;
    for (int e = 0; e < f.n(); ++e) {
      if (j >> e & 1) continue;
      packed |= (rest >> e & 1) << pos;
      ++pos;
    }
    out.push_back(packed);
  }
  return SetFamily::from_masks(new_n, new_k, std::move(out));
}

Rational essential_containment(const SetFamily& f, const SetFamily& g) {
  if (f.n() != g.n() || f.k() != g.k())
    throw std::invalid_argument("essential_containment: ambient mismatch");
  std::uint64_t outside = 0;
  for (Mask m : f.masks())
    if (!g.contains(m)) ++outside;
  return Rational(outside, binomial(f.n(), f.k()));
}

}  // namespace clusterkit
