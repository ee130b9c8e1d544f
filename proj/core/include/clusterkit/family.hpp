#pragma once

#include "clusterkit/kset.hpp"
#include "clusterkit/rational.hpp"

#include <cstddef>
#include <vector>

namespace clusterkit {

// A k-uniform family over [1,n]. Members are stored lex-sorted and unique;
// instances are immutable after construction.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(int n, int k);  // empty family with ambient parameters

  // Sorts into lex order and drops duplicates. Every mask must have
  // popcount k and fit inside [1,n].
  static SetFamily from_masks(int n, int k, std::vector<Mask> masks);
  static SetFamily full(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return masks_.size(); }
  bool empty() const { return masks_.empty(); }
  const std::vector<Mask>& masks() const { return masks_; }
  bool contains(Mask m) const;
  bool contains(const KSubset& a) const { return contains(a.mask()); }
  KSubset member(std::size_t idx) const {
    return KSubset::of_mask(masks_[idx], n_);
  }
  std::vector<KSubset> members() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Mask> masks_;
};

// |F| / C(n,k), exact.
Rational measure(const SetFamily& f);

// F_J^B = {A in C([n]\J, k-|B|) : A u B in F}, with the surviving ground
// set [n]\J relabeled order-preservingly to [1, n-|J|]. Requires B <= J and
// |B| <= k.
SetFamily restriction(const SetFamily& f, const KSubset& j_set,
                      const KSubset& b_set);

// The minimal eps with |F\G| <= eps*C(n,k), i.e. |F\G| / C(n,k).
Rational essential_containment(const SetFamily& f, const SetFamily& g);

}  // namespace clusterkit
