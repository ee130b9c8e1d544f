#pragma once

#include "clusterkit/binomial.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace clusterkit {

// Element e of [1,n] lives at bit e-1.
using Mask = std::uint64_t;

constexpr Mask full_mask(int n) { return n <= 0 ? 0 : ~Mask{0} >> (64 - n); }

inline int set_size(Mask m) { return std::popcount(m); }

// A subset of [1,n], canonically the sorted element list; the mask is the
// working representation.
class KSubset {
 public:
  KSubset() = default;
  KSubset(std::initializer_list<int> elems, int n);

  static KSubset of(const std::vector<int>& elems, int n);
  static KSubset of_mask(Mask m, int n);
  static KSubset empty(int n) { return of_mask(0, n); }

  Mask mask() const { return mask_; }
  int ambient() const { return n_; }
  int size() const { return set_size(mask_); }
  bool contains(int e) const {
    return e >= 1 && e <= n_ && (mask_ >> (e - 1) & 1);
  }
  std::vector<int> elements() const;

  friend bool operator==(const KSubset&, const KSubset&) = default;

 private:
  KSubset(Mask m, int n) : mask_(m), n_(n) {}
  Mask mask_ = 0;
  int n_ = 0;
};

std::string to_string(const KSubset& a);  // "1,3,4"; "-" for the empty set

enum class LexOrder { less, equal, greater };

// A <_L B iff min(A delta B) lies in A. Total order on C([n],k); requires
// matching ambient and size.
LexOrder lex_compare(const KSubset& a, const KSubset& b);

// Raw-mask strict comparison, no validation.
inline bool lex_less(Mask a, Mask b) {
  Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

// Position of a in the lex ordering of C([1..n], |a|), zero-based.
std::uint64_t lex_rank(const KSubset& a);

// Inverse of lex_rank: the i-th k-subset of [1,n] in lex order, i in
// [0, C(n,k)).
Mask lex_unrank_mask(std::uint64_t i, int k, int n);
KSubset lex_unrank(std::uint64_t i, int k, int n);

// Calls fn(mask) for every k-subset of [1,n]. Enumeration order is
// unspecified.
template <typename Fn>
void for_each_ksubset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  Mask m = full_mask(k);
  Mask limit = Mask{1} << n;
  while (m < limit) {
    fn(m);
    // Gosper's hack: next mask with the same popcount.
    Mask c = m & (~m + 1);
    Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

}  // namespace clusterkit
