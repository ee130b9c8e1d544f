#include "clusterkit/kset.hpp"

#include <stdexcept>

namespace clusterkit {

namespace {

void check_ambient(int n) {
  if (n < 0 || n > kMaxGround)
    throw std::invalid_argument("ambient n out of range [0," +
                                std::to_string(kMaxGround) + "]");
}

}  // namespace

KSubset::KSubset(std::initializer_list<int> elems, int n) {
  *this = of(std::vector<int>(elems), n);
}

KSubset KSubset::of(const std::vector<int>& elems, int n) {
  check_ambient(n);
  Mask m = 0;
  for (int e : elems) {
    if (e < 1 || e > n)
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " outside [1," + std::to_string(n) + "]");
    Mask bit = Mask{1} << (e - 1);
    if (m & bit)
      throw std::invalid_argument("duplicate element " + std::to_string(e));
    m |= bit;
  }
  return KSubset(m, n);
}

KSubset KSubset::of_mask(Mask m, int n) {
  check_ambient(n);
  if (m & ~full_mask(n))
    throw std::invalid_argument("mask has bits outside [1,n]");
  return KSubset(m, n);
}

std::vector<int> KSubset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = mask_; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string to_string(const KSubset& a) {
  if (a.mask() == 0) return "-";
  std::string out;
  for (int e : a.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

LexOrder lex_compare(const KSubset& a, const KSubset& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("lex_compare: mismatched ambient n");
  if (a.size() != b.size())
    throw std::invalid_argument("lex_compare: mismatched set size");
  if (a.mask() == b.mask()) return LexOrder::equal;
  return lex_less(a.mask(), b.mask()) ? LexOrder::less : LexOrder::greater;
}

std::uint64_t lex_rank(const KSubset& a) {
  int n = a.ambient();
  int k = a.size();
  std::uint64_t rank = 0;
  int next = 1;  // smallest element not yet decided
  int remaining = k;
  for (int e : a.elements()) {
    // Sets whose next element is any x < e precede the block containing a.
    for (int x = next; x < e; ++x) rank += binomial(n - x, remaining - 1);
    next = e + 1;
    --remaining;
  }
  return rank;
}

Mask lex_unrank_mask(std::uint64_t i, int k, int n) {
  if (k < 0 || k > n || i >= binomial(n, k))
    throw std::invalid_argument("lex_unrank: rank out of range");
  Mask m = 0;
  int x = 1;
  int remaining = k;
  while (remaining > 0) {
    std::uint64_t with_x = binomial(n - x, remaining - 1);
    if (i < with_x) {
      m |= Mask{1} << (x - 1);
      --remaining;
    } else {
      i -= with_x;
    }
    ++x;
  }
  return m;
}

KSubset lex_unrank(std::uint64_t i, int k, int n) {
  return KSubset::of_mask(lex_unrank_mask(i, k, n), n);
}

}  // namespace clusterkit
