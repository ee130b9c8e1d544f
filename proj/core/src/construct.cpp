#include "clusterkit/construct.hpp"

#include "clusterkit/binomial.hpp"
#include "clusterkit/rng.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace clusterkit {

SetFamily make_star(int n, int k, int center) {
  if (center < 1 || center > n)
    throw std::invalid_argument("star: center outside [1,n]");
  if (k < 1 || k > n) throw std::invalid_argument("star: need 1 <= k <= n");
  Mask center_bit = Mask{1} << (center - 1);
  std::vector<int> others;
  for (int e = 0; e < n; ++e)
    if (e != center - 1) others.push_back(e);

  std::vector<Mask> out;
  out.reserve(binomial(n - 1, k - 1));
  for_each_ksubset(n - 1, k - 1, [&](Mask packed) {
    Mask m = center_bit;
    for (Mask t = packed; t != 0; t &= t - 1)
      m |= Mask{1} << others[std::countr_zero(t)];
    out.push_back(m);
  });
  return SetFamily::from_masks(n, k, std::move(out));
}

SetFamily make_frankl_furedi(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("frankl_furedi: bad k");
  if (n % k != 0)
    throw std::invalid_argument("frankl_furedi: k must divide n");
  int block = n / k;
  std::vector<Mask> out;
  std::vector<int> pick(k, 0);
  // One element from each consecutive block; odometer enumeration.
  while (true) {
    Mask m = 0;
    for (int i = 0; i < k; ++i) m |= Mask{1} << (i * block + pick[i]);
    out.push_back(m);
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == block - 1) pick[pos--] = 0;
    if (pos < 0) break;
    ++pick[pos];
  }
  return SetFamily::from_masks(n, k, std::move(out));
}

SetFamily make_odd_bipartite(int n, int k) {
  if (n % 2 != 0)
    throw std::invalid_argument("odd_bipartite: n must be even");
  if (k < 0 || k > n) throw std::invalid_argument("odd_bipartite: bad k");
  int half = n / 2;
  std::vector<Mask> out;
  for (int j = 1; j <= std::min(k, half); j += 2) {
    if (k - j > half) continue;
    for_each_ksubset(half, j, [&](Mask lo) {
      for_each_ksubset(half, k - j, [&](Mask hi) {
        out.push_back(lo | (hi << half));
      });
    });
  }
  return SetFamily::from_masks(n, k, std::move(out));
}

namespace {

// Emits the `count` lex-first extensions; candidates start at element x.
void emit_lex_prefix(int n, int x, int remaining, std::uint64_t count,
                     Mask acc, std::vector<Mask>& out) {
  if (count == 0) return;
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  // Sets containing x come first in lex order.
  std::uint64_t with_x = binomial(n - x, remaining - 1);
  std::uint64_t take = std::min(count, with_x);
  emit_lex_prefix(n, x + 1, remaining - 1, take, acc | (Mask{1} << (x - 1)),
                  out);
  if (count > with_x)
    emit_lex_prefix(n, x + 1, remaining, count - with_x, acc, out);
}

}  // namespace

SetFamily make_lex_family(std::uint64_t i, int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("lex_family: bad k");
  if (i > binomial(n, k))
    throw std::invalid_argument("lex_family: rank beyond C(n,k)");
  std::vector<Mask> out;
  out.reserve(i);
  emit_lex_prefix(n, 1, k, i, 0, out);
  return SetFamily::from_masks(n, k, std::move(out));
}

SetFamily make_random_family(int n, int k, std::uint64_t m,
                             std::uint64_t seed) {
  std::uint64_t total = binomial(n, k);
  if (m > total)
    throw std::invalid_argument("random family: m exceeds C(n,k)");
  Rng rng(seed);
  std::vector<std::uint64_t> ranks;
  if (total <= (1u << 21)) {
    std::vector<std::uint64_t> pool(total);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::uint64_t i = 0; i < m; ++i)
      std::swap(pool[i], pool[i + rng.below(total - i)]);
    ranks.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
  } else {
    std::unordered_set<std::uint64_t> seen;
    while (seen.size() < m) seen.insert(rng.below(total));
    ranks.assign(seen.begin(), seen.end());
  }
  std::vector<Mask> out;
  out.reserve(m);
  for (std::uint64_t r : ranks) out.push_back(lex_unrank_mask(r, k, n));
  return SetFamily::from_masks(n, k, std::move(out));
}

}  // namespace clusterkit
