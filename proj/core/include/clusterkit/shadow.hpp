#pragma once

#include "clusterkit/family.hpp"
#include "clusterkit/rational.hpp"

#include <cstdint>
#include <map>

namespace clusterkit {

// Layers of a non-uniform family, one uniform SetFamily per level.
class LayeredFamily {
 public:
  LayeredFamily(int n, std::map<int, SetFamily> layers);

  int n() const { return n_; }
  const std::map<int, SetFamily>& layers() const { return layers_; }
  SetFamily layer(int r) const;  // empty family when the level is absent
  std::uint64_t layer_size(int r) const;

  // True iff every stored layer is the upper shadow of the previous one,
  // i.e. the object is F^up for F = the lowest layer.
  bool is_monotone_closure() const;

 private:
  int n_;
  std::map<int, SetFamily> layers_;
};

// F^{up l}: all l-sets containing a member of F. Computed by superset
// expansion level by level, O(sum |layer| * n). For l = k returns F.
SetFamily upper_shadow(const SetFamily& f, int l);

// Layers k..n of F^up (lower levels are empty for a k-uniform F).
LayeredFamily monotone_closure(const SetFamily& f);

// mu_p of a monotone closure via the layer identity
//   mu_p(F^up) = sum_r p^r (1-p)^{n-r} C(n,r) mu(F^{up r}),
// exact. Pre: lf is a monotone closure.
Rational biased_measure(const LayeredFamily& lf, const Rational& p);

// Kruskal-Katona style lower bounds on |F^{up l}|, from the lex-family
// calculus. epsilon is read off |F| = C(n-1,k-1)(1-eps) (clamped at 0 when F
// exceeds the star), m is maximal with |F| >= C(n-1,k-1) - C(n-m,k-1).
struct KKBoundReport {
  int n = 0, k = 0, l = 0;
  std::uint64_t actual = 0;   // |F^{up l}|
  Rational epsilon;           // clamped at 0
  int m = 1;
  Rational eps_prime;         // |F| = C(n-1,k-1) - (1-eps') C(n-m,k-1)
  std::uint64_t bound1 = 0;   // ceil( C(n-1,l-1)(1-eps) )
  std::uint64_t bound2 = 0;   // ceil( C(n-1,l-1) - (1-eps') C(n-m,l-1) )
  Rational c_param;           // caller-supplied constant for the third form
  Rational bound3_epsilon;    // C * eps^(1+1/C), reported approximately
  bool satisfied1 = false;
  bool satisfied2 = false;
  bool satisfied3 = false;    // decided exactly, without floating point
};

// Pre: k < l < n. The first two bounds hold for every family (their
// hypotheses are satisfied by construction of eps, eps', m); the third
// depends on the supplied constant and is informational.
KKBoundReport kk_verify(const SetFamily& f, int l, const Rational& c_param);

struct KKMinimalityReport {
  std::uint64_t i = 0;
  int k = 0, l = 0, n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t lex_shadow_size = 0;  // |L(i,k,n)^{up l}|
  std::uint64_t min_observed = 0;     // smallest sampled |F^{up l}|
  bool pass = false;                  // min_observed >= lex_shadow_size
};

// Samples `samples` uniform families of size i and checks each shadow is at
// least the lex family's. Deterministic given seed, regardless of the thread
// count.
KKMinimalityReport kk_minimality_test(std::uint64_t i, int k, int l, int n,
                                      int samples, std::uint64_t seed);

}  // namespace clusterkit
