#include "clusterkit/shadow.hpp"

#include "clusterkit/binomial.hpp"
#include "clusterkit/construct.hpp"
#include "clusterkit/parallel.hpp"
#include "clusterkit/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace clusterkit {

LayeredFamily::LayeredFamily(int n, std::map<int, SetFamily> layers) : n_(n) {
  for (const auto& [level, fam] : layers) {
    if (fam.n() != n || fam.k() != level)
      throw std::invalid_argument("LayeredFamily: layer/level mismatch");
  }
  layers_ = std::move(layers);
}

SetFamily LayeredFamily::layer(int r) const {
  auto it = layers_.find(r);
  if (it != layers_.end()) return it->second;
  return SetFamily(n_, std::max(r, 0));
}

std::uint64_t LayeredFamily::layer_size(int r) const {
  auto it = layers_.find(r);
  return it == layers_.end() ? 0 : it->second.size();
}

bool LayeredFamily::is_monotone_closure() const {
  const SetFamily* prev = nullptr;
  for (const auto& [level, fam] : layers_) {
    if (prev) {
      if (level != prev->k() + 1) return false;
      if (upper_shadow(*prev, level) != fam) return false;
    }
    prev = &fam;
  }
  return true;
}

SetFamily upper_shadow(const SetFamily& f, int l) {
  if (l < f.k() || l > f.n())
    throw std::invalid_argument("upper_shadow: need k <= l <= n");
  Mask ground = full_mask(f.n());
  std::vector<Mask> cur = f.masks();
  for (int level = f.k(); level < l; ++level) {
    std::vector<Mask> next;
    next.reserve(cur.size() * static_cast<std::size_t>(f.n() - level));
    for (Mask m : cur) {
      for (Mask rest = ground & ~m; rest != 0; rest &= rest - 1)
        next.push_back(m | (rest & (~rest + 1)));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return SetFamily::from_masks(f.n(), l, std::move(cur));
}

LayeredFamily monotone_closure(const SetFamily& f) {
  std::map<int, SetFamily> layers;
  SetFamily cur = f;
  layers.emplace(f.k(), cur);
  for (int l = f.k() + 1; l <= f.n(); ++l) {
    cur = upper_shadow(cur, l);
    layers.emplace(l, cur);
  }
  return LayeredFamily(f.n(), std::move(layers));
}

Rational biased_measure(const LayeredFamily& lf, const Rational& p) {
  if (!is_probability(p))
    throw std::invalid_argument("biased_measure: p outside [0,1]");
  int n = lf.n();
  Rational q = Rational(1) - p;
  Rational total = 0;
  for (const auto& [r, fam] : lf.layers()) {
    if (fam.empty()) continue;
    // p^r (1-p)^(n-r) C(n,r) mu(layer) = p^r (1-p)^(n-r) |layer|
    total += rational_pow(p, static_cast<std::uint64_t>(r)) *
             rational_pow(q, static_cast<std::uint64_t>(n - r)) *
             Rational(fam.size());
  }
  return total;
}

KKBoundReport kk_verify(const SetFamily& f, int l, const Rational& c_param) {
  int n = f.n(), k = f.k();
  if (!(k < l && l < n))
    throw std::invalid_argument("kk_verify: need k < l < n");
  if (c_param <= 0) throw std::invalid_argument("kk_verify: C must be > 0");
  if (numerator(c_param) > 1000 || denominator(c_param) > 1000)
    throw std::invalid_argument("kk_verify: C numerator/denominator capped at 1000");

  KKBoundReport rep;
  rep.n = n;
  rep.k = k;
  rep.l = l;
  rep.c_param = c_param;
  rep.actual = upper_shadow(f, l).size();

  std::uint64_t star_k = binomial(n - 1, k - 1);
  std::uint64_t star_l = binomial(n - 1, l - 1);
  std::uint64_t fsz = f.size();
  // The lex-family proofs normalize to |F| <= C(n-1,k-1); clamp accordingly.
  std::uint64_t fcl = std::min(fsz, star_k);

  rep.epsilon = Rational(star_k - fcl, star_k);

  int m = 1;
  while (m < n && fsz >= star_k - binomial(n - (m + 1), k - 1)) ++m;
  rep.m = m;
  std::uint64_t denom_k = binomial(n - m, k - 1);
  rep.eps_prime =
      denom_k == 0 ? Rational(1)
                   : Rational(1) - Rational(star_k - fcl, denom_k);

  Rational b1 = Rational(star_l) * (Rational(1) - rep.epsilon);
  Rational b2 = Rational(star_l) -
                (Rational(1) - rep.eps_prime) * Rational(binomial(n - m, l - 1));
  rep.bound1 = static_cast<std::uint64_t>(ceil_rational(b1));
  rep.bound2 = static_cast<std::uint64_t>(ceil_rational(b2));
  rep.satisfied1 = rep.actual >= rep.bound1;
  rep.satisfied2 = rep.actual >= rep.bound2;

  // Third form: actual >= C(n-1,l-1) (1 - C eps^(1+1/C)). With C = p/q the
  // comparison deficit <= C eps^((p+q)/p) is decided exactly by raising both
  // sides to the p-th power.
  Rational deficit = Rational(1) - Rational(rep.actual, star_l);
  if (deficit <= 0) {
    rep.satisfied3 = true;
  } else if (rep.epsilon == 0) {
    rep.satisfied3 = false;
  } else {
    auto p_exp = static_cast<std::uint64_t>(numerator(c_param));
    auto q_exp = static_cast<std::uint64_t>(denominator(c_param));
    rep.satisfied3 = rational_pow(deficit / c_param, p_exp) <=
                     rational_pow(rep.epsilon, p_exp + q_exp);
  }
  // Reported value of C eps^(1+1/C). The exponent makes it irrational in
  // general; emit a 12-digit rational approximation (the satisfied flag above
  // never consults it).
  if (rep.epsilon == 0) {
    rep.bound3_epsilon = 0;
  } else {
    double cd = static_cast<double>(c_param);
    double ed = static_cast<double>(rep.epsilon);
    double val = cd * std::pow(ed, 1.0 + 1.0 / cd);
    rep.bound3_epsilon =
        Rational(static_cast<std::int64_t>(val * 1e12 + 0.5), std::int64_t(1e12));
  }
  return rep;
}

KKMinimalityReport kk_minimality_test(std::uint64_t i, int k, int l, int n,
                                      int samples, std::uint64_t seed) {
  if (!(k < l && l < n))
    throw std::invalid_argument("kk_minimality: need k < l < n");
  if (i > binomial(n, k))
    throw std::invalid_argument("kk_minimality: i exceeds C(n,k)");
  if (samples < 0) throw std::invalid_argument("kk_minimality: samples < 0");

  KKMinimalityReport rep;
  rep.i = i;
  rep.k = k;
  rep.l = l;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  rep.lex_shadow_size = upper_shadow(make_lex_family(i, k, n), l).size();

  if (samples == 0) {
    rep.min_observed = rep.lex_shadow_size;
    rep.pass = true;
    return rep;
  }
  std::vector<std::uint64_t> sizes(static_cast<std::size_t>(samples));
  parallel_for(sizes.size(), [&](std::size_t idx) {
    SetFamily f = make_random_family(n, k, i, derive_seed(seed, idx));
    sizes[idx] = upper_shadow(f, l).size();
  });
  rep.min_observed = *std::min_element(sizes.begin(), sizes.end());
  rep.pass = rep.min_observed >= rep.lex_shadow_size;
  return rep;
}

}  // namespace clusterkit
