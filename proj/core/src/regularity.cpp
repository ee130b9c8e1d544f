#include "clusterkit/regularity.hpp"

#include "clusterkit/binomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterkit {

namespace {

std::vector<Mask> lex_sorted_subsets(int n, int size) {
  std::vector<Mask> out;
  out.reserve(binomial(n, size));
  for_each_ksubset(n, size, [&](Mask m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Index of trace inside the 2^|J| bucket array: bits of `trace` compressed
// onto the positions of J.
std::size_t trace_index(Mask trace, const std::vector<int>& j_positions) {
  std::size_t idx = 0;
  for (std::size_t p = 0; p < j_positions.size(); ++p)
    idx |= static_cast<std::size_t>(trace >> j_positions[p] & 1) << p;
  return idx;
}

}  // namespace

RegularityReport regularity_check(const SetFamily& f, int r,
                                  const Rational& epsilon) {
  if (r < 0 || r > f.n())
    throw std::invalid_argument("regularity_check: need 0 <= r <= n");
  if (epsilon < 0)
    throw std::invalid_argument("regularity_check: epsilon must be >= 0");

  RegularityReport rep;
  rep.r = r;
  rep.epsilon = epsilon;

  Rational mu_f = measure(f);
  Rational best_dev = 0;
  std::optional<RegularityWitness> worst;

  for (int jsize = 0; jsize <= r; ++jsize) {
    for (Mask j : lex_sorted_subsets(f.n(), jsize)) {
      std::vector<int> j_positions;
      for (Mask t = j; t != 0; t &= t - 1)
        j_positions.push_back(std::countr_zero(t));

      std::vector<std::uint64_t> bucket(std::size_t{1} << jsize, 0);
      for (Mask m : f.masks()) ++bucket[trace_index(m & j, j_positions)];

      // Submasks of J from J itself down to the empty set.
      Mask b = j;
      while (true) {
        int bsize = set_size(b);
        std::uint64_t universe = binomial(f.n() - jsize, f.k() - bsize);
        if (bsize <= f.k() && universe > 0) {
          Rational mu_b(bucket[trace_index(b, j_positions)], universe);
          Rational dev = mu_b > mu_f ? mu_b - mu_f : mu_f - mu_b;
          if (dev > best_dev) {
            best_dev = dev;
            worst = RegularityWitness{KSubset::of_mask(j, f.n()),
                                      KSubset::of_mask(b, f.n()), dev};
          }
        }
        if (b == 0) break;
        b = (b - 1) & j;
      }
    }
  }
  rep.regular = best_dev <= epsilon;
  rep.worst = std::move(worst);
  return rep;
}

std::optional<DecompositionResult> find_regular_decomposition(
    const SetFamily& f, const Rational& delta, const Rational& epsilon,
    int j_max) {
  if (delta <= 0 || delta >= 1 || epsilon <= 0 || epsilon >= 1)
    throw std::invalid_argument(
        "find_regular_decomposition: need 0 < delta, epsilon < 1");
  if (j_max < 0 || j_max > f.n())
    throw std::invalid_argument("find_regular_decomposition: bad j_max");

  int r_target = static_cast<int>(ceil_rational(Rational(1) / delta));
  Rational half_eps = epsilon / 2;

  for (int jsize = 0; jsize <= j_max; ++jsize) {
    for (Mask j : lex_sorted_subsets(f.n(), jsize)) {
      KSubset j_set = KSubset::of_mask(j, f.n());
      int r_used = std::min(r_target, f.n() - jsize);

      std::vector<Mask> generators;
      std::vector<DecompositionPart> parts;
      // Every admissible B; the canonical G keeps those passing both
      // conditions of the decomposition.
      Mask b = j;
      while (true) {
        int bsize = set_size(b);
        if (bsize <= f.k() && f.k() - bsize <= f.n() - jsize) {
          SetFamily part = restriction(f, j_set, KSubset::of_mask(b, f.n()));
          Rational mu_part = measure(part);
          if (mu_part > half_eps) {
            RegularityReport reg = regularity_check(part, r_used, delta);
            if (reg.regular) {
              generators.push_back(b);
              parts.push_back(DecompositionPart{KSubset::of_mask(b, f.n()),
                                                mu_part, true, r_used});
            }
          }
        }
        if (b == 0) break;
        b = (b - 1) & j;
      }

      Junta junta(f.n(), f.k(), j_set, generators);
      Rational remainder = essential_containment(f, junta.generate());
      if (remainder <= epsilon) {
        std::sort(generators.begin(), generators.end(), lex_less);
        std::sort(parts.begin(), parts.end(),
                  [](const DecompositionPart& a, const DecompositionPart& b2) {
                    return lex_less(a.b_set.mask(), b2.b_set.mask());
                  });
        return DecompositionResult{j_set, std::move(generators), remainder,
                                   std::move(parts)};
      }
    }
  }
  return std::nullopt;
}

JuntaClusterVerdict junta_cluster_equivalence(const Junta& junta, int d,
                                              int s) {
  if (d < 1) throw std::invalid_argument("junta_cluster_equivalence: d >= 1");
  if (s < 0) throw std::invalid_argument("junta_cluster_equivalence: s >= 0");

  JuntaClusterVerdict verdict;
  int j = junta.j_set().size();
  // s >= (d+1)k/d + j  <=>  s d >= (d+1)k + j d
  verdict.hypotheses_hold =
      static_cast<long long>(s) * d >=
          static_cast<long long>(d + 1) * junta.k() +
              static_cast<long long>(j) * d &&
      junta.n() >= s;

  SetFamily realized = junta.generate();
  verdict.cluster = find_cluster(realized, d, s);
  verdict.cluster_free = !verdict.cluster.has_value();
  SWiseReport swise = s_wise_intersecting(realized, d + 1);
  verdict.dplus1_wise = swise.intersecting;
  verdict.violating_tuple = std::move(swise.violating);
  verdict.equivalent = verdict.cluster_free == verdict.dplus1_wise;
  return verdict;
}

StabilityReport stability_report(const SetFamily& f) {
  if (f.n() < 1) throw std::invalid_argument("stability_report: empty ground");
  int best_center = 1;
  std::uint64_t best_outside = f.size() + 1;
  for (int c = 1; c <= f.n(); ++c) {
    Mask bit = Mask{1} << (c - 1);
    std::uint64_t outside = 0;
    for (Mask m : f.masks())
      if (!(m & bit)) ++outside;
    if (outside < best_outside) {
      best_outside = outside;
      best_center = c;
    }
  }
  StabilityReport rep;
  rep.best_center = best_center;
  rep.outside_measure = Rational(best_outside, binomial(f.n(), f.k()));
  std::uint64_t inside = f.size() - best_outside;
  std::uint64_t star = binomial(f.n() - 1, f.k() - 1);
  rep.inside_deficit = star == 0 ? Rational(0)
                                 : Rational(1) - Rational(inside, star);
  return rep;
}

}  // namespace clusterkit
