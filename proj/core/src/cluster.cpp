#include "clusterkit/cluster.hpp"

#include "clusterkit/binomial.hpp"
#include "clusterkit/rng.hpp"
#include "clusterkit/shadow.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterkit {

namespace {

constexpr std::uint64_t kRejectionCap = 1'000'000;

int validate_tuple(const std::vector<KSubset>& sets, int d) {
  if (d < 1) throw std::invalid_argument("cluster: d must be >= 1");
  if (static_cast<int>(sets.size()) != d + 1)
    throw std::invalid_argument("cluster: expected exactly d+1 sets");
  int k = sets[0].size();
  int n = sets[0].ambient();
  for (const auto& a : sets)
    if (a.size() != k || a.ambient() != n)
      throw std::invalid_argument("cluster: mixed sizes or ambients");
  return k;
}

bool has_duplicates(const std::vector<KSubset>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].mask() == sets[j].mask()) return true;
  return false;
}

// Every drop-one intersection nonempty (the simplex side condition).
bool all_d_wise_nonempty(const std::vector<Mask>& masks, int* bad_index) {
  for (std::size_t skip = 0; skip < masks.size(); ++skip) {
    Mask inter = ~Mask{0};
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (i != skip) inter &= masks[i];
    if (inter == 0) {
      if (bad_index) *bad_index = static_cast<int>(skip);
      return false;
    }
  }
  return true;
}

}  // namespace

ClusterCheck check_cluster(const std::vector<KSubset>& sets, int d, int s) {
  int k = validate_tuple(sets, d);
  (void)k;
  if (s < 0) throw std::invalid_argument("cluster: s must be >= 0");

  ClusterCheck result;
  if (has_duplicates(sets)) {
    result.failure = ClusterFailure::duplicates;
    return result;
  }
  Mask uni = 0;
  Mask inter = ~Mask{0};
  for (const auto& a : sets) {
    uni |= a.mask();
    inter &= a.mask();
  }
  if (set_size(uni) > s) {
    result.failure = ClusterFailure::union_too_large;
    return result;
  }
  if (inter != 0) {
    result.failure = ClusterFailure::intersection_nonempty;
    return result;
  }
  result.witness = ClusterWitness{sets, set_size(uni), d, s};
  return result;
}

SimplexReport simplex_check(const std::vector<KSubset>& sets) {
  int d = static_cast<int>(sets.size()) - 1;
  int k = validate_tuple(sets, d);
  if (has_duplicates(sets))
    throw std::invalid_argument("simplex_check: sets must be distinct");

  std::vector<Mask> masks;
  masks.reserve(sets.size());
  Mask uni = 0;
  Mask inter = ~Mask{0};
  for (const auto& a : sets) {
    masks.push_back(a.mask());
    uni |= a.mask();
    inter &= a.mask();
  }
  SimplexReport rep;
  rep.union_size = set_size(uni);
  if (inter != 0) {
    rep.is_simplex = false;
  } else {
    int bad = -1;
    if (all_d_wise_nonempty(masks, &bad)) {
      rep.is_simplex = true;
    } else {
      std::vector<int> subset;
      for (int i = 0; i <= d; ++i)
        if (i != bad) subset.push_back(i);
      rep.missing_d_subset = std::move(subset);
    }
  }
  rep.is_simplex_cluster = rep.is_simplex && rep.union_size <= 2 * k;
  return rep;
}

namespace {

struct TupleEnumerator {
  const SetFamily& fam;
  int d;
  int union_bound;          // running prune; clusters cannot shrink unions
  ClusterSearchMode mode;
  int witness_s;
  // Returns true to stop the enumeration.
  std::function<bool(const std::vector<int>&, Mask)> emit;

  std::vector<int> picked;

  bool leaf(Mask uni, Mask inter) {
    if (inter != 0) return false;
    if (mode != ClusterSearchMode::exhaustive) {
      std::vector<Mask> masks;
      masks.reserve(picked.size());
      for (int i : picked) masks.push_back(fam.masks()[i]);
      if (!all_d_wise_nonempty(masks, nullptr)) return false;
    }
    return emit(picked, uni);
  }

  bool run(int start, Mask uni, Mask inter) {
    if (static_cast<int>(picked.size()) == d + 1) return leaf(uni, inter);
    int need = d + 1 - static_cast<int>(picked.size());
    int last = static_cast<int>(fam.size()) - need;
    for (int i = start; i <= last; ++i) {
      Mask m = fam.masks()[i];
      Mask u = uni | m;
      if (set_size(u) > union_bound) continue;
      picked.push_back(i);
      if (run(i + 1, u, inter & m)) return true;
      picked.pop_back();
    }
    return false;
  }
};

ClusterWitness make_witness(const SetFamily& fam, const std::vector<int>& idx,
                            Mask uni, int d, int s) {
  ClusterWitness w;
  w.sets.reserve(idx.size());
  for (int i : idx) w.sets.push_back(fam.member(static_cast<std::size_t>(i)));
  w.union_size = set_size(uni);
  w.d = d;
  w.s = s;
  return w;
}

int effective_union_bound(const SetFamily& f, int s, ClusterSearchMode mode) {
  switch (mode) {
    case ClusterSearchMode::exhaustive: return s;
    case ClusterSearchMode::simplex_only: return f.n();
    case ClusterSearchMode::simplex_cluster_only: return 2 * f.k();
  }
  return s;
}

}  // namespace

std::optional<ClusterWitness> find_cluster(const SetFamily& f, int d, int s,
                                           ClusterSearchMode mode) {
  if (d < 1) throw std::invalid_argument("find_cluster: d must be >= 1");
  if (s < 0) throw std::invalid_argument("find_cluster: s must be >= 0");
  std::optional<ClusterWitness> found;
  int ubound = effective_union_bound(f, s, mode);
  TupleEnumerator en{f, d, ubound, mode, ubound, nullptr};
  en.emit = [&](const std::vector<int>& idx, Mask uni) {
    found = make_witness(f, idx, uni, d, en.witness_s);
    return true;
  };
  en.run(0, 0, ~Mask{0});
  return found;
}

std::uint64_t for_each_cluster(
    const SetFamily& f, int d, int s, ClusterSearchMode mode,
    const std::function<void(const ClusterWitness&)>& fn) {
  if (d < 1) throw std::invalid_argument("for_each_cluster: d must be >= 1");
  if (s < 0) throw std::invalid_argument("for_each_cluster: s must be >= 0");
  std::uint64_t count = 0;
  int ubound = effective_union_bound(f, s, mode);
  TupleEnumerator en{f, d, ubound, mode, ubound, nullptr};
  en.emit = [&](const std::vector<int>& idx, Mask uni) {
    ++count;
    if (fn) fn(make_witness(f, idx, uni, d, en.witness_s));
    return false;
  };
  en.run(0, 0, ~Mask{0});
  return count;
}

std::optional<ClusterWitness> find_cross_cluster(
    const std::vector<SetFamily>& families, int s, bool require_distinct) {
  if (families.size() < 2)
    throw std::invalid_argument("cross_cluster: need at least two families");
  if (s < 0) throw std::invalid_argument("cross_cluster: s must be >= 0");
  int n = families[0].n();
  int k = families[0].k();
  for (const auto& f : families)
    if (f.n() != n || f.k() != k)
      throw std::invalid_argument("cross_cluster: mixed ambients");

  int d = static_cast<int>(families.size()) - 1;
  std::vector<Mask> picked;
  std::optional<ClusterWitness> found;

  auto rec = [&](auto&& self, std::size_t idx, Mask uni, Mask inter) -> bool {
    if (idx == families.size()) {
      if (inter != 0) return false;
      ClusterWitness w;
      for (Mask m : picked) w.sets.push_back(KSubset::of_mask(m, n));
      w.union_size = set_size(uni);
      w.d = d;
      w.s = s;
      found = std::move(w);
      return true;
    }
    for (Mask m : families[idx].masks()) {
      if (require_distinct &&
          std::find(picked.begin(), picked.end(), m) != picked.end())
        continue;
      Mask u = uni | m;
      if (set_size(u) > s) continue;
      picked.push_back(m);
      if (self(self, idx + 1, u, inter & m)) return true;
      picked.pop_back();
    }
    return false;
  };
  rec(rec, 0, 0, ~Mask{0});
  return found;
}

UnionBoundReport union_bound_criterion(const std::vector<SetFamily>& families,
                                       int l) {
  if (families.size() < 2)
    throw std::invalid_argument("union_bound: need at least two families");
  UnionBoundReport rep;
  rep.level = l;
  rep.sum_of_deficits = 0;
  for (const auto& f : families)
    rep.sum_of_deficits += Rational(1) - measure(upper_shadow(f, l));
  rep.guaranteed = rep.sum_of_deficits < 1;
  return rep;
}

int intersection_lower_bound(int d, int k, int s) {
  if (d < 1 || k < 1 || s < 0)
    throw std::invalid_argument("intersection_lower_bound: bad parameters");
  return k - (d - 1) * (s - k);
}

bool tight_implies_simplex(int d, int k, int s) {
  if (d < 1 || k < 1 || s < 0)
    throw std::invalid_argument("tight_implies_simplex: bad parameters");
  if (d == 1) return false;  // the d/(d-1) threshold is undefined
  return static_cast<long long>(s) * (d - 1) < static_cast<long long>(d) * k;
}

ClusterWitness sample_random_cluster(int d, int l, const KSubset& ground,
                                     std::uint64_t seed) {
  if (d < 1 || l < 1)
    throw std::invalid_argument("sample_random_cluster: bad parameters");
  int m = (l * (d + 1) + d - 1) / d;  // ceil((d+1) l / d)
  if (ground.size() < m)
    throw std::invalid_argument("sample_random_cluster: ground smaller than s");

  Rng rng(seed);
  std::vector<int> pool = ground.elements();
  for (int i = 0; i < m; ++i) {
    std::size_t j =
        static_cast<std::size_t>(i) +
        static_cast<std::size_t>(rng.below(pool.size() - static_cast<std::size_t>(i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  std::vector<int> s_elems(pool.begin(), pool.begin() + m);
  std::sort(s_elems.begin(), s_elems.end());

  std::uint64_t total = binomial(m, l);
  std::vector<std::uint64_t> ranks(static_cast<std::size_t>(d) + 1);
  for (std::uint64_t attempt = 0; attempt < kRejectionCap; ++attempt) {
    for (auto& r : ranks) r = rng.below(total);
    bool distinct = true;
    for (std::size_t i = 0; i < ranks.size() && distinct; ++i)
      for (std::size_t j = i + 1; j < ranks.size(); ++j)
        if (ranks[i] == ranks[j]) {
          distinct = false;
          break;
        }
    if (!distinct) continue;

    std::vector<Mask> masks;
    masks.reserve(ranks.size());
    Mask inter = ~Mask{0};
    Mask uni = 0;
    for (std::uint64_t r : ranks) {
      Mask packed = lex_unrank_mask(r, l, m);
      Mask mask = 0;
      for (Mask t = packed; t != 0; t &= t - 1)
        mask |= Mask{1} << (s_elems[static_cast<std::size_t>(std::countr_zero(t))] - 1);
      masks.push_back(mask);
      inter &= mask;
      uni |= mask;
    }
    if (inter != 0) continue;

    ClusterWitness w;
    for (Mask mk : masks) w.sets.push_back(KSubset::of_mask(mk, ground.ambient()));
    w.union_size = set_size(uni);
    w.d = d;
    w.s = m;
    return w;
  }
  throw std::runtime_error(
      "sample_random_cluster: rejection cap exceeded (d=" + std::to_string(d) +
      ", l=" + std::to_string(l) + ", |ground|=" + std::to_string(ground.size()) +
      ")");
}

SWiseReport s_wise_intersecting(const SetFamily& f, int s) {
  if (s < 2) throw std::invalid_argument("s_wise: s must be >= 2");
  SWiseReport rep;
  rep.s = s;

  const auto& masks = f.masks();
  int count = static_cast<int>(masks.size());
  int t = std::min(s, count);
  if (t == 0) {
    rep.intersecting = true;
    return rep;
  }

  std::vector<int> picked;
  // Lex DFS; once the running intersection dies, the lex-least completion is
  // the consecutive one.
  auto rec = [&](auto&& self, int start, Mask inter) -> bool {
    int depth = static_cast<int>(picked.size());
    if (depth == t) return inter == 0;
    if (count - start < t - depth) return false;
    if (inter == 0) {
      for (int i = start; static_cast<int>(picked.size()) < t; ++i)
        picked.push_back(i);
      return true;
    }
    for (int i = start; i <= count - (t - depth); ++i) {
      picked.push_back(i);
      if (self(self, i + 1, inter & masks[static_cast<std::size_t>(i)]))
        return true;
      picked.pop_back();
    }
    return false;
  };

  if (rec(rec, 0, ~Mask{0})) {
    std::vector<KSubset> tuple;
    tuple.reserve(picked.size());
    for (int i : picked) tuple.push_back(f.member(static_cast<std::size_t>(i)));
    rep.violating = std::move(tuple);
    rep.intersecting = false;
  } else {
    rep.intersecting = true;
  }
  return rep;
}

}  // namespace clusterkit
