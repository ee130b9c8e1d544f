#include "clusterkit/solver.hpp"

#include "clusterkit/binomial.hpp"
#include "clusterkit/cluster.hpp"
#include "clusterkit/construct.hpp"
#include "clusterkit/rng.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

namespace clusterkit {

namespace {

using Clock = std::chrono::steady_clock;

// No d-subset of `chosen` forms a cluster together with `cand`.
bool can_add(const std::vector<Mask>& chosen, Mask cand, int d, int s) {
  int c = static_cast<int>(chosen.size());
  if (c < d) return true;
  if (d == 1) {
    for (Mask a : chosen)
      if (set_size(a | cand) <= s && (a & cand) == 0) return false;
    return true;
  }
  if (d == 2) {
    for (int i = 0; i < c; ++i) {
      Mask u1 = cand | chosen[i];
      if (set_size(u1) > s) continue;  // unions only grow
      Mask i1 = cand & chosen[i];
      for (int j = i + 1; j < c; ++j) {
        if (set_size(u1 | chosen[j]) <= s && (i1 & chosen[j]) == 0)
          return false;
      }
    }
    return true;
  }
  // General d: pick d members with running union prune.
  std::function<bool(int, int, Mask, Mask)> rec = [&](int start, int need,
                                                      Mask uni, Mask inter) {
    if (need == 0) return inter == 0;
    for (int i = start; i <= c - need; ++i) {
      Mask u = uni | chosen[i];
      if (set_size(u) > s) continue;
      if (rec(i + 1, need - 1, u, inter & chosen[i])) return true;
    }
    return false;
  };
  return !rec(0, d, cand, cand);
}

// `cand` stays addable after `added` joined the chosen set: no cluster made
// of cand, added, and d-1 earlier members. Clusters avoiding `added` were
// ruled out by earlier filters.
bool still_addable(const std::vector<Mask>& prev, Mask added, Mask cand, int d,
                   int s) {
  Mask base_u = cand | added;
  if (set_size(base_u) > s) return true;
  Mask base_i = cand & added;
  if (d == 1) return base_i != 0;
  int c = static_cast<int>(prev.size());
  if (c < d - 1) return true;
  if (d == 2) {
    for (Mask a : prev)
      if (set_size(base_u | a) <= s && (base_i & a) == 0) return false;
    return true;
  }
  std::function<bool(int, int, Mask, Mask)> rec = [&](int start, int need,
                                                      Mask uni, Mask inter) {
    if (need == 0) return inter == 0;
    for (int i = start; i <= c - need; ++i) {
      Mask u = uni | prev[i];
      if (set_size(u) > s) continue;
      if (rec(i + 1, need - 1, u, inter & prev[i])) return true;
    }
    return false;
  };
  return !rec(0, d - 1, base_u, base_i);
}

std::vector<Mask> lex_universe(int n, int k) {
  std::vector<Mask> all;
  all.reserve(binomial(n, k));
  for_each_ksubset(n, k, [&](Mask m) { all.push_back(m); });
  std::sort(all.begin(), all.end(), lex_less);
  return all;
}

class BranchAndBound {
 public:
  BranchAndBound(int d, int s, const SolveBudget& budget)
      : d_(d), s_(s), max_nodes_(budget.max_nodes) {
    if (budget.max_wall_ms > 0) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double, std::milli>(
                                         budget.max_wall_ms));
      has_deadline_ = true;
    }
  }

  // Maximization. Returns the best family found; exact iff not aborted.
  std::vector<Mask> maximize(const std::vector<Mask>& universe,
                             std::vector<Mask> incumbent,
                             std::uint64_t star_size, bool stop_on_improve) {
    star_size_ = star_size;
    stop_on_improve_ = stop_on_improve;
    best_ = incumbent.size();
    best_family_ = std::move(incumbent);
    enumerate_target_ = 0;
    chosen_.clear();
    dfs(universe, 0);
    return best_family_;
  }

  // Enumerates every cluster-free family of exactly `target` members drawn
  // from universe[from..]; `preset` members are already fixed.
  void enumerate(const std::vector<Mask>& universe, std::vector<Mask> preset,
                 std::uint64_t target,
                 const std::function<bool(const std::vector<Mask>&)>& sink) {
    enumerate_target_ = target;
    sink_ = sink;
    stop_enumeration_ = false;
    chosen_ = std::move(preset);
    if (chosen_.size() == target) {
      sink_(chosen_);
      return;
    }
    dfs(universe, 0);
  }

  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

 private:
  bool budget_exceeded() {
    if (max_nodes_ > 0 && nodes_ > max_nodes_) return true;
    if (has_deadline_ && (nodes_ & 0xfff) == 0 && Clock::now() > deadline_)
      return true;
    return false;
  }

  void record_if_best() {
    if (chosen_.size() > best_) {
      best_ = chosen_.size();
      best_family_ = chosen_;
      if (stop_on_improve_ && best_ > star_size_) stop_enumeration_ = true;
    }
  }

  void dfs(const std::vector<Mask>& cands, std::size_t idx) {
    if (aborted_ || stop_enumeration_) return;
    ++nodes_;
    if (budget_exceeded()) {
      aborted_ = true;
      return;
    }
    std::size_t remaining = cands.size() - idx;
    bool enumerating = enumerate_target_ > 0;
    if (enumerating) {
      if (chosen_.size() + remaining < enumerate_target_) return;
    } else {
      if (chosen_.size() + remaining <= best_) return;
    }
    if (idx == cands.size()) return;

    Mask a = cands[idx];
    auto include = [&] {
      chosen_.push_back(a);
      bool done = false;
      if (enumerating) {
        if (chosen_.size() == enumerate_target_) {
          if (!sink_(chosen_)) stop_enumeration_ = true;
          done = true;  // extensions would exceed the target
        }
      } else {
        record_if_best();
      }
      if (!done) {
        std::vector<Mask> filtered;
        filtered.reserve(cands.size() - idx - 1);
        std::vector<Mask> prev(chosen_.begin(), chosen_.end() - 1);
        for (std::size_t i = idx + 1; i < cands.size(); ++i)
          if (still_addable(prev, a, cands[i], d_, s_))
            filtered.push_back(cands[i]);
        dfs(filtered, 0);
      }
      chosen_.pop_back();
    };
    auto exclude = [&] { dfs(cands, idx + 1); };

    // Exclude-first while the incumbent is still the star: the search then
    // leans toward proving the star optimal. Once beaten, dig for maxima.
    bool exclude_first = !enumerating && best_ == star_size_;
    if (exclude_first) {
      exclude();
      include();
    } else {
      include();
      exclude();
    }
  }

  int d_;
  int s_;
  std::uint64_t max_nodes_ = 0;
  Clock::time_point deadline_{};
  bool has_deadline_ = false;

  std::uint64_t star_size_ = 0;
  bool stop_on_improve_ = false;
  std::uint64_t enumerate_target_ = 0;
  std::function<bool(const std::vector<Mask>&)> sink_;
  bool stop_enumeration_ = false;

  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::uint64_t best_ = 0;
  std::vector<Mask> best_family_;
  std::vector<Mask> chosen_;
};

void validate_instance(int d, int k, int s, int n) {
  if (d < 1) throw std::invalid_argument("solve: d must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("solve: need 1 <= k <= n");
  if (s < 0) throw std::invalid_argument("solve: s must be >= 0");
  if (n > kMaxGround) throw std::invalid_argument("solve: n too large");
  if (binomial(n, k) > (1u << 20))
    throw std::invalid_argument("solve: C(n,k) beyond desk scale");
}

UniquenessReport enumerate_and_check_maxima(int d, int k, int s, int n,
                                            std::uint64_t value,
                                            bool symmetry_break,
                                            const SolveBudget& budget,
                                            std::uint64_t* nodes_out) {
  UniquenessReport rep;
  rep.checked = true;
  rep.all_maxima_are_stars = true;

  std::vector<Mask> universe = lex_universe(n, k);
  BranchAndBound bb(d, s, budget);

  auto is_star = [&](const std::vector<Mask>& fam) {
    Mask common = ~Mask{0};
    for (Mask m : fam) common &= m;
    return common != 0;
  };
  auto sink = [&](const std::vector<Mask>& fam) {
    ++rep.maxima_checked;
    if (!is_star(fam)) {
      rep.all_maxima_are_stars = false;
      rep.counterexample = SetFamily::from_masks(n, k, fam);
      return false;  // one counterexample settles it
    }
    return true;
  };

  if (symmetry_break) {
    // Every relabeling orbit has a member containing the lex-first k-set,
    // and star-ness is relabeling-invariant, so fixing universe[0] inside
    // the family is sound for this check.
    std::vector<Mask> preset{universe[0]};
    std::vector<Mask> rest;
    for (std::size_t i = 1; i < universe.size(); ++i)
      if (still_addable({}, universe[0], universe[i], d, s))
        rest.push_back(universe[i]);
    bb.enumerate(rest, preset, value, sink);
  } else {
    bb.enumerate(universe, {}, value, sink);
  }
  if (nodes_out) *nodes_out += bb.nodes();
  if (bb.aborted()) rep.checked = false;
  return rep;
}

}  // namespace

SolveResult solve(const SolveInstance& inst) {
  validate_instance(inst.d, inst.k, inst.s, inst.n);
  auto start = Clock::now();

  SolveResult res;
  res.d = inst.d;
  res.k = inst.k;
  res.s = inst.s;
  res.n = inst.n;

  std::uint64_t star_size = binomial(inst.n - 1, inst.k - 1);

  if (inst.mode == SolveMode::greedy) {
    res.witness = greedy_lower_bound(inst.d, inst.k, inst.s, inst.n, inst.seed,
                                     inst.restarts);
    res.value = res.witness.size();
    res.exact = false;
    res.star_is_max = false;
    res.stats.wall_ms = std::chrono::duration<double, std::milli>(
                            Clock::now() - start)
                            .count();
    return res;
  }

  std::vector<Mask> universe = lex_universe(inst.n, inst.k);
  std::vector<Mask> star = make_star(inst.n, inst.k, 1).masks();
  if (!inst.relabel.empty()) {
    if (static_cast<int>(inst.relabel.size()) != inst.n)
      throw std::invalid_argument("solve: relabel must permute [1,n]");
    Mask seen = 0;
    for (int e : inst.relabel) {
      if (e < 1 || e > inst.n) throw std::invalid_argument("solve: bad relabel");
      seen |= Mask{1} << (e - 1);
    }
    if (seen != full_mask(inst.n))
      throw std::invalid_argument("solve: relabel must permute [1,n]");
    auto apply = [&](Mask m) {
      Mask out = 0;
      for (Mask t = m; t != 0; t &= t - 1)
        out |= Mask{1} << (inst.relabel[static_cast<std::size_t>(
                               std::countr_zero(t))] -
                           1);
      return out;
    };
    // Same universe as a set; the lex positions (hence branch order) move.
    for (Mask& m : universe) m = apply(m);
    star = make_star(inst.n, inst.k, inst.relabel[0]).masks();
  }

  BranchAndBound bb(inst.d, inst.s, inst.budget);
  bool decision = inst.mode == SolveMode::verify_star;
  std::vector<Mask> best =
      bb.maximize(universe, std::move(star), star_size, decision);

  res.value = best.size();
  res.witness = SetFamily::from_masks(inst.n, inst.k, best);
  res.stats.nodes = bb.nodes();
  res.exact = !bb.aborted();
  if (decision && res.value > star_size) res.exact = false;  // lower bound only
  res.star_is_max = res.exact && res.value == star_size;

  if (inst.check_uniqueness && res.exact) {
    if (binomial(inst.n, inst.k) > 40) {
      UniquenessReport rep;
      rep.checked = false;
      res.uniqueness = rep;
    } else if (res.value > star_size) {
      UniquenessReport rep;
      rep.checked = true;
      rep.all_maxima_are_stars = false;
      rep.counterexample = res.witness;
      res.uniqueness = rep;
    } else {
      res.uniqueness = enumerate_and_check_maxima(
          inst.d, inst.k, inst.s, inst.n, res.value, inst.symmetry_break,
          inst.budget, &res.stats.nodes);
    }
  }

  res.stats.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return res;
}

SolveResult verify_star_extremal(int d, int k, int s, int n,
                                 bool check_uniqueness,
                                 const SolveBudget& budget) {
  SolveInstance inst;
  inst.d = d;
  inst.k = k;
  inst.s = s;
  inst.n = n;
  inst.mode = SolveMode::verify_star;
  inst.budget = budget;
  inst.check_uniqueness = check_uniqueness;
  return solve(inst);
}

SetFamily greedy_lower_bound(int d, int k, int s, int n, std::uint64_t seed,
                             int restarts) {
  validate_instance(d, k, s, n);
  if (restarts < 1)
    throw std::invalid_argument("greedy: restarts must be >= 1");

  std::vector<Mask> universe = lex_universe(n, k);
  std::vector<Mask> best;
  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<Mask> order = universe;
    rng.shuffle(order);
    std::vector<Mask> chosen;
    for (Mask m : order)
      if (can_add(chosen, m, d, s)) chosen.push_back(m);
    if (chosen.size() > best.size()) best = std::move(chosen);
  }
  return SetFamily::from_masks(n, k, std::move(best));
}

ScanTable f_monotonicity_scan(int d, int k, int n, int s_from, int s_to) {
  if (s_from > s_to)
    throw std::invalid_argument("scan: empty s range");
  ScanTable table;
  table.d = d;
  table.k = k;
  table.n = n;

  for (int s = s_from; s <= s_to; ++s) {
    SolveInstance inst;
    inst.d = d;
    inst.k = k;
    inst.s = s;
    inst.n = n;
    SolveResult r = solve(inst);
    table.rows.push_back(ScanRow{s, r.value, r.star_is_max});
  }

  table.non_increasing = true;
  for (std::size_t i = 1; i < table.rows.size(); ++i)
    if (table.rows[i].value > table.rows[i - 1].value)
      table.non_increasing = false;
  if (!table.non_increasing)
    throw std::logic_error("scan: f increased in s (solver defect)");

  std::uint64_t full = binomial(n, k);
  int exist_threshold = ((d + 1) * k + d - 1) / d;  // ceil((d+1)k/d)
  std::uint64_t wise_max = 0;
  bool wise_computed = false;
  for (const ScanRow& row : table.rows) {
    if (row.s < exist_threshold && row.value != full)
      throw std::logic_error("scan: f below C(n,k) without any cluster");
    if (row.s >= std::min((d + 1) * k, n)) {
      if (!wise_computed) {
        SolveInstance inst;
        inst.d = d;
        inst.k = k;
        inst.s = n;  // union bound vacuous: pure (d+1)-wise intersection
        inst.n = n;
        wise_max = solve(inst).value;
        wise_computed = true;
      }
      if (row.value != wise_max)
        throw std::logic_error(
            "scan: f differs from the (d+1)-wise-intersecting maximum");
    }
  }
  return table;
}

}  // namespace clusterkit
