#pragma once

#include "clusterkit/family.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace clusterkit {

enum class SolveMode { exact, verify_star, greedy };

struct SolveBudget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double max_wall_ms = 0;       // 0 = unlimited
};

// One f(d,k,s,n) computation. Exact search is meant for C(n,k) up to desk
// scale (~80 members).
struct SolveInstance {
  int d = 2;
  int k = 2;
  int s = 4;
  int n = 4;
  SolveMode mode = SolveMode::exact;
  SolveBudget budget;
  std::uint64_t seed = 0;  // greedy shuffles
  int restarts = 8;        // greedy restarts
  bool check_uniqueness = false;
  bool symmetry_break = true;  // canonical first set during uniqueness runs
  // Optional relabeling of [1,n] applied before the search. The value is
  // invariant under any permutation (only the branching order moves); used to
  // validate schedule independence.
  std::vector<int> relabel;
};

struct UniquenessReport {
  bool checked = false;
  bool all_maxima_are_stars = false;
  // Families enumerated; under symmetry breaking these are the canonical
  // representatives (every relabeling orbit contributes at least one).
  std::uint64_t maxima_checked = 0;
  std::optional<SetFamily> counterexample;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  double wall_ms = 0;
};

struct SolveResult {
  int d = 0, k = 0, s = 0, n = 0;
  std::uint64_t value = 0;  // f(d,k,s,n), or a lower bound when !exact
  SetFamily witness;        // cluster-free family of size `value`
  bool exact = false;
  bool star_is_max = false;  // value == C(n-1,k-1); meaningful when exact
  std::optional<UniquenessReport> uniqueness;
  SolveStats stats;
};

// Branch and bound over the lex-ordered k-subsets, include/exclude branching,
// incumbent initialized to the star, bound |chosen| + |remaining candidates|.
SolveResult solve(const SolveInstance& inst);

// Decision form: does any cluster-free family beat the star? When it cannot,
// optionally enumerates every maximum family and checks each is a star.
SolveResult verify_star_extremal(int d, int k, int s, int n,
                                 bool check_uniqueness = false,
                                 const SolveBudget& budget = {});

// Randomized greedy incumbent: shuffle C([n],k), insert whatever stays
// cluster-free, best of `restarts` runs. Always returns a cluster-free family.
SetFamily greedy_lower_bound(int d, int k, int s, int n, std::uint64_t seed,
                             int restarts);

struct ScanRow {
  int s = 0;
  std::uint64_t value = 0;
  bool star_is_max = false;
};

struct ScanTable {
  int d = 0, k = 0, n = 0;
  std::vector<ScanRow> rows;
  bool non_increasing = false;
};

// Exact f for each s in [s_from, s_to]. Verifies the table is non-increasing,
// that f = C(n,k) below the existence threshold ceil((d+1)k/d), and that rows
// with s >= min((d+1)k, n) match the (d+1)-wise-intersecting maximum; a
// violation would be a solver defect and throws logic_error.
ScanTable f_monotonicity_scan(int d, int k, int n, int s_from, int s_to);

}  // namespace clusterkit
