#pragma once

#include "clusterkit/family.hpp"
#include "clusterkit/kset.hpp"
#include "clusterkit/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace clusterkit {

// d+1 distinct k-sets with empty common intersection and union of size at
// most s.
struct ClusterWitness {
  std::vector<KSubset> sets;
  int union_size = 0;
  int d = 0;
  int s = 0;
};

enum class ClusterFailure { union_too_large, intersection_nonempty, duplicates };

struct ClusterCheck {
  std::optional<ClusterWitness> witness;
  std::optional<ClusterFailure> failure;
  bool ok() const { return witness.has_value(); }
};

// Decides whether `sets` (exactly d+1 of them, equal sizes) form a
// (d,k,s)-cluster. Wrong count or mixed sizes are parameter errors.
ClusterCheck check_cluster(const std::vector<KSubset>& sets, int d, int s);

struct SimplexReport {
  bool is_simplex = false;
  // Present when not a simplex for a non-intersection reason: indices of a
  // d-subset whose intersection is empty.
  std::optional<std::vector<int>> missing_d_subset;
  bool is_simplex_cluster = false;  // simplex and union <= 2k
  int union_size = 0;
};

// d+1 distinct equal-size sets; d = sets.size()-1.
SimplexReport simplex_check(const std::vector<KSubset>& sets);

enum class ClusterSearchMode {
  exhaustive,            // any (d,k,s)-cluster
  simplex_only,          // any d-simplex (s is ignored)
  simplex_cluster_only,  // d-simplex with union <= 2k
};

// First witness in lex order of member index tuples, or nothing. The family
// is lex-sorted, so this is deterministic.
std::optional<ClusterWitness> find_cluster(
    const SetFamily& f, int d, int s,
    ClusterSearchMode mode = ClusterSearchMode::exhaustive);

// Full enumeration for the small exhaustive checks; returns the count and
// feeds each witness to fn if provided.
std::uint64_t for_each_cluster(
    const SetFamily& f, int d, int s, ClusterSearchMode mode,
    const std::function<void(const ClusterWitness&)>& fn = nullptr);

// Cross version: A_i is drawn from families[i] (all sharing (n,k)); d =
// families.size()-1. With require_distinct the A_i must be pairwise distinct
// as sets.
std::optional<ClusterWitness> find_cross_cluster(
    const std::vector<SetFamily>& families, int s, bool require_distinct = true);

struct UnionBoundReport {
  int level = 0;
  Rational sum_of_deficits;  // sum_i (1 - mu(F_i^{up l}))
  bool guaranteed = false;   // sum < 1
};

// The union-bound criterion over the level-l shadows: when the deficits sum
// below 1, a cross cluster at level l with s = ceil((d+1) l / d) must exist
// among the shadows.
UnionBoundReport union_bound_criterion(const std::vector<SetFamily>& families,
                                       int l);

// k - (d-1)(s-k): lower bound on the intersection of any d sets of a
// (d,k,s)-cluster.
int intersection_lower_bound(int d, int k, int s);

// True iff the bound forces nonempty d-wise intersections, i.e. s < dk/(d-1)
// (d >= 2; for d = 1 the threshold is undefined and the answer is false).
bool tight_implies_simplex(int d, int k, int s);

// Uniform (d, l, ceil((d+1)l/d))-cluster inside a uniformly random subset S
// of `ground` of that size: rejection sampling over distinct-set tuples with
// empty intersection. Deterministic given seed.
ClusterWitness sample_random_cluster(int d, int l, const KSubset& ground,
                                     std::uint64_t seed);

struct SWiseReport {
  int s = 0;
  bool intersecting = false;
  // Lex-least violating tuple (distinct support; repetition never helps).
  std::optional<std::vector<KSubset>> violating;
};

// No s members with empty common intersection.
SWiseReport s_wise_intersecting(const SetFamily& f, int s);

}  // namespace clusterkit
