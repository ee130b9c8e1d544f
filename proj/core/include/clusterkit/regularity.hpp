#pragma once

#include "clusterkit/cluster.hpp"
#include "clusterkit/family.hpp"
#include "clusterkit/junta.hpp"
#include "clusterkit/rational.hpp"

#include <optional>
#include <vector>

namespace clusterkit {

struct RegularityWitness {
  KSubset j_set;
  KSubset b_set;
  Rational deviation;  // |mu(F_J^B) - mu(F)|, the maximum over checked pairs
};

struct RegularityReport {
  int r = 0;
  Rational epsilon;
  bool regular = false;
  std::optional<RegularityWitness> worst;  // absent when every deviation is 0
};

// (r,eps)-regularity: |mu(F_J^B) - mu(F)| <= eps for every J with |J| <= r
// and B <= J. Pairs whose restricted universe is empty (|B| > k or
// k-|B| > n-|J|) are vacuous and skipped. Exhaustive; J scanned by size then
// lex, B from J downward, first maximum kept.
RegularityReport regularity_check(const SetFamily& f, int r,
                                  const Rational& epsilon);

struct DecompositionPart {
  KSubset b_set;
  Rational part_measure;  // mu(F_J^B)
  bool regular = false;   // at (min(ceil(1/delta), n-|J|), delta)
  int r_used = 0;
};

struct DecompositionResult {
  KSubset j_set;
  std::vector<Mask> generators;  // the canonical G of all passing B
  Rational remainder;            // essential containment of F in <G>
  std::vector<DecompositionPart> parts;
};

// Scans candidate J by size then lex up to j_max; G is always the maximal
// family of B passing both part conditions (regularity at the capped radius
// and mu > eps/2); accepts the first J whose junta catches F up to eps.
std::optional<DecompositionResult> find_regular_decomposition(
    const SetFamily& f, const Rational& delta, const Rational& epsilon,
    int j_max);

struct JuntaClusterVerdict {
  bool cluster_free = false;
  bool dplus1_wise = false;
  bool equivalent = false;        // cluster_free == dplus1_wise
  bool hypotheses_hold = false;   // s >= (d+1)k/d + |J| and n >= s
  std::optional<ClusterWitness> cluster;
  std::optional<std::vector<KSubset>> violating_tuple;
};

// Realizes <G> at level k and tests cluster-freeness against (d+1)-wise
// intersection. The two agree whenever the hypotheses hold; outside that
// range both predicates are still reported.
JuntaClusterVerdict junta_cluster_equivalence(const Junta& junta, int d, int s);

struct StabilityReport {
  int best_center = 0;        // smallest center minimizing the outside mass
  Rational outside_measure;   // |F \ S| / C(n,k)
  Rational inside_deficit;    // |F n S| = C(n-1,k-1)(1 - deficit)
};

StabilityReport stability_report(const SetFamily& f);

}  // namespace clusterkit
