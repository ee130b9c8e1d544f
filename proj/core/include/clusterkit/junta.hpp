#pragma once

#include "clusterkit/family.hpp"
#include "clusterkit/kset.hpp"

#include <vector>

namespace clusterkit {

// The junta generated by G over J: at level k it realizes all A in C([n],k)
// with A & J in G. Generators with |B| > k can never appear as a trace of a
// k-set and are rejected at construction.
class Junta {
 public:
  Junta(int n, int k, const KSubset& j_set, std::vector<Mask> generators);

  int n() const { return n_; }
  int k() const { return k_; }
  const KSubset& j_set() const { return j_; }
  const std::vector<Mask>& generators() const { return generators_; }

  // <G> at level k.
  SetFamily generate() const;

 private:
  int n_;
  int k_;
  KSubset j_;
  std::vector<Mask> generators_;  // lex-sorted, unique
};

}  // namespace clusterkit
