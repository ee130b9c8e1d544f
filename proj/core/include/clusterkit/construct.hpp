#pragma once

#include "clusterkit/family.hpp"

#include <cstdint>

namespace clusterkit {

// All k-sets containing `center`.
SetFamily make_star(int n, int k, int center);

// Example family of Frankl and Furedi: partition [n] into the k consecutive
// blocks X_i = {(i-1)n/k+1, ..., i n/k} and take every set meeting each block
// in exactly one element. Size (n/k)^k; requires k | n.
SetFamily make_frankl_furedi(int n, int k);

// All k-sets whose intersection with {1, ..., n/2} has odd size; requires n
// even.
SetFamily make_odd_bipartite(int n, int k);

// L(i,k,n): the i lexicographically first k-subsets of [1,n].
SetFamily make_lex_family(std::uint64_t i, int k, int n);

// m distinct k-sets, uniform without replacement, reproducible from seed.
SetFamily make_random_family(int n, int k, std::uint64_t m, std::uint64_t seed);

}  // namespace clusterkit
