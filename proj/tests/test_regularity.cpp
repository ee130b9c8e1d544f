#include "clusterkit/binomial.hpp"
#include "clusterkit/construct.hpp"
#include "clusterkit/regularity.hpp"
#include "clusterkit/rng.hpp"
#include "clusterkit/shadow.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace clusterkit;

TEST_CASE("regularity of the full family") {
  RegularityReport rep = regularity_check(SetFamily::full(6, 3), 3, Rational(0));
  CHECK(rep.regular);
  CHECK_FALSE(rep.worst.has_value());
}

TEST_CASE("the star is far from regular") {
  RegularityReport rep =
      regularity_check(make_star(6, 3, 1), 1, Rational(1, 4));
  CHECK_FALSE(rep.regular);
  REQUIRE(rep.worst.has_value());
  CHECK(rep.worst->j_set == KSubset({1}, 6));
  CHECK(rep.worst->b_set == KSubset({1}, 6));
  CHECK(rep.worst->deviation == Rational(1, 2));
}

TEST_CASE("deviations match direct conditional enumeration") {
  SetFamily f = make_odd_bipartite(8, 4);
  Rational mu = measure(f);

  // Single coordinates split the parity count evenly: exactly regular there.
  RegularityReport r1 = regularity_check(f, 1, Rational(0));
  CHECK(r1.regular);
  CHECK_FALSE(r1.worst.has_value());

  // Pairs across the split are not; reproduce the worst deviation by oracle.
  Rational worst = 0;
  for (int jsize = 1; jsize <= 2; ++jsize) {
    for_each_ksubset(8, jsize, [&](Mask j) {
      Mask b = j;
      while (true) {
        auto cond = oracles::conditional_measure(f, j, b);
        if (cond) {
          Rational dev = *cond > mu ? *cond - mu : mu - *cond;
          if (dev > worst) worst = dev;
        }
        if (b == 0) break;
        b = (b - 1) & j;
      }
    });
  }
  RegularityReport r2 = regularity_check(f, 2, Rational(1, 100));
  REQUIRE(r2.worst.has_value());
  CHECK(r2.worst->deviation == worst);
  // The extremal pair is B = J inside one side: 8/15 against mu = 16/35.
  CHECK(worst == Rational(8, 105));
  CHECK_FALSE(r2.regular);
}

TEST_CASE("the reported deviation is tight") {
  Rng seeds(31);
  for (int trial = 0; trial < 10; ++trial) {
    SetFamily f = make_random_family(7, 3, 12 + seeds.below(10), seeds.next());
    RegularityReport probe = regularity_check(f, 2, Rational(0));
    if (!probe.worst) continue;
    Rational dev = probe.worst->deviation;
    CHECK(regularity_check(f, 2, dev).regular);
    CHECK_FALSE(regularity_check(f, 2, dev * Rational(999, 1000)).regular);
  }
}

TEST_CASE("decomposition of a star picks its center") {
  SetFamily star = make_star(6, 3, 1);
  auto res = find_regular_decomposition(star, Rational(1, 4), Rational(1, 10), 3);
  REQUIRE(res.has_value());
  CHECK(res->j_set == KSubset({1}, 6));
  CHECK(res->generators == std::vector<Mask>{Mask{1}});
  CHECK(res->remainder == 0);
  REQUIRE(res->parts.size() == 1);
  CHECK(res->parts[0].part_measure == 1);
  CHECK(res->parts[0].regular);
}

TEST_CASE("a regular family decomposes at the empty junta") {
  SetFamily full = SetFamily::full(6, 3);
  auto res = find_regular_decomposition(full, Rational(1, 4), Rational(1, 10), 2);
  REQUIRE(res.has_value());
  CHECK(res->j_set == KSubset::empty(6));
  CHECK(res->generators == std::vector<Mask>{Mask{0}});
  CHECK(res->remainder == 0);
}

TEST_CASE("a tiny family decomposes into the empty junta") {
  SetFamily f = SetFamily::from_masks(6, 3, {KSubset({1, 2, 3}, 6).mask()});
  auto res = find_regular_decomposition(f, Rational(1, 4), Rational(1, 2), 2);
  REQUIRE(res.has_value());
  CHECK(res->j_set == KSubset::empty(6));
  CHECK(res->generators.empty());
  CHECK(res->remainder == measure(f));
}

TEST_CASE("decomposition output re-validates") {
  Rng seeds(32);
  Rational delta(1, 3), eps(1, 4);
  for (int trial = 0; trial < 6; ++trial) {
    SetFamily f = make_random_family(7, 3, 14 + seeds.below(14), seeds.next());
    auto res = find_regular_decomposition(f, delta, eps, 2);
    if (!res) continue;
    Junta junta(f.n(), f.k(), res->j_set, res->generators);
    CHECK(essential_containment(f, junta.generate()) == res->remainder);
    CHECK(res->remainder <= eps);
    int r_target =
        static_cast<int>(ceil_rational(Rational(1) / delta));
    for (const auto& part : res->parts) {
      SetFamily rf = restriction(f, res->j_set, part.b_set);
      int r_used = std::min(r_target, f.n() - res->j_set.size());
      CHECK(part.r_used == r_used);
      CHECK(measure(rf) == part.part_measure);
      CHECK(measure(rf) > eps / 2);
      CHECK(regularity_check(rf, r_used, delta).regular);
    }
  }
}

TEST_CASE("junta cluster equivalence spec instances") {
  SUBCASE("star junta") {
    Junta star(9, 3, KSubset({1}, 9), {Mask{1}});
    JuntaClusterVerdict v = junta_cluster_equivalence(star, 2, 6);
    CHECK(v.hypotheses_hold);  // 6 >= 4.5 + 1 and 9 >= 6
    CHECK(v.cluster_free);
    CHECK(v.dplus1_wise);
    CHECK(v.equivalent);
  }
  SUBCASE("two disjoint dictators contain a cluster") {
    Junta j(12, 3, KSubset({1, 2}, 12),
            {KSubset({1}, 12).mask(), KSubset({2}, 12).mask()});
    JuntaClusterVerdict v = junta_cluster_equivalence(j, 2, 7);
    CHECK(v.hypotheses_hold);  // 7 >= 4.5 + 2 and 12 >= 7
    CHECK_FALSE(v.dplus1_wise);
    CHECK_FALSE(v.cluster_free);
    CHECK(v.equivalent);
    REQUIRE(v.cluster.has_value());
    CHECK(check_cluster(v.cluster->sets, 2, 7).ok());
  }
  SUBCASE("full junta") {
    KSubset js({1, 2}, 9);
    Junta j(9, 3, js, {0, 1, 2, 3});
    JuntaClusterVerdict v = junta_cluster_equivalence(j, 2, 7);
    CHECK_FALSE(v.dplus1_wise);
    CHECK_FALSE(v.cluster_free);
    CHECK(v.equivalent);
  }
}

TEST_CASE("junta equivalence holds across all small juntas (reduced grid)") {
  // |J| <= 1 at n = 9, k = 3, d = 2, s = ceil((d+1)k/d) + |J| = 5 + |J|.
  // The acceptance suite runs the full |J| <= 2 grid at n = 12.
  for (int jsize = 0; jsize <= 1; ++jsize) {
    std::vector<Mask> j_masks;
    for_each_ksubset(9, jsize, [&](Mask m) { j_masks.push_back(m); });
    for (Mask jm : j_masks) {
      KSubset js = KSubset::of_mask(jm, 9);
      // All generator families G over P(J).
      std::vector<Mask> subsets;
      Mask b = jm;
      while (true) {
        subsets.push_back(b);
        if (b == 0) break;
        b = (b - 1) & jm;
      }
      for (std::uint64_t pick = 0; pick < (1ull << subsets.size()); ++pick) {
        std::vector<Mask> gens;
        for (std::size_t i = 0; i < subsets.size(); ++i)
          if (pick >> i & 1) gens.push_back(subsets[i]);
        Junta junta(9, 3, js, gens);
        JuntaClusterVerdict v = junta_cluster_equivalence(junta, 2, 5 + jsize);
        CHECK(v.hypotheses_hold);
        CHECK(v.equivalent);
      }
    }
  }
}

TEST_CASE("stability reports") {
  SUBCASE("exact star") {
    StabilityReport rep = stability_report(make_star(6, 3, 4));
    CHECK(rep.best_center == 4);
    CHECK(rep.outside_measure == 0);
    CHECK(rep.inside_deficit == 0);
  }
  SUBCASE("star minus one set") {
    SetFamily star = make_star(6, 3, 1);
    std::vector<Mask> masks(star.masks().begin() + 1, star.masks().end());
    StabilityReport rep = stability_report(SetFamily::from_masks(6, 3, masks));
    CHECK(rep.best_center == 1);
    CHECK(rep.outside_measure == 0);
    CHECK(rep.inside_deficit == Rational(1, binomial(5, 2)));
  }
  SUBCASE("transversal family: every center equally bad, smallest reported") {
    StabilityReport rep = stability_report(make_frankl_furedi(4, 2));
    CHECK(rep.best_center == 1);
    CHECK(rep.outside_measure == Rational(2, 6));
    CHECK(rep.inside_deficit == Rational(1, 3));
  }
  SUBCASE("outside mass vanishes exactly on subfamilies of stars") {
    Rng seeds(33);
    for (int trial = 0; trial < 20; ++trial) {
      SetFamily f = make_random_family(7, 3, 5 + seeds.below(20), seeds.next());
      StabilityReport rep = stability_report(f);
      Mask common = ~Mask{0};
      for (Mask m : f.masks()) common &= m;
      CHECK((rep.outside_measure == 0) == (common != 0));
    }
  }
}

TEST_CASE("monotone restriction never loses p-biased mass against the empty trace") {
  // For monotone F^up and B <= J: mu_p((F^up)_J^B) >= mu_p((F^up)_J^empty).
  Rng seeds(34);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 6 + static_cast<int>(seeds.below(4));  // 6..9
    int k = 1 + static_cast<int>(seeds.below(3));
    SetFamily f = make_random_family(
        n, k, seeds.below(binomial(n, k) / 2 + 1), seeds.next());
    Mask j = full_mask(2 + static_cast<int>(seeds.below(2)));  // J = [2] or [3]
    Rational p(1 + seeds.below(9), 10);
    Rational base = oracles::biased_measure_of_restricted_closure(f, j, 0, p);
    Mask b = j;
    while (true) {
      CHECK(oracles::biased_measure_of_restricted_closure(f, j, b, p) >= base);
      if (b == 0) break;
      b = (b - 1) & j;
    }
  }
}
