#include "clusterkit/binomial.hpp"
#include "clusterkit/construct.hpp"
#include "clusterkit/family.hpp"
#include "clusterkit/junta.hpp"
#include "clusterkit/kset.hpp"
#include "clusterkit/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace clusterkit;

TEST_CASE("binomial basics") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534ull);
  CHECK_THROWS_AS(binomial(65, 1), std::invalid_argument);
}

TEST_CASE("lex_compare on the spec pairs") {
  CHECK(lex_compare(KSubset({1, 2}, 4), KSubset({1, 3}, 4)) == LexOrder::less);
  CHECK(lex_compare(KSubset({1, 3}, 4), KSubset({2, 3}, 4)) == LexOrder::less);
  CHECK(lex_compare(KSubset({2, 4}, 4), KSubset({2, 4}, 4)) == LexOrder::equal);
  CHECK(lex_compare(KSubset({2, 3}, 4), KSubset({1, 4}, 4)) ==
        LexOrder::greater);
  CHECK_THROWS_AS(lex_compare(KSubset({1, 2}, 4), KSubset({1, 2}, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(lex_compare(KSubset({1, 2}, 4), KSubset({1, 2, 3}, 4)),
                  std::invalid_argument);
}

TEST_CASE("lex order matches the definition oracle exhaustively") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto expected = oracles::lex_sorted_ksubsets(n, k);
      // Full family is stored in lex order.
      SetFamily full = SetFamily::full(n, k);
      REQUIRE(full.size() == expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(full.member(i).elements() == expected[i]);
        // Rank/unrank agree with the sorted position.
        CHECK(lex_rank(full.member(i)) == i);
        CHECK(lex_unrank(i, k, n) == full.member(i));
      }
    }
  }
}

TEST_CASE("lex_family prefixes for every rank, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto sorted = oracles::lex_sorted_ksubsets(n, k);
      for (std::uint64_t i = 0; i <= binomial(n, k); ++i) {
        SetFamily lf = make_lex_family(i, k, n);
        REQUIRE(lf.size() == i);
        for (std::size_t j = 0; j < i; ++j)
          CHECK(lf.member(j).elements() == sorted[j]);
      }
    }
  }
}

TEST_CASE("lex_family spec examples") {
  SetFamily f = make_lex_family(3, 2, 4);
  CHECK(f.members() == std::vector<KSubset>{KSubset({1, 2}, 4),
                                            KSubset({1, 3}, 4),
                                            KSubset({1, 4}, 4)});
  CHECK(make_lex_family(0, 2, 4).empty());
  CHECK_THROWS_AS(make_lex_family(binomial(6, 2) + 1, 2, 6),
                  std::invalid_argument);
  for (int n = 3; n <= 8; ++n)
    for (int k = 2; k < n; ++k)
      CHECK(make_lex_family(binomial(n - 1, k - 1), k, n) ==
            make_star(n, k, 1));
}

TEST_CASE("lex identity for the two-parameter prefix, n <= 8") {
  // L(C(n-1,k-1) - C(n-m,k-1), k, n) = {A : 1 in A, A cap [2..m] nonempty}
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int m = 2; m <= n - k + 1; ++m) {
        std::uint64_t i = binomial(n - 1, k - 1) - binomial(n - m, k - 1);
        SetFamily lf = make_lex_family(i, k, n);
        Mask window = full_mask(m) & ~Mask{1};  // [2..m]
        std::vector<Mask> expect;
        for_each_ksubset(n, k, [&](Mask mask) {
          if ((mask & 1) && (mask & window)) expect.push_back(mask);
        });
        CHECK(lf == SetFamily::from_masks(n, k, expect));
      }
    }
  }
}

TEST_CASE("measure") {
  CHECK(measure(make_star(6, 3, 1)) == Rational(1, 2));
  CHECK(measure(SetFamily(6, 3)) == 0);
  CHECK(measure(SetFamily::full(6, 3)) == 1);
}

TEST_CASE("restriction spec examples") {
  SetFamily star = make_star(4, 2, 1);
  KSubset j1({1}, 4);
  SUBCASE("star restricted onto its center is full") {
    SetFamily r = restriction(star, j1, KSubset({1}, 4));
    CHECK(r == SetFamily::full(3, 1));
    CHECK(measure(r) == 1);
  }
  SUBCASE("star restricted away from its center is empty") {
    SetFamily r = restriction(star, j1, KSubset::empty(4));
    CHECK(r.empty());
    CHECK(r.n() == 3);
    CHECK(r.k() == 2);
  }
  SUBCASE("full family restricts to full") {
    SetFamily r = restriction(SetFamily::full(4, 2), KSubset({1, 2}, 4),
                              KSubset({2}, 4));
    CHECK(r == SetFamily::full(2, 1));
  }
  CHECK_THROWS_AS(restriction(star, j1, KSubset({2}, 4)),
                  std::invalid_argument);
}

TEST_CASE("restriction measure equals conditional probability, all J up to size 3") {
  SetFamily f = make_random_family(6, 3, 9, 42);
  for (int jsize = 0; jsize <= 3; ++jsize) {
    for_each_ksubset(6, jsize, [&](Mask j) {
      Mask b = j;
      while (true) {
        if (set_size(b) <= 3) {
          auto oracle = oracles::conditional_measure(f, j, b);
          if (oracle) {
            SetFamily r =
                restriction(f, KSubset::of_mask(j, 6), KSubset::of_mask(b, 6));
            CHECK(measure(r) == *oracle);
          }
        }
        if (b == 0) break;
        b = (b - 1) & j;
      }
    });
  }
}

TEST_CASE("restriction measure equals conditional probability, random trials") {
  Rng seeds(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(seeds.below(5));  // 4..8
    int k = 1 + static_cast<int>(seeds.below(static_cast<std::uint64_t>(n - 1)));
    std::uint64_t m = seeds.below(binomial(n, k) + 1);
    SetFamily f = make_random_family(n, k, m, seeds.next());
    for (int jsize = 0; jsize <= 3 && jsize <= n; ++jsize) {
      Mask j = full_mask(jsize);  // representative J; trials vary n and F
      Mask b = j;
      while (true) {
        if (set_size(b) <= k) {
          auto oracle = oracles::conditional_measure(f, j, b);
          if (oracle) {
            SetFamily r = restriction(f, KSubset::of_mask(j, n),
                                      KSubset::of_mask(b, n));
            CHECK(measure(r) == *oracle);
          }
        }
        if (b == 0) break;
        b = (b - 1) & j;
      }
    }
  }
}

TEST_CASE("junta generation") {
  SUBCASE("single-generator star") {
    Junta j(5, 2, KSubset({1}, 5), {KSubset({1}, 5).mask()});
    CHECK(j.generate() == make_star(5, 2, 1));
  }
  SUBCASE("full power set of J gives the full family") {
    KSubset js({1, 2}, 5);
    std::vector<Mask> gens = {0, 1, 2, 3};  // P({1,2})
    CHECK(Junta(5, 2, js, gens).generate() == SetFamily::full(5, 2));
  }
  SUBCASE("no generators, empty family") {
    CHECK(Junta(5, 2, KSubset({1}, 5), {}).generate().empty());
  }
  SUBCASE("oversized generators are rejected") {
    CHECK_THROWS_AS(Junta(5, 1, KSubset({1, 2}, 5), {Mask{3}}),
                    std::invalid_argument);
  }
}

TEST_CASE("junta then restriction round-trips") {
  KSubset js({2, 4}, 6);
  std::vector<Mask> gens = {KSubset({2}, 6).mask(), KSubset({2, 4}, 6).mask()};
  Junta junta(6, 3, js, gens);
  SetFamily realized = junta.generate();
  Mask b = js.mask();
  while (true) {
    if (set_size(b) <= 3) {
      SetFamily r = restriction(realized, js, KSubset::of_mask(b, 6));
      bool in_g = std::find(gens.begin(), gens.end(), b) != gens.end();
      if (in_g)
        CHECK(r == SetFamily::full(4, 3 - set_size(b)));
      else
        CHECK(r.empty());
    }
    if (b == 0) break;
    b = (b - 1) & js.mask();
  }
}

TEST_CASE("essential containment") {
  SetFamily star = make_star(4, 2, 1);
  CHECK(essential_containment(star, star) == 0);
  CHECK(essential_containment(star, SetFamily(4, 2)) == Rational(1, 2));
  SetFamily f = SetFamily::from_masks(
      4, 2,
      {KSubset({1, 3}, 4).mask(), KSubset({1, 4}, 4).mask(),
       KSubset({2, 3}, 4).mask(), KSubset({2, 4}, 4).mask()});
  CHECK(essential_containment(f, star) == Rational(1, 3));
  CHECK_THROWS_AS(essential_containment(star, SetFamily(5, 2)),
                  std::invalid_argument);
}

TEST_CASE("constructions") {
  SUBCASE("star") {
    SetFamily s = make_star(5, 2, 1);
    CHECK(s.size() == 4);
    for (Mask m : s.masks()) CHECK((m & 1) != 0);
    CHECK_THROWS_AS(make_star(5, 2, 6), std::invalid_argument);
  }
  SUBCASE("frankl-furedi") {
    SetFamily g = make_frankl_furedi(4, 2);
    CHECK(g == SetFamily::from_masks(4, 2,
                                     {KSubset({1, 3}, 4).mask(),
                                      KSubset({1, 4}, 4).mask(),
                                      KSubset({2, 3}, 4).mask(),
                                      KSubset({2, 4}, 4).mask()}));
    CHECK(g.size() == 4);  // (n/k)^k
    CHECK(make_frankl_furedi(6, 3).size() == 8);
    CHECK(make_frankl_furedi(8, 2).size() == 16);
    CHECK_THROWS_AS(make_frankl_furedi(5, 2), std::invalid_argument);
  }
  SUBCASE("odd bipartite") {
    SetFamily f = make_odd_bipartite(6, 3);
    // C(3,1)C(3,2) + C(3,3)C(3,0)
    CHECK(f.size() == 10);
    for (Mask m : f.masks()) CHECK(set_size(m & full_mask(3)) % 2 == 1);
    CHECK(make_odd_bipartite(8, 4).size() == 32);
    CHECK_THROWS_AS(make_odd_bipartite(5, 2), std::invalid_argument);
  }
  SUBCASE("random families") {
    SetFamily a = make_random_family(8, 3, 20, 7);
    SetFamily b = make_random_family(8, 3, 20, 7);
    SetFamily c = make_random_family(8, 3, 20, 8);
    CHECK(a == b);
    CHECK(a.size() == 20);
    CHECK(a != c);  // different seeds differ with high probability
    CHECK_THROWS_AS(make_random_family(4, 2, 7, 1), std::invalid_argument);
  }
}
