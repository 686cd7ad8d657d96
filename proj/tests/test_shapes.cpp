#include <catch2/catch_amalgamated.hpp>

#include "qcomb/partition.hpp"

using namespace qcomb;

namespace {

// Independent oracle for horizontal strips: all partitions of the target
// size whose diagram fits inside mu with the interleaving inequalities
// checked directly.
std::vector<Partition> strips_bruteforce(const Partition& mu, int k) {
  std::vector<Partition> out;
  for (const auto& rho : partitions_of(mu.size() - k)) {
    bool ok = mu.contains(rho);
    for (int i = 1; ok && i <= mu.length(); ++i)
      if (rho.part(i) < mu.part(i + 1)) ok = false;
    if (ok) out.push_back(rho);
  }
  return out;
}

}  // namespace

TEST_CASE("partition normalization and accessors") {
  CHECK(Partition({3, 1, 1, 0, 0}) == Partition({3, 1, 1}));
  CHECK(Partition{}.size() == 0);
  CHECK(Partition({5, 3, 1}).size() == 9);
  CHECK(Partition({5, 3, 1}).length() == 3);
  CHECK(Partition({5, 3, 1}).part(2) == 3);
  CHECK(Partition({5, 3, 1}).part(7) == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition({5, 3, 1}).conjugate() == Partition({3, 2, 2, 1, 1}));
  for (int n = 0; n <= 10; ++n)
    for (const auto& mu : partitions_of(n))
      CHECK(mu.conjugate().conjugate() == mu);
}

TEST_CASE("partition counts") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n)
    CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
}

TEST_CASE("dominance order") {
  CHECK(dominates(Partition({2}), Partition({1, 1})));
  CHECK_FALSE(dominates(Partition({1, 1}), Partition({2})));
  CHECK_THROWS_AS(dominates(Partition({2}), Partition({1})),
                  std::invalid_argument);

  for (int n = 1; n <= 8; ++n) {
    auto parts = partitions_of(n);
    for (const auto& a : parts) {
      CHECK(dominates(a, a));
      for (const auto& b : parts) {
        if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
        for (const auto& c : parts)
          if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
      }
    }
  }
}

TEST_CASE("sort_composition") {
  CHECK(sort_composition(Composition({2, 3, 1})) == Partition({3, 2, 1}));
  CHECK(sort_composition(Composition({0, 2, 0, 2})) == Partition({2, 2}));
  CHECK(sort_composition(Composition{}) == Partition{});
}

TEST_CASE("horizontal strips, frozen examples") {
  for (int m = 1; m <= 5; ++m) {
    auto s = horizontal_strips(Partition({m}), m);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == Partition{});
  }
  auto s22 = horizontal_strips(Partition({2, 2}), 2);
  REQUIRE(s22.size() == 1);
  CHECK(s22[0] == Partition({2}));

  auto s31 = horizontal_strips(Partition({3, 1}), 2);
  REQUIRE(s31.size() == 2);
  CHECK(std::count(s31.begin(), s31.end(), Partition({2})) == 1);
  CHECK(std::count(s31.begin(), s31.end(), Partition({1, 1})) == 1);
}

TEST_CASE("horizontal strips vs brute force") {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (int k = 0; k <= n; ++k) {
        auto fast = horizontal_strips(mu, k);
        auto slow = strips_bruteforce(mu, k);
        std::sort(fast.begin(), fast.end());
        std::sort(slow.begin(), slow.end());
        CHECK(fast == slow);
        for (const auto& rho : fast) CHECK(is_horizontal_strip(mu, rho));
      }
    }
  }
}

TEST_CASE("word statistics, frozen examples") {
  CHECK(inv(Word{2, 1, 1}) == 2);
  CHECK(inv(Word{1, 1, 2}) == 0);
  CHECK(ninv(Word{1, 1, 1}) == 0);
  CHECK(ninv(Word{1, 2, 3}) == 3);
  CHECK(maj(Word{2, 1}) == 1);
  CHECK(maj(Word{1, 2, 1, 2}) == 2);
}

TEST_CASE("segmented statistics") {
  CHECK(segmented_stat(Stat::inv, Composition({3, 0, 2, 1, 1}),
                       Word{1, 2, 1, 2, 1, 2, 3}) == 2);
  CHECK(segmented_stat(Stat::inv, Composition({3, 3, 3}),
                       Word{1, 1, 1, 2, 1, 2, 2, 3, 1}) == 3);
  Word w{3, 1, 2, 1};
  CHECK(segmented_stat(Stat::inv, Composition({4}), w) == inv(w));
  CHECK(segmented_stat(Stat::maj, Composition({4}), w) == maj(w));
  CHECK_THROWS_AS(segmented_stat(Stat::inv, Composition({2}), w),
                  std::invalid_argument);
}

TEST_CASE("multiset permutations") {
  CHECK(multiset_permutations(Composition({2})) ==
        std::vector<Word>{{1, 1}});
  CHECK(multiset_permutations(Composition({1, 1})) ==
        std::vector<Word>{{1, 2}, {2, 1}});
  // zero parts contribute no letters
  CHECK(multiset_permutations(Composition({1, 0, 2})).size() == 3);
  CHECK(multiset_permutations(Composition{}).size() == 1);
}

TEST_CASE("multiset permutation counts match multinomials") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& beta : compositions_of(n)) {
      BigInt count = factorial(n);
      for (int p : beta.parts()) count /= factorial(p);
      CHECK(BigInt(multiset_permutations(beta).size()) == count);
    }
  }
}

TEST_CASE("inv, ninv and maj are Mahonian") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& beta : compositions_of(n)) {
      QPoly expected = q_multinomial(n, beta.parts());
      for (Stat s : {Stat::inv, Stat::ninv, Stat::maj}) {
        QPoly sum;
        for (const auto& w : multiset_permutations(beta))
          sum += QPoly::monomial(1, static_cast<std::size_t>(word_stat(s, w)));
        CHECK(sum == expected);
      }
    }
  }
}

TEST_CASE("block index") {
  Composition alpha({3, 3, 3});
  CHECK(block_index(alpha, 1) == 1);
  CHECK(block_index(alpha, 4) == 2);
  CHECK(block_index(alpha, 9) == 3);
  CHECK_THROWS_AS(block_index(alpha, 0), std::invalid_argument);
  CHECK_THROWS_AS(block_index(alpha, 10), std::invalid_argument);
  // zero parts are skipped over
  CHECK(block_index(Composition({2, 0, 1}), 3) == 3);
}
