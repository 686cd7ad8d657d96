#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "qcomb/profiles.hpp"
#include "qcomb/verify.hpp"

using namespace qcomb;

namespace {

// One-level expansion of the pivot recursion: sigma^C(mu, alpha) =
// q^(segmented inv of the indicator of C) * sum over D of
// eta(C, D) * sigma^D(tail of mu, alpha with the C elements removed).
QPoly pivot_count_one_level(const Partition& mu, const Composition& alpha,
                            const std::vector<int>& c_pivots) {
  int n = alpha.total();
  if (mu.length() <= 1) return profile_count_by_pivot(mu, alpha, c_pivots);
  std::vector<int> hits(static_cast<std::size_t>(alpha.length()), 0);
  for (int c : c_pivots)
    ++hits[static_cast<std::size_t>(block_index(alpha, c) - 1)];
  std::vector<int> reduced = alpha.parts();
  for (std::size_t i = 0; i < reduced.size(); ++i) reduced[i] -= hits[i];
  Composition alpha_rest(reduced);

  std::vector<int> tail_parts(mu.parts().begin() + 1, mu.parts().end());
  Partition mu_tail(tail_parts);

  int e = segmented_stat(Stat::inv, alpha, pivot_indicator_word(c_pivots, n));
  QPoly acc;
  for (const auto& d_pivots : pivot_sets(n - mu.part(1), mu.part(2))) {
    QPoly eta = eta_factor(alpha, c_pivots, d_pivots);
    if (eta.is_zero()) continue;
    acc += eta * profile_count_by_pivot(mu_tail, alpha_rest, d_pivots);
  }
  return acc.shifted(static_cast<std::size_t>(e));
}

}  // namespace

TEST_CASE("rref basics") {
  FfMatrix id = FfMatrix::identity(4, 5);
  auto r = rref(id);
  CHECK(r.mat == id);
  CHECK(r.pivots == std::vector<int>{1, 2, 3, 4});

  FfMatrix zero(3, 4, 3);
  auto rz = rref(zero);
  CHECK(rz.pivots.empty());
  CHECK(rank(zero) == 0);

  // already-echelon matrix with pivots (1,2,4)
  FfMatrix a(3, 6, 7);
  int rows[3][6] = {{1, 0, 3, 0, 0, 1}, {0, 1, 4, 0, 3, 0}, {0, 0, 0, 1, 2, 5}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) a.at(i, j) = rows[i][j];
  auto ra = rref(a);
  CHECK(ra.pivots == std::vector<int>{1, 2, 4});
  CHECK(ra.mat == a);

  // scrambling the rows does not change the canonical form
  FfMatrix b(3, 6, 7);
  for (int j = 0; j < 6; ++j) {
    b.at(0, j) = (rows[1][j] + 2 * rows[2][j]) % 7;
    b.at(1, j) = (rows[0][j] + 6 * rows[1][j]) % 7;
    b.at(2, j) = (3 * rows[2][j]) % 7;
  }
  auto rb = rref(b);
  CHECK(rb.mat == a);
  CHECK(rb.pivots == ra.pivots);

  CHECK_THROWS_AS(FfMatrix(2, 2, 6), std::invalid_argument);
}

TEST_CASE("subspace enumeration counts") {
  // C = (2,4,5) inside F_p^5 leaves exactly one free cell
  CHECK(free_cells({2, 4, 5}, 5).size() == 1);
  for (int p : {2, 3}) {
    std::map<std::vector<int>, long long> counts;
    for_each_subspace(5, 3, p,
                      [&](const FfMatrix&, const std::vector<int>& piv) {
                        ++counts[piv];
                      });
    CHECK(counts[{2, 4, 5}] == p);
  }

  long long zero_dim = 0;
  for_each_subspace(4, 0, 3,
                    [&](const FfMatrix&, const std::vector<int>&) {
                      ++zero_dim;
                    });
  CHECK(zero_dim == 1);

  long long total = 0;
  for_each_subspace(4, 2, 2,
                    [&](const FfMatrix& basis, const std::vector<int>& piv) {
                      ++total;
                      auto r = rref(basis);
                      CHECK(r.pivots == piv);
                      CHECK(r.mat == basis);
                    });
  CHECK(total == q_binomial(4, 2).evaluate(2));
}

TEST_CASE("profile computation") {
  FfMatrix delta = FfMatrix::identity(4, 3);
  FfMatrix w(0, 4, 3);
  CHECK(profile(w, delta) == Partition{});

  FfMatrix w2(2, 4, 3);
  w2.at(0, 0) = 1;
  w2.at(1, 2) = 1;
  CHECK(profile(w2, delta) == Partition({2}));

  // single nilpotent Jordan block: e_1 is killed, e_3 generates a chain
  FfMatrix jordan = nilpotent_jordan_block(3, 2);
  FfMatrix e1(1, 3, 2);
  e1.at(0, 0) = 1;
  CHECK(profile(e1, jordan) == Partition({1}));
  FfMatrix e3(1, 3, 2);
  e3.at(0, 2) = 1;
  CHECK(profile(e3, jordan) == Partition({1, 1, 1}));
}

TEST_CASE("brute force profile counts") {
  FfMatrix delta = diagonal_of_type(Composition({2, 2}), 3);
  CHECK(profile_count_bruteforce(Partition{}, delta) == 1);
  // profile (1) subspaces are the invariant lines: eigenvectors only
  CHECK(profile_count_bruteforce(Partition({1}), delta) ==
        profile_count_diagonal(Partition({1}), Partition({2, 2})).evaluate(3));
}

TEST_CASE("single-part profiles sum the pivot law") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (int m = 0; m <= n; ++m) {
        QPoly expect;
        for (const auto& c : pivot_sets(n, m)) {
          int e = segmented_stat(Stat::inv, nu, pivot_indicator_word(c, n));
          expect += QPoly::monomial(1, static_cast<std::size_t>(e));
        }
        CHECK(profile_count_diagonal(Partition({m}), nu) == expect);
      }
    }
  }
}

TEST_CASE("diagonal profile polynomial, worked example") {
  QPoly b(std::vector<BigInt>{1, 2, 3, 2, 1});
  QPoly q_minus_1(std::vector<BigInt>{-1, 1});
  CHECK(profile_count_diagonal(Partition({5, 1}), Partition({3, 3})) ==
        q_minus_1 * b);
  CHECK(profile_count_diagonal(Partition{}, Partition({3, 3})) == QPoly{1});
}

TEST_CASE("eta factor") {
  Composition alpha({2, 3, 2, 2, 3});
  std::vector<int> c{1, 2, 4, 7, 8};
  std::vector<int> d{1, 2, 3, 5};
  QPoly expect{1};
  auto term = [](int hi, int lo) {
    return QPoly::monomial(1, static_cast<std::size_t>(hi)) -
           QPoly::monomial(1, static_cast<std::size_t>(lo));
  };
  expect = term(2, 0) * term(2, 1) * term(3, 2) * term(5, 3);
  CHECK(eta_factor(alpha, c, d) == expect);

  CHECK(eta_factor(alpha, c, {}) == QPoly{1});

  // columns of the pivot tableau fail to increase: weight collapses to zero
  Composition singles(std::vector<int>(8, 1));
  CHECK(eta_factor(singles, {1, 4, 5}, {1, 2, 4}).is_zero());
}

TEST_CASE("pivot counts reduce to the invariant-subspace law for one part") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (int m = 0; m <= n; ++m) {
        for (const auto& c : pivot_sets(n, m)) {
          int e = segmented_stat(Stat::inv, nu, pivot_indicator_word(c, n));
          CHECK(profile_count_by_pivot(Partition({m}), nu, c) ==
                QPoly::monomial(1, static_cast<std::size_t>(e)));
        }
      }
    }
  }
}

TEST_CASE("pivot counts sum to the diagonal count") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (int k = 0; k <= n; ++k) {
        for (const auto& mu : partitions_of(k)) {
          QPoly sum;
          for (const auto& c : pivot_sets(n, mu.part(1)))
            sum += profile_count_by_pivot(mu, nu, c);
          CHECK(sum == profile_count_diagonal(mu, nu));
        }
      }
    }
  }
}

TEST_CASE("one-level recursion agrees with the closed pivot count") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (int k = 0; k <= n; ++k) {
        for (const auto& mu : partitions_of(k)) {
          if (mu.length() < 2) continue;
          for (const auto& c : pivot_sets(n, mu.part(1)))
            CHECK(pivot_count_one_level(mu, nu, c) ==
                  profile_count_by_pivot(mu, nu, c));
        }
      }
    }
  }
}

TEST_CASE("per-pivot brute force counts") {
  for (int p : {2, 3}) {
    for (int n = 1; n <= (p == 2 ? 5 : 4); ++n) {
      for (const auto& nu : partitions_of(n)) {
        if (nu.length() > p) continue;
        FfMatrix delta = diagonal_of_type(nu, p);
        auto hist = profile_histogram_by_pivot(delta);
        for (int k = 0; k <= n; ++k) {
          for (const auto& mu : partitions_of(k)) {
            for (const auto& c : pivot_sets(n, mu.part(1))) {
              auto it = hist.find({c, mu});
              BigInt got = it == hist.end() ? 0 : BigInt(it->second);
              CHECK(profile_count_by_pivot(mu, nu, c).evaluate(p) == got);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("histogram invariant under diagonal permutations") {
  // type (2,1,1) over F_3: compare a block-scalar layout with a shuffle
  FfMatrix sorted_layout = FfMatrix::diagonal({0, 0, 1, 2}, 3);
  FfMatrix shuffled = FfMatrix::diagonal({1, 0, 2, 0}, 3);
  CHECK(profile_histogram(sorted_layout) == profile_histogram(shuffled));

  FfMatrix sorted2 = FfMatrix::diagonal({0, 0, 0, 1, 1}, 2);
  FfMatrix shuffled2 = FfMatrix::diagonal({1, 0, 0, 1, 0}, 2);
  CHECK(profile_histogram(sorted2) == profile_histogram(shuffled2));
}

TEST_CASE("regular diagonal closed form") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& mu : partitions_of(k))
        CHECK(profile_count_regular_diagonal(mu, n) ==
              profile_count_diagonal(
                  mu, Partition(std::vector<int>(
                          static_cast<std::size_t>(n), 1))));
}

TEST_CASE("irreducible and nilpotent formulas") {
  CHECK(profile_count_irreducible(Partition({1, 1}), 2) == q_int(2));
  CHECK(profile_count_irreducible(Partition({1}), 2).is_zero());
  CHECK(profile_count_irreducible(Partition{}, 2) == QPoly{1});
  CHECK(profile_count_irreducible(Partition({2, 1}), 3) ==
        QPoly(std::vector<BigInt>{1, 1, 1}));

  for (int m = 1; m <= 4; ++m)
    CHECK(profile_count_regular_nilpotent(Partition({m})) == QPoly{1});
  CHECK(profile_count_regular_nilpotent(Partition({2, 1})) ==
        q_int(2).shifted(1));
}

TEST_CASE("smallest irreducible polynomials") {
  CHECK(smallest_irreducible(1, 2) == std::vector<int>{0});        // x
  CHECK(smallest_irreducible(2, 2) == std::vector<int>{1, 1});     // x^2+x+1
  CHECK(smallest_irreducible(2, 3) == std::vector<int>{1, 0});     // x^2+1
  // degree 3 over F_2: x^3 + x + 1
  CHECK(smallest_irreducible(3, 2) == std::vector<int>{1, 1, 0});
}

TEST_CASE("special operator oracles at small sizes") {
  for (int p : {2, 3})
    for (int n = 1; n <= 3; ++n)
      for (const auto& c : verify_special_operators(n, p)) {
        INFO(c.key << " " << c.detail);
        CHECK(c.ok);
      }
}

TEST_CASE("oracle suite at small sizes") {
  for (int p : {2, 3})
    for (int n = 0; n <= 4; ++n) {
      for (const auto& c : verify_profiles_oracle(n, p)) {
        INFO(c.key << " " << c.detail);
        CHECK(c.ok);
      }
      for (const auto& c : verify_knuth_pivots(n, p)) {
        INFO(c.key << " " << c.detail);
        CHECK(c.ok);
      }
    }
}
