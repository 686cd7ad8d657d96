#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "qcomb/bpoly.hpp"

using namespace qcomb;

namespace {

const QPoly kBpoly51_33(std::vector<BigInt>{1, 2, 3, 2, 1});

Partition ones_partition(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

// Chains of partitions from the empty shape up to mu whose j-th step adds a
// horizontal strip of size nu_j.
void for_each_chain(const Partition& mu, const Partition& nu,
                    std::vector<Partition>& suffix,
                    const std::function<void(const std::vector<Partition>&)>& fn) {
  if (nu.empty()) {
    if (!mu.empty()) return;
    std::vector<Partition> chain{Partition{}};
    chain.insert(chain.end(), suffix.rbegin(), suffix.rend());
    fn(chain);
    return;
  }
  for (const auto& rho : horizontal_strips(mu, nu.part(nu.length()))) {
    suffix.push_back(mu);
    for_each_chain(rho, nu.drop_last(), suffix, fn);
    suffix.pop_back();
  }
}

}  // namespace

TEST_CASE("psi strip weights") {
  CHECK(psi_strip(Partition({3, 2}), Partition({3, 2})) == QPoly{1});
  CHECK(psi_strip(Partition({2, 1}), Partition({1, 1})) == QPoly{1});
  CHECK(psi_strip(Partition({2}), Partition({1})) == q_int(2));
  CHECK_THROWS_AS(psi_strip(Partition({2, 2}), Partition({1})),
                  std::invalid_argument);
}

TEST_CASE("theta strip weights") {
  CHECK(theta_strip(Partition({3, 1}), Partition({3, 1})) == QPoly{1});
  for (int m = 1; m <= 5; ++m)
    CHECK(theta_strip(Partition({m}), Partition{}) == QPoly{1});
  CHECK_THROWS_AS(theta_strip(Partition({2, 2}), Partition({1, 1})),
                  std::invalid_argument);
}

TEST_CASE("theta and psi are proportional along every chain") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (const auto& nu : partitions_of(n)) {
        QPoly row_fact{1};
        for (int i = 1; i <= mu.length(); ++i)
          row_fact *= q_factorial(mu.part(i) - mu.part(i + 1));
        QPoly nu_fact{1};
        for (int i = 1; i <= nu.length(); ++i)
          nu_fact *= q_factorial(nu.part(i));
        std::vector<Partition> suffix;
        for_each_chain(mu, nu, suffix,
                       [&](const std::vector<Partition>& chain) {
                         QPoly theta_prod{1}, psi_prod{1};
                         for (std::size_t j = 1; j < chain.size(); ++j) {
                           theta_prod *= theta_strip(chain[j], chain[j - 1]);
                           psi_prod *= psi_strip(chain[j], chain[j - 1]);
                         }
                         CHECK(theta_prod * row_fact == psi_prod * nu_fact);
                       });
      }
    }
  }
}

TEST_CASE("the worked b polynomial") {
  Partition mu({5, 1});
  Partition nu({3, 3});
  CHECK(bpoly_via_tableaux(mu, nu) == kBpoly51_33);
  CHECK(bpoly_via_strips(mu, nu) == kBpoly51_33);
  for (Stat s : {Stat::inv, Stat::ninv, Stat::maj})
    CHECK(bpoly_via_set_partitions(mu, nu, s) == kBpoly51_33);
  CHECK(bpoly_via_tableaux(Partition{}, Partition{}) == QPoly{1});
  for (int m = 1; m <= 5; ++m)
    CHECK(bpoly_via_strips(Partition({m}), Partition({m})) == QPoly{1});
}

TEST_CASE("specializations at q=0 and q=1") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (const auto& nu : partitions_of(n)) {
        QPoly b = bpoly_via_strips(mu, nu);
        CHECK(b.coeff(0) == kostka(mu, nu));
        CHECK(b.at_one() ==
              BigInt(set_partitions(n, mu.conjugate(), nu).size()));
      }
    }
  }
}

TEST_CASE("vanishing outside the dominance cone") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& nu : partitions_of(n))
        CHECK(bpoly_via_strips(mu, nu).is_zero() != dominates(mu, nu));
}

TEST_CASE("two-variable refinement") {
  Partition mu({5, 1});
  Partition nu({3, 3});
  for (Stat s : {Stat::inv, Stat::ninv, Stat::maj}) {
    QPoly2 f = bpoly_two_variable(mu, nu, s);
    CHECK(f.at_t_equals_q() == kBpoly51_33);
    CHECK(f.coeff(0, 0) == kostka(mu, nu));
  }
  // tableau factorization of the same polynomial: sum of r(q) x s(t)
  for (int n = 1; n <= 5; ++n) {
    for (const auto& m : partitions_of(n)) {
      for (const auto& v : partitions_of(n)) {
        QPoly2 direct = bpoly_two_variable(m, v, Stat::inv);
        QPoly2 via_tabs;
        for (const auto& t : semistandard_tableaux(m, v))
          via_tabs.add_product(interlace_weight(t),
                               distribution_weight(t, v));
        CHECK(direct == via_tabs);
      }
    }
  }
}

TEST_CASE("invariance under permutations of the content") {
  std::vector<std::pair<Partition, std::vector<int>>> cases = {
      {Partition({5, 1}), {3, 3}},
      {Partition({3, 2, 1}), {1, 2, 3}},
      {Partition({4, 2}), {2, 1, 3}},
      {Partition({2, 2, 1}), {1, 3, 1}}};
  for (auto& [mu, alpha] : cases) {
    std::sort(alpha.begin(), alpha.end());
    QPoly ref = bpoly_via_tableaux(mu, Composition(alpha));
    do {
      Composition a(alpha);
      CHECK(bpoly_via_tableaux(mu, a) == ref);
      CHECK(bpoly_via_set_partitions(mu, a, Stat::inv) == ref);
    } while (std::next_permutation(alpha.begin(), alpha.end()));
  }
}

TEST_CASE("singleton-content reduction to the base polynomial") {
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& mu : partitions_of(k)) {
        QPoly big = bpoly_via_tableaux(mu, ones_partition(n));
        QPoly base = bpoly_via_strips(mu, ones_partition(k));
        CHECK(big == QPoly(binomial(n, k)) * base);
      }
    }
  }
}

TEST_CASE("q-Whittaker coefficients") {
  for (int m = 1; m <= 5; ++m)
    CHECK(whittaker_coeff(Partition({m}), Partition({m})) == QPoly{1});
  CHECK(whittaker_coeff(Partition({2}), ones_partition(2)) == q_int(2));
  for (int n = 0; n <= 6; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& nu : partitions_of(n))
        CHECK(whittaker_coeff(mu, nu).coeff(0) == kostka(mu, nu));
}

TEST_CASE("whittaker conversion identity") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (const auto& nu : partitions_of(n)) {
        QPoly lhs = bpoly_via_strips(mu, nu);
        for (int i = 1; i <= mu.length(); ++i)
          lhs *= q_factorial(mu.part(i) - mu.part(i + 1));
        QPoly rhs = whittaker_coeff(mu, nu);
        for (int i = 1; i <= nu.length(); ++i)
          rhs *= q_factorial(nu.part(i));
        CHECK(lhs == rhs);
        CHECK(bpoly_from_whittaker(mu, nu) == bpoly_via_strips(mu, nu));
      }
    }
  }
}

TEST_CASE("binary matrix counts") {
  CHECK(binary_matrix_count(Partition({1, 1}), Partition({1, 1})) == 2);
  CHECK(binary_matrix_count(Partition({2, 1}), Partition({2, 1})) == 1);
  for (int n = 1; n <= 6; ++n)
    CHECK(binary_matrix_count(Partition({n}), ones_partition(n)) == 1);
  for (int n = 0; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& nu : partitions_of(n))
        CHECK(binary_matrix_count(lambda, nu) ==
              binary_matrix_bruteforce(lambda, nu));
}

TEST_CASE("Touchard-Riordan routes") {
  CHECK(touchard_riordan(1, TouchardMethod::chords) == QPoly{1});
  CHECK(touchard_riordan(2, TouchardMethod::chords) ==
        QPoly(std::vector<BigInt>{2, 1}));
  for (int m = 1; m <= 5; ++m) {
    QPoly chords = touchard_riordan(m, TouchardMethod::chords);
    CHECK(touchard_riordan(m, TouchardMethod::whittaker) == chords);
    CHECK(touchard_riordan(m, TouchardMethod::closed) == chords);
    BigInt dfact{1};
    for (int i = 3; i <= 2 * m - 1; i += 2) dfact *= i;
    CHECK(chords.at_one() == dfact);
  }
}

TEST_CASE("chord route equals the crossing histogram") {
  for (int m = 1; m <= 5; ++m) {
    std::map<int, long long> histogram;
    for (const auto& sp : perfect_matchings(m)) {
      int crossings = 0;
      const auto& blocks = sp.blocks();
      for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
          int a1 = blocks[i][0], a2 = blocks[i][1];
          int b1 = blocks[j][0], b2 = blocks[j][1];
          if ((a1 < b1 && b1 < a2 && a2 < b2) ||
              (b1 < a1 && a1 < b2 && b2 < a2))
            ++crossings;
        }
      ++histogram[crossings];
    }
    QPoly expect;
    for (const auto& [k, c] : histogram)
      expect += QPoly::monomial(c, static_cast<std::size_t>(k));
    CHECK(touchard_riordan(m, TouchardMethod::chords) == expect);
  }
}

TEST_CASE("the b polynomial of column pairs is Touchard-Riordan") {
  for (int m = 1; m <= 4; ++m) {
    Partition mu({m, m});
    CHECK(bpoly_via_strips(mu, ones_partition(2 * m)) ==
          touchard_riordan(m, TouchardMethod::chords));
  }
}
