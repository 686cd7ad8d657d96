#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcomb/partition.hpp"
#include "qcomb/qpoly.hpp"
#include "qcomb/set_partition.hpp"
#include "qcomb/tableau.hpp"

namespace qcomb {

/// Branching weight of a horizontal strip mu/rho in the monomial expansion
/// of the q-Whittaker function: product over rows of the q-binomial of the
/// row difference of mu choosing the cells removed in that row.
inline QPoly psi_strip(const Partition& mu, const Partition& rho) {
  if (!is_horizontal_strip(mu, rho))
    throw std::invalid_argument("psi_strip: not a horizontal strip");
  QPoly acc{1};
  for (int i = 1; i <= mu.length(); ++i)
    acc *= q_binomial(mu.part(i) - mu.part(i + 1), mu.part(i) - rho.part(i));
  return acc;
}

/// Companion strip weight: the contribution of one letter of a semistandard
/// tableau to the product of interlace and distribution weights.
inline QPoly theta_strip(const Partition& mu, const Partition& rho) {
  if (!is_horizontal_strip(mu, rho))
    throw std::invalid_argument("theta_strip: not a horizontal strip");
  int strip = mu.size() - rho.size();
  int top = mu.part(1) - rho.part(1);
  QPoly acc{1};
  for (int i = top + 1; i <= strip; ++i) acc *= q_int(i);
  for (int i = 1; i <= mu.length(); ++i)
    acc *= q_binomial(rho.part(i) - rho.part(i + 1),
                      mu.part(i + 1) - rho.part(i + 1));
  return acc;
}

/// b polynomial as a positive sum over column-strict fillings: the sum of
/// interlace_weight * distribution_weight over all submultiset tableaux of
/// shape mu with ambient content alpha. Defined for |mu| <= |alpha|; when
/// the sizes agree the sum runs over SSYT(mu, alpha).
inline QPoly bpoly_via_tableaux(const Partition& mu, const Composition& alpha) {
  QPoly acc;
  for (const auto& t : submultiset_tableaux(mu, alpha)) {
    QPoly w = interlace_weight(t);
    if (w.is_zero()) continue;
    acc += w * distribution_weight(t, alpha);
  }
  return acc;
}

/// Two-variable refinement: q tracks the interlacing number, t tracks the
/// segmented Mahonian statistic, summed over set partitions of shape mu'
/// minimally intersecting the canonical partition of alpha.
inline QPoly2 bpoly_two_variable(const Partition& mu, const Composition& alpha,
                                 Stat stat) {
  if (mu.size() != alpha.total())
    throw std::invalid_argument("bpoly_two_variable: |mu| != |alpha|");
  QPoly2 acc;
  for (const auto& sp :
       set_partitions(alpha.total(), mu.conjugate(), alpha)) {
    int iq = interlacing_count(sp, alpha);
    int tq = partition_stat(stat, alpha, sp);
    acc.add_term(static_cast<std::size_t>(iq), static_cast<std::size_t>(tq), 1);
  }
  return acc;
}

/// b polynomial from set partition statistics: q^(interlacings + segmented
/// statistic) summed over the same set partitions. Identical for every
/// Mahonian statistic.
inline QPoly bpoly_via_set_partitions(const Partition& mu,
                                      const Composition& alpha, Stat stat) {
  if (mu.size() != alpha.total())
    throw std::invalid_argument("bpoly_via_set_partitions: |mu| != |alpha|");
  QPoly acc;
  for (const auto& sp :
       set_partitions(alpha.total(), mu.conjugate(), alpha)) {
    int e = interlacing_count(sp, alpha) + partition_stat(stat, alpha, sp);
    acc += QPoly::monomial(1, static_cast<std::size_t>(e));
  }
  return acc;
}

namespace detail {

inline QPoly bpoly_strips_impl(const Partition& mu, const Partition& nu) {
  if (nu.empty()) return mu.empty() ? QPoly{1} : QPoly{};
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  static std::map<Key, QPoly> memo;
  static std::mutex memo_mutex;
  Key key{mu.parts(), nu.parts()};
  {
    std::scoped_lock lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  int last = nu.part(nu.length());
  Partition head = nu.drop_last();
  QPoly acc;
  for (const auto& rho : horizontal_strips(mu, last))
    acc += bpoly_strips_impl(rho, head) * theta_strip(mu, rho);
  {
    std::scoped_lock lock(memo_mutex);
    memo.emplace(std::move(key), acc);
  }
  return acc;
}

inline QPoly whittaker_impl(const Partition& mu, const Partition& nu) {
  if (nu.empty()) return mu.empty() ? QPoly{1} : QPoly{};
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  static std::map<Key, QPoly> memo;
  static std::mutex memo_mutex;
  Key key{mu.parts(), nu.parts()};
  {
    std::scoped_lock lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  int last = nu.part(nu.length());
  Partition head = nu.drop_last();
  QPoly acc;
  for (const auto& rho : horizontal_strips(mu, last))
    acc += whittaker_impl(rho, head) * psi_strip(mu, rho);
  {
    std::scoped_lock lock(memo_mutex);
    memo.emplace(std::move(key), acc);
  }
  return acc;
}

}  // namespace detail

/// b polynomial by peeling horizontal strips off mu, one part of nu at a
/// time (smallest part first), weighting each strip by theta_strip.
inline QPoly bpoly_via_strips(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size())
    throw std::invalid_argument("bpoly_via_strips: |mu| != |nu|");
  return detail::bpoly_strips_impl(mu, nu);
}

/// Coefficient of the monomial symmetric function m_nu in the q-Whittaker
/// function W_mu: the sum over chains of horizontal nu_j-strips of the
/// product of psi_strip weights.
inline QPoly whittaker_coeff(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size())
    throw std::invalid_argument("whittaker_coeff: |mu| != |nu|");
  return detail::whittaker_impl(mu, nu);
}

/// Converts a q-Whittaker monomial coefficient into the b polynomial:
/// multiply by the q-factorials of the parts of nu, divide exactly by the
/// q-factorials of the row differences of mu. A nonzero remainder would be
/// an internal error, not bad input.
inline QPoly bpoly_from_whittaker(const Partition& mu, const Partition& nu) {
  QPoly num = whittaker_coeff(mu, nu);
  for (int i = 1; i <= nu.length(); ++i) num *= q_factorial(nu.part(i));
  QPoly den{1};
  for (int i = 1; i <= mu.length(); ++i)
    den *= q_factorial(mu.part(i) - mu.part(i + 1));
  return exact_div(num, den);
}

/// Number of 0-1 matrices with row sums lambda and column sums nu, via the
/// value of the b polynomial at q = 1.
inline BigInt binary_matrix_count(const Partition& lambda, const Partition& nu) {
  if (lambda.size() != nu.size())
    throw std::invalid_argument("binary_matrix_count: |lambda| != |nu|");
  BigInt num = bpoly_via_strips(lambda.conjugate(), nu).at_one();
  if (!lambda.empty()) {
    int mult = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
      if (lambda.part(i) == lambda.part(i + 1)) {
        ++mult;
      } else {
        num *= factorial(mult);
        mult = 1;
      }
    }
  }
  BigInt den{1};
  for (int i = 1; i <= nu.length(); ++i) den *= factorial(nu.part(i));
  if (num % den != 0)
    throw std::logic_error("binary_matrix_count: non-integer result");
  return num / den;
}

/// Direct enumeration of 0-1 matrices with the given margins.
inline BigInt binary_matrix_bruteforce(const Partition& lambda,
                                       const Partition& nu) {
  if (lambda.size() != nu.size())
    throw std::invalid_argument("binary_matrix_bruteforce: |lambda| != |nu|");
  int rows = lambda.length(), cols = nu.length();
  std::vector<int> colrem = nu.parts();
  BigInt count{0};
  std::vector<int> chosen;
  auto fill_row = [&](auto&& self, int r) -> void {
    if (r > rows) {
      for (int c : colrem)
        if (c != 0) return;
      ++count;
      return;
    }
    int need = lambda.part(r);
    chosen.clear();
    auto pick = [&](auto&& inner, int from, int left) -> void {
      if (left == 0) {
        std::vector<int> saved = chosen;
        for (int c : saved) --colrem[static_cast<std::size_t>(c)];
        self(self, r + 1);
        for (int c : saved) ++colrem[static_cast<std::size_t>(c)];
        chosen = std::move(saved);
        return;
      }
      for (int c = from; c <= cols - left; ++c) {
        if (colrem[static_cast<std::size_t>(c)] == 0) continue;
        chosen.push_back(c);
        inner(inner, c + 1, left - 1);
        chosen.pop_back();
      }
    };
    pick(pick, 0, need);
  };
  fill_row(fill_row, 1);
  return count;
}

/// All perfect matchings of [2m] as set partitions with blocks of size 2.
inline std::vector<SetPartition> perfect_matchings(int m) {
  int n = 2 * m;
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    int a = 0;
    for (int i = 1; i <= n; ++i)
      if (!used[static_cast<std::size_t>(i)]) {
        a = i;
        break;
      }
    if (a == 0) {
      out.emplace_back(n, blocks);
      return;
    }
    used[static_cast<std::size_t>(a)] = true;
    for (int b = a + 1; b <= n; ++b) {
      if (used[static_cast<std::size_t>(b)]) continue;
      used[static_cast<std::size_t>(b)] = true;
      blocks.push_back({a, b});
      self(self);
      blocks.pop_back();
      used[static_cast<std::size_t>(b)] = false;
    }
    used[static_cast<std::size_t>(a)] = false;
  };
  rec(rec);
  return out;
}

enum class TouchardMethod { chords, whittaker, closed };

inline TouchardMethod touchard_method_from_name(const std::string& name) {
  if (name == "chords") return TouchardMethod::chords;
  if (name == "whittaker") return TouchardMethod::whittaker;
  if (name == "closed") return TouchardMethod::closed;
  throw std::invalid_argument("unknown touchard method: " + name);
}

/// Generating polynomial of chord diagrams on 2m points by number of
/// crossings, by one of three routes:
///  - chords: enumerate perfect matchings and count crossings directly
///    (crossings are the interlacings of the matching's arcs);
///  - whittaker: divide the q-Whittaker coefficient of (m,m) at nu = (1^2m)
///    exactly by the q-factorial of m;
///  - closed: solve the alternating binomial identity for T_m by exact
///    division by (1-q)^m.
inline QPoly touchard_riordan(int m, TouchardMethod method) {
  if (m < 1) throw std::invalid_argument("touchard_riordan: m must be >= 1");
  switch (method) {
    case TouchardMethod::chords: {
      QPoly acc;
      for (const auto& sp : perfect_matchings(m))
        acc += QPoly::monomial(
            1, static_cast<std::size_t>(interlacing_count(sp)));
      return acc;
    }
    case TouchardMethod::whittaker: {
      Partition mu({m, m});
      Partition ones(std::vector<int>(static_cast<std::size_t>(2 * m), 1));
      return exact_div(whittaker_coeff(mu, ones), q_factorial(m));
    }
    case TouchardMethod::closed: {
      QPoly rhs;
      for (int i = 0; i <= m; ++i) {
        BigInt c = binomial(2 * m, m - i) - binomial(2 * m, m - i - 1);
        if (i % 2 == 1) c = -c;
        rhs += QPoly::monomial(c, static_cast<std::size_t>(i * (i + 1) / 2));
      }
      QPoly one_minus_q(std::vector<BigInt>{1, -1});
      return exact_div(rhs, pow(one_minus_q, static_cast<unsigned>(m)));
    }
  }
  throw std::invalid_argument("touchard_riordan: bad method");
}

}  // namespace qcomb
