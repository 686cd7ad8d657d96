#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qcomb/bpoly.hpp"
#include "qcomb/ffmatrix.hpp"
#include "qcomb/partition.hpp"
#include "qcomb/qpoly.hpp"
#include "qcomb/tableau.hpp"

namespace qcomb {

/// Common prefactor of all diagonal profile counts:
/// (q-1)^(mu_2 + mu_3 + ...) * q^(sum of C(mu_j, 2) for j >= 2).
inline QPoly profile_prefactor(const Partition& mu) {
  int e1 = 0, e2 = 0;
  for (int j = 2; j <= mu.length(); ++j) {
    e1 += mu.part(j);
    e2 += mu.part(j) * (mu.part(j) - 1) / 2;
  }
  QPoly q_minus_1(std::vector<BigInt>{-1, 1});
  return pow(q_minus_1, static_cast<unsigned>(e1))
      .shifted(static_cast<std::size_t>(e2));
}

/// Number of subspaces of F_q^n with the given profile with respect to a
/// diagonal operator whose entry multiplicities are nu (|nu| = n), as a
/// polynomial in q. Requires |mu| <= |nu|.
inline QPoly profile_count_diagonal(const Partition& mu, const Partition& nu) {
  if (mu.size() > nu.size())
    throw std::invalid_argument("profile_count_diagonal: |mu| > n");
  return profile_prefactor(mu) * bpoly_via_tableaux(mu, nu);
}

/// Number of full column rank choices attaching a second-row subspace with
/// pivots D to a first-row pivot set C inside a block-scalar operator of
/// type alpha: (q-1)^|D| q^C(|D|,2) times the interlace weight of the
/// compressed two-row pivot tableau.
inline QPoly eta_factor(const Composition& alpha, const std::vector<int>& c_pivots,
                        const std::vector<int>& d_pivots) {
  if (d_pivots.size() > c_pivots.size())
    throw std::invalid_argument("eta_factor: |D| must not exceed |C|");
  int m2 = static_cast<int>(d_pivots.size());
  QPoly w = interlace_weight(block_letters(pivot_tableau(c_pivots, d_pivots), alpha));
  QPoly q_minus_1(std::vector<BigInt>{-1, 1});
  return pow(q_minus_1, static_cast<unsigned>(m2))
             .shifted(static_cast<std::size_t>(m2 * (m2 - 1) / 2)) *
         w;
}

/// Number of subspaces with profile mu and pivot set C, for a block-scalar
/// operator of type alpha: the prefactor times the sum over distinct-entry
/// tableaux of shape mu with first row C of
/// q^(segmented ninv of the row word) * interlace weight of the compressed
/// tableau.
inline QPoly profile_count_by_pivot(const Partition& mu, const Composition& alpha,
                                    const std::vector<int>& c_pivots) {
  int n = alpha.total();
  if (static_cast<int>(c_pivots.size()) != mu.part(1))
    throw std::invalid_argument("profile_count_by_pivot: |C| != mu_1");
  QPoly acc;
  for (const auto& t : distinct_entry_tableaux(mu, n, alpha, &c_pivots)) {
    QPoly w = interlace_weight(block_letters(t, alpha));
    if (w.is_zero()) continue;
    int e = segmented_stat(Stat::ninv, alpha, row_word(t, n));
    acc += w.shifted(static_cast<std::size_t>(e));
  }
  return profile_prefactor(mu) * acc;
}

/// Profile count for an operator with n distinct eigenvalues: the binomial
/// choice of eigenvalue support times the prefactor times the b polynomial
/// of mu against singleton content.
inline QPoly profile_count_regular_diagonal(const Partition& mu, int n) {
  if (mu.size() > n)
    throw std::invalid_argument("profile_count_regular_diagonal: |mu| > n");
  int k = mu.size();
  Partition ones(std::vector<int>(static_cast<std::size_t>(k), 1));
  QPoly b = bpoly_via_strips(mu, ones);
  return QPoly(binomial(n, k)) * profile_prefactor(mu) * b;
}

/// Profile count when the operator has irreducible characteristic
/// polynomial of degree n. Nonzero profiles of such an operator always use
/// the whole space, so the count is zero unless mu is empty or |mu| = n.
inline QPoly profile_count_irreducible(const Partition& mu, int n) {
  if (mu.size() > n)
    throw std::invalid_argument("profile_count_irreducible: |mu| > n");
  if (mu.empty()) return QPoly{1};
  if (mu.size() != n) return QPoly{};
  QPoly num = QPoly::monomial(1, static_cast<std::size_t>(n)) - QPoly{1};
  for (int i = 2; i <= mu.length(); ++i) {
    int mi = mu.part(i);
    num *= q_binomial(mu.part(i - 1), mi).shifted(
        static_cast<std::size_t>(mi * mi - mi));
  }
  QPoly den =
      QPoly::monomial(1, static_cast<std::size_t>(mu.part(1))) - QPoly{1};
  return exact_div(num, den);
}

/// Profile count for a regular nilpotent operator (a single nilpotent
/// Jordan block); independent of the ambient dimension.
inline QPoly profile_count_regular_nilpotent(const Partition& mu) {
  QPoly acc{1};
  for (int i = 2; i <= mu.length(); ++i) {
    int mi = mu.part(i);
    acc *= q_binomial(mu.part(i - 1), mi).shifted(
        static_cast<std::size_t>(mi * mi));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Oracles over small prime fields
// ---------------------------------------------------------------------------

/// Block-scalar matrix whose i-th run of equal entries has length alpha_i;
/// runs get the field elements 0, 1, 2, ... in order, so the number of
/// positive parts must not exceed p.
inline FfMatrix diagonal_of_type(const Composition& alpha, int p) {
  std::vector<int> entries;
  int label = 0;
  for (int len : alpha.parts()) {
    if (len == 0) continue;
    if (label >= p)
      throw std::invalid_argument(
          "diagonal_of_type: type needs more distinct entries than the field has");
    for (int j = 0; j < len; ++j) entries.push_back(label);
    ++label;
  }
  return FfMatrix::diagonal(entries, p);
}

namespace detail {

// polynomial remainder over Z/p, coefficients ascending
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b,
                                 int p) {
  auto degree = [](const std::vector<int>& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[static_cast<std::size_t>(d)] == 0) --d;
    return d;
  };
  int db = degree(b);
  int inv = mod_inverse(b[static_cast<std::size_t>(db)], p);
  for (int da = degree(a); da >= db; da = degree(a)) {
    int f = a[static_cast<std::size_t>(da)] * inv % p;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(da - db + j);
      a[idx] = ((a[idx] - f * b[static_cast<std::size_t>(j)]) % p + p) % p;
    }
  }
  return a;
}

inline bool poly_is_zero(const std::vector<int>& f) {
  for (int c : f)
    if (c != 0) return false;
  return true;
}

}  // namespace detail

/// Lexicographically smallest monic irreducible polynomial of the given
/// degree over Z/p, found by trial division against every lower-degree
/// monic polynomial. Returned as the non-leading coefficients c_0..c_{d-1}
/// of x^d + c_{d-1} x^{d-1} + ... + c_0.
inline std::vector<int> smallest_irreducible(int degree, int p) {
  if (degree < 1) throw std::invalid_argument("smallest_irreducible: degree < 1");
  if (!is_prime(p)) throw std::invalid_argument("smallest_irreducible: p not prime");
  long long count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (long long v = 0; v < count; ++v) {
    std::vector<int> f(static_cast<std::size_t>(degree) + 1, 0);
    long long rest = v;
    for (int i = 0; i < degree; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
      rest /= p;
    }
    f[static_cast<std::size_t>(degree)] = 1;
    bool irreducible = f[0] != 0 || degree == 1;
    for (int d = 1; irreducible && 2 * d <= degree; ++d) {
      long long gcount = 1;
      for (int i = 0; i < d; ++i) gcount *= p;
      for (long long gv = 0; gv < gcount && irreducible; ++gv) {
        std::vector<int> g(static_cast<std::size_t>(d) + 1, 0);
        long long grest = gv;
        for (int i = 0; i < d; ++i) {
          g[static_cast<std::size_t>(i)] = static_cast<int>(grest % p);
          grest /= p;
        }
        g[static_cast<std::size_t>(d)] = 1;
        if (detail::poly_is_zero(detail::poly_mod(f, g, p))) irreducible = false;
      }
    }
    if (irreducible) {
      f.pop_back();
      return f;
    }
  }
  throw std::logic_error("smallest_irreducible: none found");
}

/// Companion matrix of the monic polynomial with the given non-leading
/// coefficients (ascending).
inline FfMatrix companion_matrix(const std::vector<int>& tail, int p) {
  int n = static_cast<int>(tail.size());
  FfMatrix m(n, n, p);
  for (int i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  for (int i = 0; i < n; ++i)
    m.set(i, n - 1, -tail[static_cast<std::size_t>(i)]);
  return m;
}

/// Single nilpotent Jordan block of size n.
inline FfMatrix nilpotent_jordan_block(int n, int p) {
  FfMatrix m(n, n, p);
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
  return m;
}

/// Profile histogram over all subspaces of all dimensions.
inline std::map<Partition, long long> profile_histogram(const FfMatrix& delta) {
  std::map<Partition, long long> hist;
  int n = delta.rows();
  for (int m = 0; m <= n; ++m)
    for_each_subspace(n, m, delta.modulus(),
                      [&](const FfMatrix& basis, const std::vector<int>&) {
                        ++hist[profile(basis, delta)];
                      });
  return hist;
}

/// Count of subspaces with profile exactly mu, by full enumeration of the
/// subspaces of dimension mu_1.
inline long long profile_count_bruteforce(const Partition& mu,
                                          const FfMatrix& delta) {
  if (mu.size() > delta.rows())
    throw std::invalid_argument("profile_count_bruteforce: |mu| > n");
  long long count = 0;
  for_each_subspace(delta.rows(), mu.part(1), delta.modulus(),
                    [&](const FfMatrix& basis, const std::vector<int>&) {
                      if (profile(basis, delta) == mu) ++count;
                    });
  return count;
}

/// Histogram keyed by (pivot set, profile).
inline std::map<std::pair<std::vector<int>, Partition>, long long>
profile_histogram_by_pivot(const FfMatrix& delta) {
  std::map<std::pair<std::vector<int>, Partition>, long long> hist;
  int n = delta.rows();
  for (int m = 0; m <= n; ++m)
    for_each_subspace(n, m, delta.modulus(),
                      [&](const FfMatrix& basis, const std::vector<int>& pivots) {
                        ++hist[{pivots, profile(basis, delta)}];
                      });
  return hist;
}

}  // namespace qcomb
