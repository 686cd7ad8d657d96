#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qcomb/bpoly.hpp"
#include "qcomb/ffmatrix.hpp"
#include "qcomb/partition.hpp"
#include "qcomb/profiles.hpp"
#include "qcomb/qpoly.hpp"
#include "qcomb/stirling_rook.hpp"
#include "qcomb/tableau.hpp"

namespace qcomb {

struct CaseResult {
  std::string key;
  bool ok = true;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;

  bool all_ok() const {
    for (const auto& c : cases)
      if (!c.ok) return false;
    return true;
  }

  int failure_count() const {
    int f = 0;
    for (const auto& c : cases)
      if (!c.ok) ++f;
    return f;
  }
};

/// Route equality for the b polynomials: tableau sum, set partition
/// statistics for inv/ninv/maj, and the strip recursion agree for every
/// pair of partitions of each n <= max_n; coefficients are nonnegative.
inline SuiteResult verify_bpoly(int max_n) {
  SuiteResult suite{"bpoly", {}};
  for (int n = 0; n <= max_n; ++n) {
    auto parts = partitions_of(n);
    for (const auto& mu : parts) {
      for (const auto& nu : parts) {
        CaseResult c;
        std::ostringstream key;
        key << "n=" << n << " mu=(" << mu.to_string() << ") nu=("
            << nu.to_string() << ")";
        c.key = key.str();
        QPoly tab = bpoly_via_tableaux(mu, nu);
        QPoly rec = bpoly_via_strips(mu, nu);
        if (tab != rec) {
          c.ok = false;
          c.detail = "tableau sum != strip recursion";
        }
        for (Stat s : {Stat::inv, Stat::ninv, Stat::maj}) {
          if (bpoly_via_set_partitions(mu, nu, s) != tab) {
            c.ok = false;
            c.detail = "set partition statistic " + stat_name(s) +
                       " disagrees with tableau sum";
          }
        }
        if (!tab.has_nonnegative_coeffs()) {
          c.ok = false;
          c.detail = "negative coefficient";
        }
        suite.cases.push_back(std::move(c));
      }
    }
  }
  return suite;
}

/// Finite-field oracle for one (n, p): for every diagonal type nu of n with
/// at most p distinct entries, the profile histogram from full subspace
/// enumeration matches the closed form at q = p for every profile of size
/// at most n, and the total count matches the Galois number.
inline std::vector<CaseResult> verify_profiles_oracle(int n, int p) {
  std::vector<CaseResult> cases;
  std::vector<Partition> all_mu;
  for (int k = 0; k <= n; ++k)
    for (const auto& mu : partitions_of(k)) all_mu.push_back(mu);
  for (const auto& nu : partitions_of(n)) {
    if (nu.length() > p) continue;
    CaseResult c;
    std::ostringstream key;
    key << "p=" << p << " n=" << n << " nu=(" << nu.to_string() << ")";
    c.key = key.str();
    FfMatrix delta = diagonal_of_type(nu, p);
    auto hist = profile_histogram(delta);
    BigInt formula_total{0};
    for (const auto& mu : all_mu) {
      BigInt expect = profile_count_diagonal(mu, nu).evaluate(p);
      formula_total += expect;
      auto it = hist.find(mu);
      BigInt got = it == hist.end() ? 0 : BigInt(it->second);
      if (expect != got) {
        c.ok = false;
        c.detail = "mu=(" + mu.to_string() + "): formula " + expect.str() +
                   " vs enumeration " + got.str();
        break;
      }
    }
    BigInt galois{0};
    for (int m = 0; m <= n; ++m) galois += q_binomial(n, m).evaluate(p);
    if (c.ok && formula_total != galois) {
      c.ok = false;
      c.detail = "profile counts sum to " + formula_total.str() +
                 ", expected " + galois.str();
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

/// Pivot law for one (n, p): the number of m-dimensional subspaces with
/// pivot set C equals p^(inversions of the indicator word of C), for all m.
inline std::vector<CaseResult> verify_knuth_pivots(int n, int p) {
  std::vector<CaseResult> cases;
  CaseResult c;
  std::ostringstream key;
  key << "p=" << p << " n=" << n;
  c.key = key.str();
  for (int m = 0; m <= n && c.ok; ++m) {
    std::map<std::vector<int>, long long> counts;
    for_each_subspace(n, m, p,
                      [&](const FfMatrix&, const std::vector<int>& pivots) {
                        ++counts[pivots];
                      });
    for (const auto& pivots : pivot_sets(n, m)) {
      int e = inv(pivot_indicator_word(pivots, n));
      long long expect = 1;
      for (int i = 0; i < e; ++i) expect *= p;
      auto it = counts.find(pivots);
      long long got = it == counts.end() ? 0 : it->second;
      if (expect != got) {
        c.ok = false;
        std::ostringstream d;
        d << "m=" << m << " C=(";
        for (std::size_t i = 0; i < pivots.size(); ++i)
          d << (i ? "," : "") << pivots[i];
        d << "): expected " << expect << ", counted " << got;
        c.detail = d.str();
        break;
      }
    }
  }
  cases.push_back(std::move(c));
  return cases;
}

/// Companion-matrix and Jordan-block oracles for one (n, p): the closed
/// forms for irreducible and regular nilpotent operators match the profile
/// histograms for every mu with |mu| <= n.
inline std::vector<CaseResult> verify_special_operators(int n, int p) {
  std::vector<CaseResult> cases;
  std::vector<Partition> all_mu;
  for (int k = 0; k <= n; ++k)
    for (const auto& mu : partitions_of(k)) all_mu.push_back(mu);

  auto check = [&](const std::string& label, const FfMatrix& delta,
                   auto&& formula) {
    CaseResult c;
    std::ostringstream key;
    key << "p=" << p << " n=" << n << " " << label;
    c.key = key.str();
    auto hist = profile_histogram(delta);
    for (const auto& mu : all_mu) {
      BigInt expect = formula(mu).evaluate(p);
      auto it = hist.find(mu);
      BigInt got = it == hist.end() ? 0 : BigInt(it->second);
      if (expect != got) {
        c.ok = false;
        c.detail = "mu=(" + mu.to_string() + "): formula " + expect.str() +
                   " vs enumeration " + got.str();
        break;
      }
    }
    cases.push_back(std::move(c));
  };

  check("irreducible", companion_matrix(smallest_irreducible(n, p), p),
        [&](const Partition& mu) { return profile_count_irreducible(mu, n); });
  check("nilpotent", nilpotent_jordan_block(n, p),
        [&](const Partition& mu) { return profile_count_regular_nilpotent(mu); });
  return cases;
}

/// Whittaker conversion for every pair of partitions of n <= max_n:
/// b * prod [mu_i - mu_{i+1}]_q! == a * prod [nu_i]_q!, and the q = 0
/// specialization of a is the Kostka number.
inline SuiteResult verify_whittaker(int max_n) {
  SuiteResult suite{"whittaker", {}};
  for (int n = 0; n <= max_n; ++n) {
    auto parts = partitions_of(n);
    for (const auto& mu : parts) {
      for (const auto& nu : parts) {
        CaseResult c;
        std::ostringstream key;
        key << "n=" << n << " mu=(" << mu.to_string() << ") nu=("
            << nu.to_string() << ")";
        c.key = key.str();
        QPoly a = whittaker_coeff(mu, nu);
        QPoly b = bpoly_via_strips(mu, nu);
        QPoly lhs = b, rhs = a;
        for (int i = 1; i <= mu.length(); ++i)
          lhs *= q_factorial(mu.part(i) - mu.part(i + 1));
        for (int i = 1; i <= nu.length(); ++i) rhs *= q_factorial(nu.part(i));
        if (lhs != rhs) {
          c.ok = false;
          c.detail = "conversion identity fails";
        }
        if (a.coeff(0) != kostka(mu, nu)) {
          c.ok = false;
          c.detail = "a(0) != Kostka number";
        }
        if (bpoly_from_whittaker(mu, nu) != b) {
          c.ok = false;
          c.detail = "converted b differs from strip recursion";
        }
        suite.cases.push_back(std::move(c));
      }
    }
  }
  return suite;
}

/// The three Touchard-Riordan routes agree for m <= max_m, and the value at
/// q = 1 is the double factorial (2m-1)!!.
inline SuiteResult verify_touchard(int max_m) {
  SuiteResult suite{"touchard", {}};
  for (int m = 1; m <= max_m; ++m) {
    CaseResult c;
    c.key = "m=" + std::to_string(m);
    QPoly chords = touchard_riordan(m, TouchardMethod::chords);
    QPoly whit = touchard_riordan(m, TouchardMethod::whittaker);
    QPoly closed = touchard_riordan(m, TouchardMethod::closed);
    if (!(chords == whit && whit == closed)) {
      c.ok = false;
      c.detail = "routes disagree";
    }
    BigInt dfact{1};
    for (int i = 3; i <= 2 * m - 1; i += 2) dfact *= i;
    if (chords.at_one() != dfact) {
      c.ok = false;
      c.detail = "value at q=1 is not (2m-1)!!";
    }
    suite.cases.push_back(std::move(c));
  }
  return suite;
}

/// Four-route equality for the q-Stirling numbers for every nu of n <= max_n
/// and every m, the Carlitz recursion cross-check at nu = (1^n), and the
/// q = 1 specialization against the counting recursion.
inline SuiteResult verify_stirling(int max_n, Stat stat = Stat::inv) {
  SuiteResult suite{"stirling", {}};
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& nu : partitions_of(n)) {
      CaseResult c;
      std::ostringstream key;
      key << "n=" << n << " nu=(" << nu.to_string() << ")";
      c.key = key.str();
      bool ones = nu == Partition(std::vector<int>(
                            static_cast<std::size_t>(n), 1));
      for (int m = 0; m <= n && c.ok; ++m) {
        QPoly def = stirling_q(n, m, nu, StirlingMethod::definition);
        for (auto method : {StirlingMethod::recursion, StirlingMethod::rook,
                            StirlingMethod::setstat}) {
          QPoly other = stirling_q(n, m, nu, method, stat);
          if (other != def) {
            c.ok = false;
            c.detail = "m=" + std::to_string(m) + ": route disagreement";
            break;
          }
        }
        if (c.ok && ones && carlitz_stirling(n, m) != def) {
          c.ok = false;
          c.detail = "m=" + std::to_string(m) + ": Carlitz recursion differs";
        }
        if (c.ok && def.at_one() != stirling_count(n, m, nu)) {
          c.ok = false;
          c.detail = "m=" + std::to_string(m) + ": q=1 value differs";
        }
        if (c.ok && !def.has_nonnegative_coeffs()) {
          c.ok = false;
          c.detail = "m=" + std::to_string(m) + ": negative coefficient";
        }
      }
      suite.cases.push_back(std::move(c));
    }
  }
  return suite;
}

/// Rook lemmas against brute-force placement sums on every Ferrers board
/// with at most max_cells cells: the rectangular closed form, and the
/// convolution identity across every split of the board into a prefix plus
/// a trailing rectangle.
inline SuiteResult verify_rook(int max_cells) {
  SuiteResult suite{"rook", {}};
  std::vector<FerrersBoard> boards;
  boards.emplace_back(std::vector<int>{});
  for (int k = 1; k <= max_cells; ++k)
    for (const auto& lambda : partitions_of(k)) {
      std::vector<int> heights(lambda.parts().rbegin(), lambda.parts().rend());
      boards.emplace_back(std::move(heights));
    }
  for (const auto& board : boards) {
    CaseResult c;
    c.key = "board=(" + board.to_string() + ")";
    int cols = board.column_count();
    int maxr = std::min(cols, board.max_height());
    std::vector<QPoly> brute(static_cast<std::size_t>(maxr) + 1);
    for (int m = 0; m <= maxr; ++m) brute[static_cast<std::size_t>(m)] =
        rook_number(board, m);

    bool rectangular = cols > 0 && board.height(1) == board.max_height();
    if (rectangular) {
      int a = board.max_height(), b = cols;
      for (int m = 0; m <= maxr && c.ok; ++m) {
        if (rook_number_rectangular(a, b, m) !=
            brute[static_cast<std::size_t>(m)]) {
          c.ok = false;
          c.detail = "rectangular closed form fails at m=" + std::to_string(m);
        }
      }
    }

    // Convolution: split the board before any maximal trailing run of equal
    // column heights.
    for (int s = 0; s < cols && c.ok; ++s) {
      int a = board.height(s + 1);
      bool constant_tail = true;
      for (int i = s + 1; i <= cols; ++i)
        if (board.height(i) != a) {
          constant_tail = false;
          break;
        }
      if (!constant_tail) continue;
      int b = cols - s;
      std::vector<int> prefix_heights;
      for (int i = 1; i <= s; ++i) prefix_heights.push_back(board.height(i));
      FerrersBoard prefix(std::move(prefix_heights));
      int prefix_maxr = std::min(prefix.column_count(), prefix.max_height());
      std::vector<QPoly> prefix_rooks(static_cast<std::size_t>(prefix_maxr) + 1);
      for (int j = 0; j <= prefix_maxr; ++j)
        prefix_rooks[static_cast<std::size_t>(j)] = rook_number(prefix, j);
      for (int m = 0; m <= maxr && c.ok; ++m) {
        if (m > a) continue;  // identity stated for m within the tail height
        QPoly conv;
        for (int j = 0; j <= std::min(m, prefix_maxr); ++j) {
          if (m - j > b) continue;
          QPoly term =
              prefix_rooks[static_cast<std::size_t>(j)] * q_binomial(b, m - j);
          for (int i = a - m + 1; i <= a - j; ++i) term *= q_int(i);
          conv += term.shifted(
              static_cast<std::size_t>((a - m) * (b - m + j)));
        }
        if (conv != brute[static_cast<std::size_t>(m)]) {
          c.ok = false;
          c.detail = "convolution fails at split=" + std::to_string(s) +
                     " m=" + std::to_string(m);
        }
      }
    }
    suite.cases.push_back(std::move(c));
  }
  return suite;
}

/// Binary matrix counts: the b polynomial formula against direct 0-1 matrix
/// enumeration for all margin pairs of n <= max_n.
inline SuiteResult verify_binmat(int max_n) {
  SuiteResult suite{"binmat", {}};
  for (int n = 0; n <= max_n; ++n) {
    auto parts = partitions_of(n);
    for (const auto& lambda : parts) {
      for (const auto& nu : parts) {
        CaseResult c;
        std::ostringstream key;
        key << "n=" << n << " rows=(" << lambda.to_string() << ") cols=("
            << nu.to_string() << ")";
        c.key = key.str();
        BigInt formula = binary_matrix_count(lambda, nu);
        BigInt brute = binary_matrix_bruteforce(lambda, nu);
        if (formula != brute) {
          c.ok = false;
          c.detail = "formula " + formula.str() + " vs enumeration " +
                     brute.str();
        }
        suite.cases.push_back(std::move(c));
      }
    }
  }
  return suite;
}

/// The finite-field suite bundles the diagonal oracle, the pivot law, and
/// the special-operator oracles at matched sizes.
inline SuiteResult verify_profiles(int max_n, const std::vector<int>& primes) {
  SuiteResult suite{"profiles", {}};
  for (int p : primes) {
    for (int n = 0; n <= max_n; ++n) {
      for (auto& c : verify_profiles_oracle(n, p))
        suite.cases.push_back(std::move(c));
      for (auto& c : verify_knuth_pivots(n, p))
        suite.cases.push_back(std::move(c));
      if (n >= 1)
        for (auto& c : verify_special_operators(n, p))
          suite.cases.push_back(std::move(c));
    }
  }
  return suite;
}

}  // namespace qcomb
