// Acceptance suite: runs every headline check at full size and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qcomb/qcomb.hpp"

using namespace qcomb;

namespace {

struct Criterion {
  std::string name;
  double time_limit_sec;  // 0 = no limit
  std::function<bool(std::string&)> run;
};

bool suite_ok(const SuiteResult& suite, std::string& detail) {
  for (const auto& c : suite.cases)
    if (!c.ok) {
      detail = suite.suite + " " + c.key + ": " + c.detail;
      return false;
    }
  return true;
}

bool cases_ok(const std::vector<CaseResult>& cases, std::string& detail) {
  for (const auto& c : cases)
    if (!c.ok) {
      detail = c.key + ": " + c.detail;
      return false;
    }
  return true;
}

const QPoly kWorked(std::vector<BigInt>{1, 2, 3, 2, 1});

Partition ones_partition(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back(
      {"b_{(5,1),(3,3)} equals q^4+2q^3+3q^2+2q+1 by all three routes", 1.0,
       [](std::string& detail) {
         Partition mu({5, 1}), nu({3, 3});
         if (bpoly_via_tableaux(mu, nu) != kWorked) {
           detail = "tableau route";
           return false;
         }
         if (bpoly_via_strips(mu, nu) != kWorked) {
           detail = "strip recursion";
           return false;
         }
         for (Stat s : {Stat::inv, Stat::ninv, Stat::maj})
           if (bpoly_via_set_partitions(mu, nu, s) != kWorked) {
             detail = "set partition route, " + stat_name(s);
             return false;
           }
         return true;
       }});

  criteria.push_back({"route triple-equality of b for all pairs of partitions of n <= 6",
                      60.0, [](std::string& detail) {
                        return suite_ok(verify_bpoly(6), detail);
                      }});

  criteria.push_back(
      {"finite-field oracle for diagonal types, p in {2,3,5}, n <= 5, plus p=2 n=6",
       600.0, [](std::string& detail) {
         for (int p : {2, 3, 5})
           for (int n = 0; n <= 5; ++n)
             if (!cases_ok(verify_profiles_oracle(n, p), detail)) return false;
         return cases_ok(verify_profiles_oracle(6, 2), detail);
       }});

  criteria.push_back(
      {"pivot law: per-pivot subspace counts are p^inv for n <= 6, p in {2,3}",
       0.0, [](std::string& detail) {
         for (int p : {2, 3})
           for (int n = 0; n <= 6; ++n)
             if (!cases_ok(verify_knuth_pivots(n, p), detail)) return false;
         return true;
       }});

  criteria.push_back(
      {"eta example: (q^2-1)(q^2-q)(q^3-q^2)(q^5-q^3) at n=12, alpha=(2,3,2,2,3)",
       0.0, [](std::string& detail) {
         auto mono = [](int e) {
           return QPoly::monomial(1, static_cast<std::size_t>(e));
         };
         QPoly expect = (mono(2) - mono(0)) * (mono(2) - mono(1)) *
                        (mono(3) - mono(2)) * (mono(5) - mono(3));
         QPoly got = eta_factor(Composition({2, 3, 2, 2, 3}),
                                {1, 2, 4, 7, 8}, {1, 2, 3, 5});
         if (got != expect) {
           detail = "got " + got.to_string();
           return false;
         }
         return true;
       }});

  criteria.push_back(
      {"irreducible and nilpotent closed forms match the matrix oracles, n <= 4, p in {2,3}",
       0.0, [](std::string& detail) {
         for (int p : {2, 3})
           for (int n = 1; n <= 4; ++n)
             if (!cases_ok(verify_special_operators(n, p), detail))
               return false;
         return true;
       }});

  criteria.push_back(
      {"Touchard-Riordan: chords = whittaker = closed for m <= 6, T_2 = 2+q, T_m(1) = (2m-1)!!",
       30.0, [](std::string& detail) {
         if (touchard_riordan(2, TouchardMethod::closed) !=
             QPoly(std::vector<BigInt>{2, 1})) {
           detail = "T_2";
           return false;
         }
         return suite_ok(verify_touchard(6), detail);
       }});

  criteria.push_back(
      {"Whittaker conversion identity and a(0) = Kostka for n <= 6", 0.0,
       [](std::string& detail) {
         return suite_ok(verify_whittaker(6), detail);
       }});

  criteria.push_back(
      {"q-Stirling four-route equality for n <= 8, all nu, all m, with the Carlitz case",
       120.0, [](std::string& detail) {
         return suite_ok(verify_stirling(8), detail);
       }});

  criteria.push_back({"rook lemmas vs brute-force placements on all boards with <= 20 cells",
                      0.0, [](std::string& detail) {
                        return suite_ok(verify_rook(20), detail);
                      }});

  criteria.push_back(
      {"rho = 3 for the placement of 14|235 on B_5; the nine statistic pairs of the table",
       0.0, [](std::string& detail) {
         RookPlacement p =
             placement_of_partition(SetPartition::parse("14|235"));
         if (uncancelled_cells(p, FerrersBoard::staircase(5)) != 3) {
           detail = "rho";
           return false;
         }
         const std::vector<std::tuple<std::string, int, int>> table = {
             {"14|2|3|5|6", 2, 2}, {"15|2|3|4|6", 2, 1}, {"16|2|3|4|5", 2, 0},
             {"1|24|3|5|6", 1, 2}, {"1|25|3|4|6", 1, 1}, {"1|26|3|4|5", 1, 0},
             {"1|2|34|5|6", 0, 2}, {"1|2|35|4|6", 0, 1}, {"1|2|36|4|5", 0, 0}};
         Composition alpha({3, 3});
         auto pi = set_partitions(6, Partition({2, 1, 1, 1, 1}), alpha);
         if (pi.size() != table.size()) {
           detail = "class size";
           return false;
         }
         for (const auto& [text, ia, phi] : table) {
           SetPartition sp = SetPartition::parse(text);
           if (interlacing_count(sp, alpha) != ia ||
               partition_stat(Stat::inv, alpha, sp) != phi) {
             detail = text;
             return false;
           }
         }
         return true;
       }});

  criteria.push_back(
      {"binary matrix formula vs enumeration for all margins of n <= 6", 0.0,
       [](std::string& detail) {
         return suite_ok(verify_binmat(6), detail);
       }});

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double sec = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    if (ok && c.time_limit_sec > 0 && sec > c.time_limit_sec) {
      ok = false;
      detail = "exceeded time limit of " + std::to_string(c.time_limit_sec) +
               " s";
    }
    std::printf("[%s] criterion %02zu: %s (%.2fs)\n", ok ? "PASS" : "FAIL",
                i + 1, c.name.c_str(), sec);
    if (!ok) {
      std::printf("       %s\n", detail.c_str());
      ++failures;
    }
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
