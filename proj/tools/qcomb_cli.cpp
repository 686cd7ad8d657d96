// Command line frontend: every quantity the library computes, each by its
// independent routes, with machine-readable output and the verification
// suites. Exit status: 0 success and agreement, 1 disagreement or failed
// verification, 2 usage error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcomb/qcomb.hpp"

using nlohmann::json;
using namespace qcomb;

namespace {

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string token = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty())
      throw std::invalid_argument("empty entry in list '" + text + "'");
    out.push_back(std::stoi(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Partition parse_partition(const std::string& text, const std::string& flag) {
  try {
    return Partition(parse_list(text));
  } catch (const std::exception& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

Composition parse_composition(const std::string& text, const std::string& flag) {
  try {
    return Composition(parse_list(text));
  } catch (const std::exception& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

json poly_json(const QPoly& p) {
  json arr = json::array();
  for (const auto& s : p.coeff_strings()) arr.push_back(s);
  return arr;
}

struct Report {
  std::string quantity;
  json inputs = json::object();
  json value;              // coefficient array or decimal string
  std::string value_human;
  std::vector<std::string> methods;
  bool agreement = true;
  double elapsed_sec = 0;
};

void emit(const Report& r, bool as_json, bool timing) {
  if (as_json) {
    json j;
    j["quantity"] = r.quantity;
    j["inputs"] = r.inputs;
    j["value"] = r.value;
    j["value_human"] = r.value_human;
    j["methods"] = r.methods;
    j["agreement"] = r.agreement;
    if (timing) j["elapsed_ms"] = static_cast<long long>(r.elapsed_sec * 1e3);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "quantity:  " << r.quantity << "\n";
    std::cout << "inputs:   ";
    for (auto it = r.inputs.begin(); it != r.inputs.end(); ++it)
      std::cout << " " << it.key() << "=" << it.value().dump();
    std::cout << "\n";
    std::cout << "value:     " << r.value_human << "\n";
    std::cout << "methods:  ";
    for (const auto& m : r.methods) std::cout << " " << m;
    std::cout << "\n";
    std::cout << "agreement: " << (r.agreement ? "true" : "false") << "\n";
  }
  std::fprintf(stderr, "elapsed: %.3fs\n", r.elapsed_sec);
}

// Collects (method, polynomial) pairs and reduces them to a report.
struct PolyRuns {
  std::vector<std::pair<std::string, QPoly>> runs;

  void add(const std::string& method, QPoly value) {
    runs.emplace_back(method, std::move(value));
  }

  void fill(Report& r) const {
    for (const auto& [method, value] : runs) {
      r.methods.push_back(method);
      if (value != runs.front().second) r.agreement = false;
    }
    r.value = poly_json(runs.front().second);
    r.value_human = runs.front().second.to_string();
  }
};

int emit_suite(const SuiteResult& suite, bool as_json, bool timing,
               double elapsed_sec) {
  if (as_json) {
    json j;
    j["suite"] = suite.suite;
    json cases = json::array();
    for (const auto& c : suite.cases) {
      json jc;
      jc["key"] = c.key;
      jc["ok"] = c.ok;
      if (!c.ok) jc["detail"] = c.detail;
      cases.push_back(jc);
    }
    j["cases"] = cases;
    j["failures"] = suite.failure_count();
    if (timing) j["elapsed_ms"] = static_cast<long long>(elapsed_sec * 1e3);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : suite.cases) {
      std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << c.key;
      if (!c.ok) std::cout << "  " << c.detail;
      std::cout << "\n";
    }
    std::cout << suite.cases.size() - suite.failure_count() << "/"
              << suite.cases.size() << " cases passed\n";
  }
  std::fprintf(stderr, "elapsed: %.3fs\n", elapsed_sec);
  return suite.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-enumeration of subspace profiles and friends"};
  app.require_subcommand(1);
  bool as_json = false, timing = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_flag("--timing", timing, "include elapsed time in --json output");

  std::string mu_text, nu_text, rows_text, cols_text, board_text;
  std::string method = "all", stat_text = "inv", suite_name;
  std::string primes_text = "2,3";
  int m_arg = 0, n_arg = 0;
  int max_n = -1, max_m = -1, max_cells = -1;

  auto* bpoly_cmd = app.add_subcommand("bpoly", "b polynomial of (mu, nu)");
  bpoly_cmd->add_option("--mu", mu_text, "partition, comma separated")
      ->required();
  bpoly_cmd->add_option("--nu", nu_text, "content, comma separated")->required();
  bpoly_cmd->add_option("--method", method,
                        "tableaux|setpart|recursion|all");
  bpoly_cmd->add_option("--stat", stat_text, "inv|ninv|maj");

  auto* sigma_cmd = app.add_subcommand(
      "sigma", "subspace profile count for a diagonal type");
  sigma_cmd->add_option("--mu", mu_text, "profile partition")->required();
  sigma_cmd->add_option("--nu", nu_text, "diagonal type, |nu| = n")->required();
  sigma_cmd->add_option("--method", method, "formula|pivots|all");
  sigma_cmd->add_option("--primes", primes_text,
                        "cross-check against subspace enumeration at these primes");
  bool with_oracle = false;
  sigma_cmd->add_flag("--oracle", with_oracle,
                      "run the brute-force oracle at --primes");

  auto* whit_cmd =
      app.add_subcommand("whittaker", "monomial coefficient of W_mu at m_nu");
  whit_cmd->add_option("--mu", mu_text, "partition")->required();
  whit_cmd->add_option("--nu", nu_text, "partition")->required();
  whit_cmd->add_option("--method", method, "chains|from-b|all");

  auto* touchard_cmd =
      app.add_subcommand("touchard", "chord diagram crossing polynomial");
  touchard_cmd->add_option("--m", m_arg, "number of chords")->required();
  touchard_cmd->add_option("--method", method, "chords|whittaker|closed|all");

  auto* stirling_cmd =
      app.add_subcommand("stirling", "q-Stirling number for a type partition");
  stirling_cmd->add_option("--n", n_arg, "ground set size")->required();
  stirling_cmd->add_option("--m", m_arg, "number of blocks")->required();
  stirling_cmd->add_option("--nu", nu_text, "partition of n")->required();
  stirling_cmd->add_option("--method", method,
                           "definition|recursion|rook|setstat|all");
  stirling_cmd->add_option("--stat", stat_text, "inv|ninv|maj");

  auto* rook_cmd = app.add_subcommand("rook", "q-rook number of a Ferrers board");
  rook_cmd->add_option("--board", board_text,
                       "column heights, weakly increasing");
  rook_cmd->add_option("--nu", nu_text, "build the board of a type partition");
  rook_cmd->add_option("--m", m_arg, "number of rooks")->required();

  auto* binmat_cmd =
      app.add_subcommand("binmat", "0-1 matrices with given margins");
  binmat_cmd->add_option("--rows", rows_text, "row sums, a partition")
      ->required();
  binmat_cmd->add_option("--cols", cols_text, "column sums, a partition")
      ->required();
  binmat_cmd->add_option("--method", method, "formula|brute|all");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd
      ->add_option("--suite", suite_name,
                   "bpoly|profiles|stirling|touchard|rook|binmat")
      ->required();
  verify_cmd->add_option("--max-n", max_n, "size bound");
  verify_cmd->add_option("--max-m", max_m, "bound for touchard");
  verify_cmd->add_option("--max-cells", max_cells, "bound for rook boards");
  verify_cmd->add_option("--primes", primes_text, "primes for profiles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  auto elapsed = [&]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         started)
        .count();
  };

  try {
    if (*bpoly_cmd) {
      Partition mu = parse_partition(mu_text, "--mu");
      Composition nu = parse_composition(nu_text, "--nu");
      Stat stat = stat_from_name(stat_text);
      bool full = mu.size() == nu.total();
      PolyRuns runs;
      if (method == "tableaux" || method == "all")
        runs.add("tableaux", bpoly_via_tableaux(mu, nu));
      if ((method == "setpart" || method == "all") && (full || method == "setpart"))
        runs.add("setpart[" + stat_text + "]",
                 bpoly_via_set_partitions(mu, nu, stat));
      if ((method == "recursion" || method == "all") &&
          (full || method == "recursion"))
        runs.add("recursion", bpoly_via_strips(mu, sort_composition(nu)));
      if (runs.runs.empty()) throw std::invalid_argument("no such method");
      Report r;
      r.quantity = "bpoly";
      r.inputs["mu"] = mu.parts();
      r.inputs["nu"] = nu.parts();
      if (method == "all" || method == "setpart") r.inputs["stat"] = stat_text;
      runs.fill(r);
      r.elapsed_sec = elapsed();
      emit(r, as_json, timing);
      return r.agreement ? 0 : 1;
    }

    if (*sigma_cmd) {
      Partition mu = parse_partition(mu_text, "--mu");
      Partition nu = parse_partition(nu_text, "--nu");
      PolyRuns runs;
      if (method == "formula" || method == "all")
        runs.add("formula", profile_count_diagonal(mu, nu));
      if (method == "pivots" || method == "all") {
        QPoly sum;
        for (const auto& c : pivot_sets(nu.size(), mu.part(1)))
          sum += profile_count_by_pivot(mu, nu, c);
        runs.add("pivots", std::move(sum));
      }
      if (runs.runs.empty()) throw std::invalid_argument("no such method");
      Report r;
      r.quantity = "sigma";
      r.inputs["mu"] = mu.parts();
      r.inputs["nu"] = nu.parts();
      runs.fill(r);
      if (with_oracle) {
        for (int p : parse_list(primes_text)) {
          FfMatrix delta = diagonal_of_type(nu, p);
          BigInt counted = profile_count_bruteforce(mu, delta);
          r.methods.push_back("oracle[p=" + std::to_string(p) + "]");
          if (runs.runs.front().second.evaluate(p) != counted)
            r.agreement = false;
        }
      }
      r.elapsed_sec = elapsed();
      emit(r, as_json, timing);
      return r.agreement ? 0 : 1;
    }

    if (*whit_cmd) {
      Partition mu = parse_partition(mu_text, "--mu");
      Partition nu = parse_partition(nu_text, "--nu");
      PolyRuns runs;
      if (method == "chains" || method == "all")
        runs.add("chains", whittaker_coeff(mu, nu));
      if (method == "from-b" || method == "all") {
        QPoly num = bpoly_via_strips(mu, nu);
        for (int i = 1; i <= mu.length(); ++i)
          num *= q_factorial(mu.part(i) - mu.part(i + 1));
        QPoly den{1};
        for (int i = 1; i <= nu.length(); ++i) den *= q_factorial(nu.part(i));
        runs.add("from-b", exact_div(num, den));
      }
      if (runs.runs.empty()) throw std::invalid_argument("no such method");
      Report r;
      r.quantity = "whittaker";
      r.inputs["mu"] = mu.parts();
      r.inputs["nu"] = nu.parts();
      runs.fill(r);
      r.elapsed_sec = elapsed();
      emit(r, as_json, timing);
      return r.agreement ? 0 : 1;
    }

    if (*touchard_cmd) {
      PolyRuns runs;
      if (method == "chords" || method == "all")
        runs.add("chords", touchard_riordan(m_arg, TouchardMethod::chords));
      if (method == "whittaker" || method == "all")
        runs.add("whittaker",
                 touchard_riordan(m_arg, TouchardMethod::whittaker));
      if (method == "closed" || method == "all")
        runs.add("closed", touchard_riordan(m_arg, TouchardMethod::closed));
      if (runs.runs.empty()) throw std::invalid_argument("no such method");
      Report r;
      r.quantity = "touchard";
      r.inputs["m"] = m_arg;
      runs.fill(r);
      r.elapsed_sec = elapsed();
      emit(r, as_json, timing);
      return r.agreement ? 0 : 1;
    }

    if (*stirling_cmd) {
      Partition nu = parse_partition(nu_text, "--nu");
      Stat stat = stat_from_name(stat_text);
      PolyRuns runs;
      auto maybe = [&](const std::string& name, StirlingMethod sm) {
        if (method == name || method == "all")
          runs.add(name == "setstat" ? "setstat[" + stat_text + "]" : name,
                   stirling_q(n_arg, m_arg, nu, sm, stat));
      };
      maybe("definition", StirlingMethod::definition);
      maybe("recursion", StirlingMethod::recursion);
      maybe("rook", StirlingMethod::rook);
      maybe("setstat", StirlingMethod::setstat);
      if (runs.runs.empty()) throw std::invalid_argument("no such method");
      Report r;
      r.quantity = "stirling";
      r.inputs["n"] = n_arg;
      r.inputs["m"] = m_arg;
      r.inputs["nu"] = nu.parts();
      if (method == "all" || method == "setstat") r.inputs["stat"] = stat_text;
      runs.fill(r);
      r.elapsed_sec = elapsed();
      emit(r, as_json, timing);
      return r.agreement ? 0 : 1;
    }

    if (*rook_cmd) {
      if (board_text.empty() == nu_text.empty())
        throw std::invalid_argument("give exactly one of --board and --nu");
      FerrersBoard board =
          board_text.empty()
              ? board_of_type(parse_partition(nu_text, "--nu"))
              : FerrersBoard(parse_list(board_text));
      PolyRuns runs;
      runs.add("placements", rook_number(board, m_arg));
      if (board.column_count() > 0 &&
          board.height(1) == board.max_height())
        runs.add("rectangular",
                 rook_number_rectangular(board.max_height(),
                                         board.column_count(), m_arg));
      Report r;
      r.quantity = "rook";
      r.inputs["board"] = board.heights();
      r.inputs["m"] = m_arg;
      runs.fill(r);
      r.elapsed_sec = elapsed();
      emit(r, as_json, timing);
      return r.agreement ? 0 : 1;
    }

    if (*binmat_cmd) {
      Partition rows = parse_partition(rows_text, "--rows");
      Partition cols = parse_partition(cols_text, "--cols");
      std::vector<std::pair<std::string, BigInt>> runs;
      if (method == "formula" || method == "all")
        runs.emplace_back("formula", binary_matrix_count(rows, cols));
      if (method == "brute" || method == "all")
        runs.emplace_back("brute", binary_matrix_bruteforce(rows, cols));
      if (runs.empty()) throw std::invalid_argument("no such method");
      Report r;
      r.quantity = "binmat";
      r.inputs["rows"] = rows.parts();
      r.inputs["cols"] = cols.parts();
      for (const auto& [name, value] : runs) {
        r.methods.push_back(name);
        if (value != runs.front().second) r.agreement = false;
      }
      r.value = runs.front().second.str();
      r.value_human = runs.front().second.str();
      r.elapsed_sec = elapsed();
      emit(r, as_json, timing);
      return r.agreement ? 0 : 1;
    }

    if (*verify_cmd) {
      SuiteResult suite;
      if (suite_name == "bpoly") {
        suite = verify_bpoly(max_n < 0 ? 5 : max_n);
      } else if (suite_name == "profiles") {
        suite = verify_profiles(max_n < 0 ? 4 : max_n, parse_list(primes_text));
      } else if (suite_name == "stirling") {
        suite = verify_stirling(max_n < 0 ? 6 : max_n);
      } else if (suite_name == "touchard") {
        suite = verify_touchard(max_m < 0 ? 5 : max_m);
      } else if (suite_name == "rook") {
        suite = verify_rook(max_cells < 0 ? 12 : max_cells);
      } else if (suite_name == "binmat") {
        suite = verify_binmat(max_n < 0 ? 5 : max_n);
      } else {
        throw std::invalid_argument("unknown suite '" + suite_name + "'");
      }
      return emit_suite(suite, as_json, timing, elapsed());
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
