#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcomb/qpoly.hpp"

namespace qcomb {

/// Integer partition: weakly decreasing positive parts, trailing zeros
/// stripped. The empty partition is valid. Value-compared after
/// normalization, so (3,1,1,0) == (3,1,1).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw std::invalid_argument("Partition: parts must weakly decrease");
    }
  }
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Sum of the parts.
  int size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  /// i-th part, 1-based; zero beyond the length.
  int part(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)]
                                   : 0;
  }

  Partition conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
  }

  /// Whether the diagram of other fits inside this one.
  bool contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
      if (other.part(i) > part(i)) return false;
    return true;
  }

  /// Partition with the last (smallest) part removed.
  Partition drop_last() const {
    if (parts_.empty())
      throw std::invalid_argument("Partition: drop_last of empty partition");
    std::vector<int> v(parts_.begin(), parts_.end() - 1);
    return Partition(std::move(v));
  }

  bool operator==(const Partition& other) const = default;
  auto operator<=>(const Partition& other) const = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out;
  }

 private:
  std::vector<int> parts_;
};

/// Weak composition: arbitrary sequence of nonnegative integers. Zero parts
/// are first-class (they produce empty segments and no blocks downstream).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0) throw std::invalid_argument("Composition: negative part");
  }
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}
  Composition(const Partition& p) : parts_(p.parts()) {}  // NOLINT(implicit)

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)]
                                   : 0;
  }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  bool operator==(const Composition& other) const = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out;
  }

 private:
  std::vector<int> parts_;
};

inline Partition sort_composition(const Composition& alpha) {
  std::vector<int> v;
  for (int p : alpha.parts())
    if (p > 0) v.push_back(p);
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Partition(std::move(v));
}

/// Dominance order on partitions of the same integer: mu >= lam iff all
/// prefix sums of mu weakly dominate those of lam.
inline bool dominates(const Partition& mu, const Partition& lam) {
  if (mu.size() != lam.size())
    throw std::invalid_argument("dominates: partitions of different sizes");
  int a = 0, b = 0;
  int len = std::max(mu.length(), lam.length());
  for (int i = 1; i <= len; ++i) {
    a += mu.part(i);
    b += lam.part(i);
    if (a < b) return false;
  }
  return true;
}

/// All partitions of n, largest-part-first lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int max_part) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// All compositions of n into positive parts.
inline std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      self(self, rem - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

/// Whether mu/rho is a horizontal strip: rho fits inside mu with at most one
/// cell removed per column, i.e. mu_i >= rho_i >= mu_{i+1} for all i.
inline bool is_horizontal_strip(const Partition& mu, const Partition& rho) {
  int len = std::max(mu.length(), rho.length());
  for (int i = 1; i <= len; ++i)
    if (!(mu.part(i) >= rho.part(i) && rho.part(i) >= mu.part(i + 1)))
      return false;
  return true;
}

/// All rho with |mu| - |rho| = k such that mu/rho is a horizontal strip.
inline std::vector<Partition> horizontal_strips(const Partition& mu, int k) {
  if (k < 0 || k > mu.size())
    throw std::invalid_argument("horizontal_strips: strip size out of range");
  std::vector<Partition> out;
  std::vector<int> cur;
  int len = mu.length();
  auto rec = [&](auto&& self, int row, int rem) -> void {
    if (row > len) {
      if (rem == 0) out.emplace_back(cur);
      return;
    }
    int lo = std::max(mu.part(row + 1), mu.part(row) - rem);
    for (int v = mu.part(row); v >= lo; --v) {
      cur.push_back(v);
      self(self, row + 1, rem - (mu.part(row) - v));
      cur.pop_back();
    }
  };
  rec(rec, 1, k);
  return out;
}

// ---------------------------------------------------------------------------
// Words and Mahonian statistics
// ---------------------------------------------------------------------------

/// A word is a sequence of positive integer letters.
using Word = std::vector<int>;

enum class Stat { inv, ninv, maj };

inline Stat stat_from_name(const std::string& name) {
  if (name == "inv") return Stat::inv;
  if (name == "ninv") return Stat::ninv;
  if (name == "maj") return Stat::maj;
  throw std::invalid_argument("unknown statistic: " + name);
}

inline std::string stat_name(Stat s) {
  switch (s) {
    case Stat::inv: return "inv";
    case Stat::ninv: return "ninv";
    case Stat::maj: return "maj";
  }
  return "?";
}

/// Number of pairs i < j with w_i > w_j.
inline int inv(std::span<const int> w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

/// Number of pairs i < j with w_i < w_j.
inline int ninv(std::span<const int> w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] < w[j]) ++c;
  return c;
}

/// Major index: sum of descent positions (1-based).
inline int maj(std::span<const int> w) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) c += static_cast<int>(i) + 1;
  return c;
}

inline int word_stat(Stat s, std::span<const int> w) {
  switch (s) {
    case Stat::inv: return inv(w);
    case Stat::ninv: return ninv(w);
    case Stat::maj: return maj(w);
  }
  throw std::invalid_argument("word_stat: bad statistic");
}

/// Cuts w into consecutive segments of lengths alpha_1, alpha_2, ... and
/// sums the statistic over the segments. Zero-length segments contribute 0.
/// The segment lengths must account for the whole word.
inline int segmented_stat(Stat s, const Composition& alpha,
                          std::span<const int> w) {
  if (alpha.total() != static_cast<int>(w.size()))
    throw std::invalid_argument("segmented_stat: lengths do not match");
  int acc = 0;
  std::size_t pos = 0;
  for (int len : alpha.parts()) {
    acc += word_stat(s, w.subspan(pos, static_cast<std::size_t>(len)));
    pos += static_cast<std::size_t>(len);
  }
  return acc;
}

/// All rearrangements of the word 1^{beta_1} 2^{beta_2} ... r^{beta_r}, in
/// lexicographic order.
inline std::vector<Word> multiset_permutations(const Composition& beta) {
  Word base;
  for (int i = 1; i <= beta.length(); ++i)
    for (int c = 0; c < beta.part(i); ++c) base.push_back(i);
  std::vector<Word> out;
  if (base.empty()) {
    out.push_back({});
    return out;
  }
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

/// Least index i such that x lies within the first i blocks of sizes
/// alpha_1, alpha_2, ...; i.e. x <= alpha_1 + ... + alpha_i. 1 <= x <= |alpha|.
inline int block_index(const Composition& alpha, int x) {
  if (x < 1 || x > alpha.total())
    throw std::invalid_argument("block_index: element out of range");
  int prefix = 0;
  for (int i = 1; i <= alpha.length(); ++i) {
    prefix += alpha.part(i);
    if (x <= prefix) return i;
  }
  throw std::logic_error("block_index: unreachable");
}

// Plain integer helpers used by the q = 1 specializations.

inline BigInt factorial(int n) {
  BigInt acc{1};
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt acc{1};
  for (int i = 0; i < k; ++i) {
    acc *= n - i;
    acc /= i + 1;
  }
  return acc;
}

}  // namespace qcomb
