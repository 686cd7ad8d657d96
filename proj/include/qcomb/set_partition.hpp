#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcomb/partition.hpp"

namespace qcomb {

/// Set partition of [n] in standard form: each block lists its elements in
/// increasing order and blocks are ordered by their least elements.
class SetPartition {
 public:
  SetPartition() = default;

  /// Accepts blocks in any order; normalizes to standard form and checks
  /// that the blocks partition [n].
  SetPartition(int n, std::vector<std::vector<int>> blocks)
      : n_(n), blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
      if (b.empty())
        throw std::invalid_argument("SetPartition: empty block");
      std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int count = 0;
    for (const auto& b : blocks_)
      for (int x : b) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
          throw std::invalid_argument(
              "SetPartition: blocks do not partition the ground set");
        seen[static_cast<std::size_t>(x)] = true;
        ++count;
      }
    if (count != n)
      throw std::invalid_argument(
          "SetPartition: blocks do not cover the ground set");
  }

  int ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// Block sizes in weakly decreasing order.
  Partition shape() const {
    std::vector<int> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return Partition(std::move(sizes));
  }

  /// Word whose i-th letter is the rank of i within its block (1 for block
  /// minima, 2 for second-smallest elements, and so on).
  Word rank_word() const {
    Word w(static_cast<std::size_t>(n_), 0);
    for (const auto& b : blocks_)
      for (std::size_t r = 0; r < b.size(); ++r)
        w[static_cast<std::size_t>(b[r] - 1)] = static_cast<int>(r) + 1;
    return w;
  }

  /// True iff every block of this partition meets every block of other in
  /// at most one element.
  bool minimally_intersects(const SetPartition& other) const {
    if (n_ != other.n_)
      throw std::invalid_argument(
          "minimally_intersects: different ground sets");
    std::vector<int> owner(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t k = 0; k < other.blocks_.size(); ++k)
      for (int x : other.blocks_[k])
        owner[static_cast<std::size_t>(x)] = static_cast<int>(k);
    for (const auto& b : blocks_) {
      std::vector<bool> hit(other.blocks_.size(), false);
      for (int x : b) {
        auto k = static_cast<std::size_t>(owner[static_cast<std::size_t>(x)]);
        if (hit[k]) return false;
        hit[k] = true;
      }
    }
    return true;
  }

  bool operator==(const SetPartition& other) const = default;

  /// Text form "127|34|56".
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (k) out += "|";
      for (int x : blocks_[k]) out += std::to_string(x);
    }
    return out;
  }

  /// Parses the single-digit text form, validating standard form and
  /// reporting the first violation. Ground-set elements must be 1..9.
  static SetPartition parse(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur;
    int n = 0;
    auto flush = [&]() {
      if (cur.empty())
        throw std::invalid_argument("SetPartition::parse: empty block");
      blocks.push_back(cur);
      cur.clear();
    };
    for (char c : text) {
      if (c == '|') {
        flush();
      } else if (c >= '1' && c <= '9') {
        int x = c - '0';
        if (!cur.empty() && cur.back() >= x)
          throw std::invalid_argument(
              "SetPartition::parse: block elements must increase");
        cur.push_back(x);
        n = std::max(n, x);
      } else {
        throw std::invalid_argument(
            std::string("SetPartition::parse: bad character '") + c + "'");
      }
    }
    flush();
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k)
      if (blocks[k].front() >= blocks[k + 1].front())
        throw std::invalid_argument(
            "SetPartition::parse: blocks must be ordered by least element");
    return SetPartition(n, std::move(blocks));
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Canonical set partition of [|alpha|] with consecutive blocks of sizes
/// alpha_1, alpha_2, ...; zero parts contribute no block.
inline SetPartition canonical_set_partition(const Composition& alpha) {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (int len : alpha.parts()) {
    if (len == 0) continue;
    std::vector<int> b(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) b[static_cast<std::size_t>(j)] = next++;
    blocks.push_back(std::move(b));
  }
  return SetPartition(alpha.total(), std::move(blocks));
}

/// All set partitions of [n] via restricted growth strings, so the order is
/// deterministic and blocks come out in standard form.
inline std::vector<SetPartition> set_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, int x) -> void {
    if (x > n) {
      out.emplace_back(n, blocks);
      return;
    }
    // index-based: the recursion grows and shrinks the block list
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      blocks[k].push_back(x);
      self(self, x + 1);
      blocks[k].pop_back();
    }
    blocks.push_back({x});
    self(self, x + 1);
    blocks.pop_back();
  };
  if (n == 0) {
    out.emplace_back(0, std::vector<std::vector<int>>{});
    return out;
  }
  rec(rec, 1);
  return out;
}

/// Set partitions of [n] of the given shape.
inline std::vector<SetPartition> set_partitions(int n, const Partition& shape) {
  std::vector<SetPartition> out;
  for (auto& sp : set_partitions(n))
    if (sp.shape() == shape) out.push_back(std::move(sp));
  return out;
}

/// Set partitions of shape lambda that minimally intersect the canonical
/// partition of alpha.
inline std::vector<SetPartition> set_partitions(int n, const Partition& shape,
                                                const Composition& alpha) {
  if (alpha.total() != n)
    throw std::invalid_argument("set_partitions: |alpha| != n");
  SetPartition canon = canonical_set_partition(alpha);
  std::vector<SetPartition> out;
  for (auto& sp : set_partitions(n, shape))
    if (sp.minimally_intersects(canon)) out.push_back(std::move(sp));
  return out;
}

/// Arc of the extended chord diagram: the j-th arc of a block joins its
/// j-th and (j+1)-th smallest elements; the last arc of each block ends at
/// a sentinel point n+1 standing for infinity.
struct Arc {
  int left = 0;
  int right = 0;   // n+1 means infinity
  int block = 0;   // index of the owning block in standard form
  int index = 0;   // j for the j-th arc of its block
};

inline std::vector<Arc> arcs_of(const SetPartition& sp) {
  std::vector<Arc> out;
  const int inf = sp.ground_size() + 1;
  const auto& blocks = sp.blocks();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& b = blocks[k];
    for (std::size_t j = 0; j < b.size(); ++j) {
      int right = j + 1 < b.size() ? b[j + 1] : inf;
      out.push_back(Arc{b[j], right, static_cast<int>(k),
                       static_cast<int>(j) + 1});
    }
  }
  return out;
}

/// Number of alpha-interlacings: crossing pairs of same-index arcs from
/// distinct blocks whose two middle endpoints lie in different blocks of the
/// canonical partition of alpha. Crossing is the strict pattern
/// a < c < b < d for arcs (a,b), (c,d); two arcs sharing the infinity
/// endpoint never cross.
inline int interlacing_count(const SetPartition& sp, const Composition& alpha) {
  if (alpha.total() != sp.ground_size())
    throw std::invalid_argument("interlacing_count: |alpha| != n");
  std::vector<Arc> arcs = arcs_of(sp);
  int count = 0;
  for (std::size_t s = 0; s < arcs.size(); ++s) {
    for (std::size_t t = s + 1; t < arcs.size(); ++t) {
      const Arc& a1 = arcs[s];
      const Arc& a2 = arcs[t];
      if (a1.block == a2.block || a1.index != a2.index) continue;
      const Arc& lo = a1.left < a2.left ? a1 : a2;
      const Arc& hi = a1.left < a2.left ? a2 : a1;
      if (!(lo.left < hi.left && hi.left < lo.right && lo.right < hi.right))
        continue;
      // middle endpoints lo.right and hi.left are always finite here
      if (block_index(alpha, lo.right) != block_index(alpha, hi.left)) ++count;
    }
  }
  return count;
}

/// Plain interlacing number: alpha = (1,...,1), so every crossing of
/// same-index arcs counts.
inline int interlacing_count(const SetPartition& sp) {
  return interlacing_count(
      sp, Composition(std::vector<int>(
              static_cast<std::size_t>(sp.ground_size()), 1)));
}

/// The set partition statistic attached to a Mahonian word statistic:
/// the segmented statistic of the rank word.
inline int partition_stat(Stat s, const Composition& alpha,
                          const SetPartition& sp) {
  return segmented_stat(s, alpha, sp.rank_word());
}

}  // namespace qcomb
