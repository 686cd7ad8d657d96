#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcomb/bpoly.hpp"
#include "qcomb/partition.hpp"
#include "qcomb/qpoly.hpp"
#include "qcomb/set_partition.hpp"

namespace qcomb {

/// Ferrers board: columns of weakly increasing heights, drawn with column i
/// occupying cells (i, 1..height_i). Zero-height columns are dropped.
class FerrersBoard {
 public:
  FerrersBoard() = default;
  explicit FerrersBoard(std::vector<int> heights) : heights_(std::move(heights)) {
    while (!heights_.empty() && heights_.front() == 0)
      heights_.erase(heights_.begin());
    for (std::size_t i = 0; i < heights_.size(); ++i) {
      if (heights_[i] <= 0)
        throw std::invalid_argument("FerrersBoard: heights must be positive");
      if (i && heights_[i - 1] > heights_[i])
        throw std::invalid_argument("FerrersBoard: heights must weakly increase");
    }
  }

  /// Staircase board of size n: column heights 1, 2, ..., n-1.
  static FerrersBoard staircase(int n) {
    std::vector<int> h;
    for (int i = 1; i < n; ++i) h.push_back(i);
    return FerrersBoard(std::move(h));
  }

  const std::vector<int>& heights() const { return heights_; }
  int column_count() const { return static_cast<int>(heights_.size()); }
  int height(int col) const {
    return col >= 1 && col <= column_count()
               ? heights_[static_cast<std::size_t>(col - 1)]
               : 0;
  }
  int max_height() const { return heights_.empty() ? 0 : heights_.back(); }

  int cell_count() const {
    int c = 0;
    for (int h : heights_) c += h;
    return c;
  }

  bool contains(int col, int row) const {
    return col >= 1 && col <= column_count() && row >= 1 && row <= height(col);
  }

  bool operator==(const FerrersBoard& other) const = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < heights_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(heights_[i]);
    }
    return out;
  }

 private:
  std::vector<int> heights_;
};

/// Placement of nonattacking rooks: board cells (column, row), pairwise in
/// distinct columns and distinct rows.
struct RookPlacement {
  std::vector<std::pair<int, int>> rooks;
};

inline void validate_placement(const RookPlacement& placement,
                               const FerrersBoard& board) {
  for (std::size_t a = 0; a < placement.rooks.size(); ++a) {
    auto [c, r] = placement.rooks[a];
    if (!board.contains(c, r))
      throw std::invalid_argument("RookPlacement: rook off the board");
    for (std::size_t b = a + 1; b < placement.rooks.size(); ++b)
      if (placement.rooks[b].first == c || placement.rooks[b].second == r)
        throw std::invalid_argument("RookPlacement: rooks attack each other");
  }
}

/// Garsia-Remmel statistic: every rook cancels the cells below it in its
/// column and to its right in its row; count the cells that hold no rook
/// and are not cancelled.
inline int uncancelled_cells(const RookPlacement& placement,
                             const FerrersBoard& board) {
  validate_placement(placement, board);
  int count = 0;
  for (int c = 1; c <= board.column_count(); ++c) {
    for (int r = 1; r <= board.height(c); ++r) {
      bool dead = false;
      for (auto [rc, rr] : placement.rooks) {
        if (rc == c && rr == r) { dead = true; break; }            // occupied
        if (rc == c && rr > r) { dead = true; break; }             // below a rook
        if (rr == r && rc < c) { dead = true; break; }             // right of a rook
      }
      if (!dead) ++count;
    }
  }
  return count;
}

/// m-th q-rook number: the sum of q^(uncancelled cells) over all placements
/// of m nonattacking rooks, enumerated column by column.
inline QPoly rook_number(const FerrersBoard& board, int m) {
  if (m < 0) throw std::invalid_argument("rook_number: negative rook count");
  QPoly acc;
  RookPlacement placement;
  std::vector<bool> row_used(static_cast<std::size_t>(board.max_height()) + 1,
                             false);
  auto rec = [&](auto&& self, int col, int left) -> void {
    if (left == 0) {
      acc += QPoly::monomial(
          1, static_cast<std::size_t>(uncancelled_cells(placement, board)));
      return;
    }
    if (col > board.column_count() ||
        board.column_count() - col + 1 < left)
      return;
    self(self, col + 1, left);  // no rook in this column
    for (int r = 1; r <= board.height(col); ++r) {
      if (row_used[static_cast<std::size_t>(r)]) continue;
      row_used[static_cast<std::size_t>(r)] = true;
      placement.rooks.emplace_back(col, r);
      self(self, col + 1, left - 1);
      placement.rooks.pop_back();
      row_used[static_cast<std::size_t>(r)] = false;
    }
  };
  rec(rec, 1, m);
  return acc;
}

/// Closed form for the m-th q-rook number of the a x b rectangular board.
inline QPoly rook_number_rectangular(int a, int b, int m) {
  if (m < 0) throw std::invalid_argument("rook_number_rectangular: m < 0");
  if (m > a || m > b) return QPoly{};
  QPoly acc = q_binomial(b, m);
  for (int i = a - m + 1; i <= a; ++i) acc *= q_int(i);
  return acc.shifted(static_cast<std::size_t>((a - m) * (b - m)));
}

/// Board attached to a partition nu: the staircase of size |nu| with the
/// staircases of the canonical blocks removed; its column heights are the
/// prefix sums nu_1+...+nu_{i-1}, each repeated nu_i times.
inline FerrersBoard board_of_type(const Partition& nu) {
  if (nu.empty())
    throw std::invalid_argument("board_of_type: nu must have at least one part");
  std::vector<int> h;
  int prefix = nu.part(1);
  for (int i = 2; i <= nu.length(); ++i) {
    for (int j = 0; j < nu.part(i); ++j) h.push_back(prefix);
    prefix += nu.part(i);
  }
  return FerrersBoard(std::move(h));
}

/// Rook placement on the staircase of size n encoding a set partition: a
/// rook in board column j-1, row i for every pair i < j of consecutive
/// elements of a block.
inline RookPlacement placement_of_partition(const SetPartition& sp) {
  RookPlacement placement;
  for (const auto& block : sp.blocks())
    for (std::size_t k = 0; k + 1 < block.size(); ++k)
      placement.rooks.emplace_back(block[k + 1] - 1, block[k]);
  std::sort(placement.rooks.begin(), placement.rooks.end());
  return placement;
}

/// Inverse of placement_of_partition.
inline SetPartition partition_of_placement(const RookPlacement& placement,
                                           int n) {
  validate_placement(placement, FerrersBoard::staircase(n));
  std::vector<int> succ(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> has_pred(static_cast<std::size_t>(n) + 1, false);
  for (auto [c, r] : placement.rooks) {
    succ[static_cast<std::size_t>(r)] = c + 1;
    has_pred[static_cast<std::size_t>(c + 1)] = true;
  }
  std::vector<std::vector<int>> blocks;
  for (int v = 1; v <= n; ++v) {
    if (has_pred[static_cast<std::size_t>(v)]) continue;
    std::vector<int> block;
    for (int x = v; x != 0; x = succ[static_cast<std::size_t>(x)])
      block.push_back(x);
    blocks.push_back(std::move(block));
  }
  return SetPartition(n, std::move(blocks));
}

// ---------------------------------------------------------------------------
// q-Stirling numbers indexed by a partition
// ---------------------------------------------------------------------------

enum class StirlingMethod { definition, recursion, rook, setstat };

inline StirlingMethod stirling_method_from_name(const std::string& name) {
  if (name == "definition") return StirlingMethod::definition;
  if (name == "recursion") return StirlingMethod::recursion;
  if (name == "rook") return StirlingMethod::rook;
  if (name == "setstat") return StirlingMethod::setstat;
  throw std::invalid_argument("unknown stirling method: " + name);
}

/// Exponent correction for a set partition shape: sum over rows i of
/// (i-1) * (shape_i - 1).
inline int shape_exponent(const Partition& shape) {
  int e = 0;
  for (int i = 1; i <= shape.length(); ++i)
    e += (i - 1) * (shape.part(i) - 1);
  return e;
}

namespace detail {

inline QPoly stirling_recursion(const Partition& nu, int m) {
  int n = nu.size();
  if (m < 0 || m > n) return QPoly{};
  if (nu.length() <= 1) return m == n ? QPoly{1} : QPoly{};
  int last = nu.part(nu.length());
  Partition head = nu.drop_last();
  QPoly acc;
  for (int r = 0; r <= std::min(last, m); ++r) {
    QPoly sub = stirling_recursion(head, m - r);
    if (sub.is_zero()) continue;
    QPoly coeff = q_binomial(last, r) * q_binomial(m - r, last - r) *
                  q_factorial(last - r);
    int e = (last - r) * (last - r - 1) / 2;
    acc += coeff.shifted(static_cast<std::size_t>(e)) * sub;
  }
  return acc;
}

}  // namespace detail

/// q-Stirling number of n into m blocks relative to the partition nu of n.
/// Four independent routes:
///  - definition: sum over partitions mu of n with first part m of
///    q^(sum C(mu_j,2), j >= 2) times the b polynomial of (mu, nu);
///  - recursion: peel the last part of nu with q-binomial convolution;
///  - rook: rook numbers of the board of nu, rescaled by the staircase
///    deficit and divided exactly by q^C(m,2);
///  - setstat: sum over m-block set partitions minimally intersecting the
///    canonical partition of nu, weighted by interlacings, the segmented
///    statistic, and the shape exponent.
inline QPoly stirling_q(int n, int m, const Partition& nu, StirlingMethod method,
                        Stat stat = Stat::inv) {
  if (nu.size() != n)
    throw std::invalid_argument("stirling_q: nu must be a partition of n");
  if (m < 0 || m > n) throw std::invalid_argument("stirling_q: m out of range");
  switch (method) {
    case StirlingMethod::definition: {
      QPoly acc;
      for (const auto& mu : partitions_of(n)) {
        if (mu.part(1) != m) continue;
        int e = 0;
        for (int j = 2; j <= mu.length(); ++j)
          e += mu.part(j) * (mu.part(j) - 1) / 2;
        acc += bpoly_via_strips(mu, nu).shifted(static_cast<std::size_t>(e));
      }
      if (n == 0 && m == 0) acc = QPoly{1};
      return acc;
    }
    case StirlingMethod::recursion: {
      if (n == 0) return m == 0 ? QPoly{1} : QPoly{};
      return detail::stirling_recursion(nu, m);
    }
    case StirlingMethod::rook: {
      if (nu.empty()) return m == 0 ? QPoly{1} : QPoly{};
      if (nu.length() == 1) return m == n ? QPoly{1} : QPoly{};
      int deficit = 0;
      for (int j = 1; j <= nu.length(); ++j)
        deficit += nu.part(j) * (nu.part(j) - 1) / 2;
      QPoly r = rook_number(board_of_type(nu), n - m);
      return exact_div(r.shifted(static_cast<std::size_t>(deficit)),
                       QPoly::monomial(1, static_cast<std::size_t>(m * (m - 1) / 2)));
    }
    case StirlingMethod::setstat: {
      SetPartition canon = canonical_set_partition(nu);
      QPoly acc;
      for (const auto& sp : set_partitions(n)) {
        if (sp.block_count() != m) continue;
        if (!sp.minimally_intersects(canon)) continue;
        int e = interlacing_count(sp, nu) + partition_stat(stat, nu, sp) +
                shape_exponent(sp.shape());
        acc += QPoly::monomial(1, static_cast<std::size_t>(e));
      }
      if (n == 0 && m == 0) acc = QPoly{1};
      return acc;
    }
  }
  throw std::invalid_argument("stirling_q: bad method");
}

/// Carlitz q-Stirling numbers of the second kind, by their defining
/// recursion; used as an independent cross-check for nu = (1,...,1).
inline QPoly carlitz_stirling(int n, int m) {
  if (n == 0 || m == 0) return n == m ? QPoly{1} : QPoly{};
  return carlitz_stirling(n - 1, m - 1) +
         q_int(m) * carlitz_stirling(n - 1, m);
}

/// Number of m-block set partitions of [n] minimally intersecting the
/// canonical partition of nu, by the q = 1 recursion.
inline BigInt stirling_count(int n, int m, const Partition& nu) {
  if (nu.size() != n)
    throw std::invalid_argument("stirling_count: nu must be a partition of n");
  if (m < 0 || m > n) return 0;
  if (nu.length() <= 1) return m == n ? 1 : 0;
  int last = nu.part(nu.length());
  Partition head = nu.drop_last();
  BigInt acc{0};
  for (int r = 0; r <= std::min(last, m); ++r)
    acc += stirling_count(n - last, m - r, head) * binomial(last, r) *
           binomial(m - r, last - r) * factorial(last - r);
  return acc;
}

}  // namespace qcomb
