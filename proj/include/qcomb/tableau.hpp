#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcomb/partition.hpp"
#include "qcomb/qpoly.hpp"
#include "qcomb/set_partition.hpp"

namespace qcomb {

/// Filling of a Young diagram with positive integers, stored row by row.
/// Row lengths must weakly decrease. Which additional constraints hold
/// (standard, semistandard, distinct entries) depends on where the tableau
/// came from; validators below let callers check.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i + 1 < rows_.size() && rows_[i].size() < rows_[i + 1].size())
        throw std::invalid_argument("Tableau: row lengths must weakly decrease");
      for (int x : rows_[i])
        if (x <= 0) throw std::invalid_argument("Tableau: entries must be positive");
    }
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }

  int row_length(int i) const {
    return i >= 1 && i <= row_count()
               ? static_cast<int>(rows_[static_cast<std::size_t>(i - 1)].size())
               : 0;
  }

  /// Entry at row i, column j (1-based); 0 when the cell is absent.
  int entry(int i, int j) const {
    if (i < 1 || i > row_count()) return 0;
    const auto& row = rows_[static_cast<std::size_t>(i - 1)];
    if (j < 1 || j > static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(j - 1)];
  }

  Partition shape() const {
    std::vector<int> lens;
    lens.reserve(rows_.size());
    for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
    return Partition(std::move(lens));
  }

  int cell_count() const {
    int c = 0;
    for (const auto& r : rows_) c += static_cast<int>(r.size());
    return c;
  }

  int max_entry() const {
    int m = 0;
    for (const auto& r : rows_)
      for (int x : r) m = std::max(m, x);
    return m;
  }

  bool rows_weakly_increase() const {
    for (const auto& r : rows_)
      for (std::size_t j = 1; j < r.size(); ++j)
        if (r[j - 1] > r[j]) return false;
    return true;
  }

  bool rows_strictly_increase() const {
    for (const auto& r : rows_)
      for (std::size_t j = 1; j < r.size(); ++j)
        if (r[j - 1] >= r[j]) return false;
    return true;
  }

  bool columns_strictly_increase() const {
    for (int i = 2; i <= row_count(); ++i)
      for (int j = 1; j <= row_length(i); ++j)
        if (entry(i - 1, j) >= entry(i, j)) return false;
    return true;
  }

  /// Entries are exactly 1..n with strictly increasing rows and columns.
  bool is_standard() const {
    int n = cell_count();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& r : rows_)
      for (int x : r) {
        if (x > n || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = true;
      }
    return rows_strictly_increase() && columns_strictly_increase();
  }

  bool is_semistandard() const {
    return rows_weakly_increase() && columns_strictly_increase();
  }

  /// Entries are pairwise distinct with strictly increasing rows and columns.
  bool has_distinct_entries() const {
    std::vector<int> all;
    for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
  }

  /// Letter multiplicities: result part i is the number of entries equal
  /// to i, for i = 1..num_letters.
  Composition content(int num_letters) const {
    std::vector<int> c(static_cast<std::size_t>(num_letters), 0);
    for (const auto& r : rows_)
      for (int x : r) {
        if (x > num_letters)
          throw std::invalid_argument("Tableau::content: entry out of range");
        ++c[static_cast<std::size_t>(x - 1)];
      }
    return Composition(std::move(c));
  }

  bool operator==(const Tableau& other) const = default;
  auto operator<=>(const Tableau& other) const = default;

  /// Rows joined by "/"; entries are concatenated digits when every entry
  /// is a single digit, comma-separated otherwise.
  std::string to_string() const {
    bool digits = max_entry() <= 9;
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) out += "/";
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j && !digits) out += ",";
        out += std::to_string(rows_[i][j]);
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<int>> rows_;
};

/// Canonical tableau of a set partition: row i collects the i-th smallest
/// elements of all blocks with at least i elements, sorted ascending. For
/// set partitions whose shape is a conjugate partition this filling is
/// standard.
inline Tableau tableau_of(const SetPartition& sp) {
  std::vector<std::vector<int>> rows;
  for (const auto& b : sp.blocks()) {
    if (rows.size() < b.size()) rows.resize(b.size());
    for (std::size_t r = 0; r < b.size(); ++r) rows[r].push_back(b[r]);
  }
  for (auto& row : rows) std::sort(row.begin(), row.end());
  return Tableau(std::move(rows));
}

/// Replaces every entry x by the index of the block of the canonical
/// partition of alpha that contains x.
inline Tableau block_letters(const Tableau& t, const Composition& alpha) {
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows)
    for (int& x : row) x = block_index(alpha, x);
  return Tableau(std::move(rows));
}

/// Word of length n recording row membership: letter at position i is the
/// row containing entry i, or (row count)+1 when i does not appear.
inline Word row_word(const Tableau& t, int n) {
  if (t.max_entry() > n)
    throw std::invalid_argument("row_word: entry exceeds ground set");
  Word w(static_cast<std::size_t>(n), t.row_count() + 1);
  for (int i = 1; i <= t.row_count(); ++i)
    for (int x : t.rows()[static_cast<std::size_t>(i - 1)])
      w[static_cast<std::size_t>(x - 1)] = i;
  return w;
}

/// Attachment counts for rows below the first: position (i,j) counts the
/// cells j' >= j of row i-1 whose entry is smaller than the entry at (i,j).
/// Result row k corresponds to tableau row k+2.
inline std::vector<std::vector<int>> attachment_counts(const Tableau& t) {
  std::vector<std::vector<int>> out;
  for (int i = 2; i <= t.row_count(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= t.row_length(i); ++j) {
      int c = 0;
      for (int j2 = j; j2 <= t.row_length(i - 1); ++j2)
        if (t.entry(i - 1, j2) < t.entry(i, j)) ++c;
      row.push_back(c);
    }
    out.push_back(std::move(row));
  }
  return out;
}

/// Product of q-integers of the attachment counts. Zero exactly when some
/// count vanishes, which for weakly increasing rows happens exactly when a
/// column fails to increase strictly.
inline QPoly interlace_weight(const Tableau& t) {
  QPoly acc{1};
  for (const auto& row : attachment_counts(t))
    for (int c : row) {
      if (c == 0) return QPoly{};
      acc *= q_int(c);
    }
  return acc;
}

/// Per-letter row multiplicity profiles: result[i-1] is the composition
/// whose j-th part counts occurrences of letter i in row j.
inline std::vector<Composition> letter_row_profiles(const Tableau& t,
                                                    int num_letters) {
  std::vector<std::vector<int>> beta(
      static_cast<std::size_t>(num_letters),
      std::vector<int>(static_cast<std::size_t>(t.row_count()), 0));
  for (int i = 1; i <= t.row_count(); ++i)
    for (int x : t.rows()[static_cast<std::size_t>(i - 1)]) {
      if (x > num_letters)
        throw std::invalid_argument("letter_row_profiles: entry out of range");
      ++beta[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(i - 1)];
    }
  std::vector<Composition> out;
  out.reserve(beta.size());
  for (auto& b : beta) out.emplace_back(std::move(b));
  return out;
}

/// Weight of the ways to distribute the letters of the ambient content over
/// the rows: the product over letters i of the q-multinomial of alpha_i
/// choosing the row multiplicities (plus the unused slack). Content of t
/// must be a submultiset of the alphabet multiset of alpha.
inline QPoly distribution_weight(const Tableau& t, const Composition& alpha) {
  auto beta = letter_row_profiles(t, alpha.length());
  QPoly acc{1};
  for (int i = 1; i <= alpha.length(); ++i) {
    const auto& b = beta[static_cast<std::size_t>(i - 1)];
    if (b.total() > alpha.part(i))
      throw std::invalid_argument(
          "distribution_weight: letter multiplicity exceeds content");
    acc *= q_multinomial(alpha.part(i), b.parts());
  }
  return acc;
}

/// Semistandard tableaux of shape mu and content exactly alpha, enumerated
/// by filling cells in row-major order (so the output order is stable).
inline std::vector<Tableau> semistandard_tableaux(const Partition& mu,
                                                  const Composition& alpha) {
  std::vector<Tableau> out;
  if (mu.size() != alpha.total()) return out;
  int nrows = mu.length();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(nrows));
  std::vector<int> remaining = alpha.parts().empty()
                                   ? std::vector<int>{}
                                   : alpha.parts();
  int letters = alpha.length();
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r > nrows) {
      out.emplace_back(rows);
      return;
    }
    int next_r = r, next_c = c + 1;
    if (c == mu.part(r)) {
      next_r = r + 1;
      next_c = 1;
    }
    auto& row = rows[static_cast<std::size_t>(r - 1)];
    int lo = c > 1 ? row[static_cast<std::size_t>(c - 2)] : 1;
    int above = r > 1 ? rows[static_cast<std::size_t>(r - 2)]
                            [static_cast<std::size_t>(c - 1)]
                      : 0;
    lo = std::max(lo, above + 1);
    for (int v = lo; v <= letters; ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      --remaining[static_cast<std::size_t>(v - 1)];
      row.push_back(v);
      self(self, next_r, next_c);
      row.pop_back();
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
  };
  if (mu.empty()) {
    out.emplace_back(rows);
    return out;
  }
  rec(rec, 1, 1);
  return out;
}

/// Number of semistandard tableaux of shape mu and content nu.
inline long long kostka(const Partition& mu, const Composition& nu) {
  return static_cast<long long>(semistandard_tableaux(mu, nu).size());
}

/// Column-strict, row-weak fillings of mu by a submultiset of the alphabet
/// multiset of alpha (letter i used at most alpha_i times; total content
/// may fall short of |alpha|).
inline std::vector<Tableau> submultiset_tableaux(const Partition& mu,
                                                 const Composition& alpha) {
  std::vector<Tableau> out;
  int nrows = mu.length();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(nrows));
  std::vector<int> remaining = alpha.parts();
  int letters = alpha.length();
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r > nrows) {
      out.emplace_back(rows);
      return;
    }
    int next_r = r, next_c = c + 1;
    if (c == mu.part(r)) {
      next_r = r + 1;
      next_c = 1;
    }
    auto& row = rows[static_cast<std::size_t>(r - 1)];
    int lo = c > 1 ? row[static_cast<std::size_t>(c - 2)] : 1;
    int above = r > 1 ? rows[static_cast<std::size_t>(r - 2)]
                            [static_cast<std::size_t>(c - 1)]
                      : 0;
    lo = std::max(lo, above + 1);
    for (int v = lo; v <= letters; ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      --remaining[static_cast<std::size_t>(v - 1)];
      row.push_back(v);
      self(self, next_r, next_c);
      row.pop_back();
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
  };
  if (mu.empty()) {
    out.emplace_back(rows);
    return out;
  }
  rec(rec, 1, 1);
  return out;
}

/// Standard tableaux of shape mu such that no column holds two entries from
/// the same block of the canonical partition of alpha. Built by inserting
/// the values 1..n in order at the growth corners.
inline std::vector<Tableau> standard_tableaux(const Partition& mu,
                                              const Composition& alpha) {
  std::vector<Tableau> out;
  int n = mu.size();
  if (alpha.total() != n)
    throw std::invalid_argument("standard_tableaux: |alpha| != |mu|");
  int nrows = mu.length();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(nrows));
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.emplace_back(rows);
      return;
    }
    int vb = block_index(alpha, v);
    for (int r = 1; r <= nrows; ++r) {
      auto& row = rows[static_cast<std::size_t>(r - 1)];
      int len = static_cast<int>(row.size());
      if (len >= mu.part(r)) continue;
      int above_len =
          r > 1 ? static_cast<int>(rows[static_cast<std::size_t>(r - 2)].size())
                : 0;
      if (r > 1 && above_len <= len) continue;  // shape must stay a partition
      bool ok = true;
      for (int i = 1; i < r && ok; ++i) {
        int u = rows[static_cast<std::size_t>(i - 1)]
                    [static_cast<std::size_t>(len)];
        if (block_index(alpha, u) == vb) ok = false;
      }
      if (!ok) continue;
      row.push_back(v);
      self(self, v + 1);
      row.pop_back();
    }
  };
  if (mu.empty()) {
    out.emplace_back(rows);
    return out;
  }
  rec(rec, 1);
  return out;
}

/// Fillings of mu by pairwise distinct entries from [n] with strictly
/// increasing rows and columns, subject to the column constraint of alpha
/// (use alpha = (1,...,1) for no constraint). Optionally pins the first row.
inline std::vector<Tableau> distinct_entry_tableaux(
    const Partition& mu, int n, const Composition& alpha,
    const std::vector<int>* first_row = nullptr) {
  std::vector<Tableau> out;
  if (alpha.total() != n)
    throw std::invalid_argument("distinct_entry_tableaux: |alpha| != n");
  if (mu.empty()) {
    if (!first_row || first_row->empty())
      out.emplace_back(std::vector<std::vector<int>>{});
    return out;
  }
  if (mu.part(1) > n) return out;
  if (first_row && static_cast<int>(first_row->size()) != mu.part(1))
    return out;
  int nrows = mu.length();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(nrows));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r > nrows) {
      out.emplace_back(rows);
      return;
    }
    int next_r = r, next_c = c + 1;
    if (c == mu.part(r)) {
      next_r = r + 1;
      next_c = 1;
    }
    auto& row = rows[static_cast<std::size_t>(r - 1)];
    int lo = 1;
    if (c > 1) lo = std::max(lo, row[static_cast<std::size_t>(c - 2)] + 1);
    if (r > 1)
      lo = std::max(lo, rows[static_cast<std::size_t>(r - 2)]
                            [static_cast<std::size_t>(c - 1)] +
                            1);
    for (int v = lo; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int i = 1; i < r && ok; ++i) {
        int u = rows[static_cast<std::size_t>(i - 1)]
                    [static_cast<std::size_t>(c - 1)];
        if (block_index(alpha, u) == block_index(alpha, v)) ok = false;
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = true;
      row.push_back(v);
      self(self, next_r, next_c);
      row.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  if (first_row) {
    auto& row = rows[0];
    for (std::size_t j = 0; j < first_row->size(); ++j) {
      int v = (*first_row)[j];
      if (v < 1 || v > n || used[static_cast<std::size_t>(v)] ||
          (j > 0 && (*first_row)[j - 1] >= v))
        return out;
      used[static_cast<std::size_t>(v)] = true;
      row.push_back(v);
    }
    if (nrows == 1)
      out.emplace_back(rows);
    else
      rec(rec, 2, 1);
    return out;
  }
  rec(rec, 1, 1);
  return out;
}

namespace detail {

/// All ways to split the ordered set `pool` into consecutive-choice subsets
/// of the given sizes; each result lists the chosen subsets in order.
inline void ordered_splits(const std::vector<int>& pool,
                           const std::vector<int>& sizes, std::size_t idx,
                           std::vector<std::vector<int>>& current,
                           std::vector<std::vector<std::vector<int>>>& out) {
  if (idx == sizes.size()) {
    out.push_back(current);
    return;
  }
  int k = sizes[idx];
  std::vector<std::size_t> sel;
  auto choose = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(sel.size()) == k) {
      std::vector<int> chosen, rest;
      std::vector<bool> mark(pool.size(), false);
      for (auto i : sel) mark[i] = true;
      for (std::size_t i = 0; i < pool.size(); ++i)
        (mark[i] ? chosen : rest).push_back(pool[i]);
      current.push_back(std::move(chosen));
      ordered_splits(rest, sizes, idx + 1, current, out);
      current.pop_back();
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      sel.push_back(i);
      self(self, i + 1);
      sel.pop_back();
    }
  };
  choose(choose, 0);
}

}  // namespace detail

/// The standard tableaux mapping to t under the block-letter map: every way
/// of assigning the concrete elements of each alpha-block to the cells
/// carrying that letter, row by row. t must be semistandard with content
/// exactly alpha.
inline std::vector<Tableau> block_letter_fiber(const Tableau& t,
                                               const Composition& alpha) {
  int letters = alpha.length();
  auto beta = letter_row_profiles(t, letters);
  for (int i = 1; i <= letters; ++i)
    if (beta[static_cast<std::size_t>(i - 1)].total() != alpha.part(i))
      throw std::invalid_argument("block_letter_fiber: content must equal alpha");

  // Per letter, enumerate the ordered splits of its block into row groups.
  std::vector<std::vector<std::vector<std::vector<int>>>> choices(
      static_cast<std::size_t>(letters));
  int offset = 0;
  for (int i = 1; i <= letters; ++i) {
    std::vector<int> pool(static_cast<std::size_t>(alpha.part(i)));
    for (int j = 0; j < alpha.part(i); ++j)
      pool[static_cast<std::size_t>(j)] = offset + j + 1;
    offset += alpha.part(i);
    std::vector<std::vector<int>> current;
    detail::ordered_splits(pool, beta[static_cast<std::size_t>(i - 1)].parts(),
                           0, current, choices[static_cast<std::size_t>(i - 1)]);
  }

  std::vector<Tableau> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(letters), 0);
  auto build = [&]() {
    std::vector<std::vector<int>> rows = t.rows();
    for (int i = 1; i <= letters; ++i) {
      const auto& split =
          choices[static_cast<std::size_t>(i - 1)]
                 [pick[static_cast<std::size_t>(i - 1)]];
      std::vector<std::size_t> cursor(split.size(), 0);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
          if (t.rows()[r][c] == i)
            rows[r][c] = split[r][cursor[r]++];
        }
      }
    }
    out.emplace_back(std::move(rows));
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i > letters) {
      build();
      return;
    }
    auto& opts = choices[static_cast<std::size_t>(i - 1)];
    for (std::size_t k = 0; k < opts.size(); ++k) {
      pick[static_cast<std::size_t>(i - 1)] = k;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

/// Binary indicator word of a pivot set inside [n].
inline Word pivot_indicator_word(const std::vector<int>& pivots, int n) {
  Word w(static_cast<std::size_t>(n), 0);
  for (int c : pivots) {
    if (c < 1 || c > n)
      throw std::invalid_argument("pivot_indicator_word: pivot out of range");
    w[static_cast<std::size_t>(c - 1)] = 1;
  }
  return w;
}

/// Two-row tableau built from pivot sets: the first row is C; the second is
/// the image of D under the order isomorphism onto the complement of C.
/// Rows increase but columns need not.
inline Tableau pivot_tableau(const std::vector<int>& c_pivots,
                             const std::vector<int>& d_pivots) {
  if (d_pivots.size() > c_pivots.size())
    throw std::invalid_argument("pivot_tableau: |D| must not exceed |C|");
  std::vector<int> row1 = c_pivots;
  std::sort(row1.begin(), row1.end());
  // phi(x) = x-th smallest positive integer outside C
  std::vector<int> row2;
  for (int d : d_pivots) {
    int count = 0, v = 0;
    while (count < d) {
      ++v;
      if (!std::binary_search(row1.begin(), row1.end(), v)) ++count;
    }
    row2.push_back(v);
  }
  std::sort(row2.begin(), row2.end());
  std::vector<std::vector<int>> rows{row1};
  if (!row2.empty()) rows.push_back(row2);
  return Tableau(std::move(rows));
}

}  // namespace qcomb
