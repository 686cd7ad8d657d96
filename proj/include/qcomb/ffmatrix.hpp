#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcomb/partition.hpp"

namespace qcomb {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Matrix over the prime field Z/p. Entries are stored as residues in
/// [0, p). Primality is checked at construction.
class FfMatrix {
 public:
  FfMatrix(int rows, int cols, int p) : p_(p), rows_(rows), cols_(cols) {
    if (!is_prime(p)) throw std::invalid_argument("FfMatrix: modulus not prime");
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("FfMatrix: negative dimension");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              0);
  }

  static FfMatrix identity(int n, int p) {
    FfMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static FfMatrix diagonal(const std::vector<int>& entries, int p) {
    int n = static_cast<int>(entries.size());
    FfMatrix m(n, n, p);
    for (int i = 0; i < n; ++i)
      m.at(i, i) = ((entries[static_cast<std::size_t>(i)] % p) + p) % p;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int modulus() const { return p_; }

  int& at(int i, int j) {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
  }
  int at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
  }

  /// Assigns a value, reducing mod p.
  void set(int i, int j, int v) { at(i, j) = ((v % p_) + p_) % p_; }

  FfMatrix multiply(const FfMatrix& other) const {
    if (cols_ != other.rows_ || p_ != other.p_)
      throw std::invalid_argument("FfMatrix::multiply: shape mismatch");
    FfMatrix r(rows_, other.cols_, p_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        int aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < other.cols_; ++j)
          r.at(i, j) = (r.at(i, j) + aik * other.at(k, j)) % p_;
      }
    return r;
  }

  FfMatrix transpose() const {
    FfMatrix r(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  /// Rows of this matrix stacked above the rows of other.
  FfMatrix vstack(const FfMatrix& other) const {
    if (cols_ != other.cols_ || p_ != other.p_)
      throw std::invalid_argument("FfMatrix::vstack: shape mismatch");
    FfMatrix r(rows_ + other.rows_, cols_, p_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < other.rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = other.at(i, j);
    return r;
  }

  /// The first k rows.
  FfMatrix top_rows(int k) const {
    FfMatrix r(k, cols_, p_);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    return r;
  }

  bool operator==(const FfMatrix& other) const = default;

 private:
  int p_;
  int rows_;
  int cols_;
  std::vector<int> a_;
};

inline int mod_inverse(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::invalid_argument("mod_inverse: zero");
  int result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

struct RrefResult {
  FfMatrix mat;
  std::vector<int> pivots;  // 1-based column indices, strictly increasing
};

/// Reduced row echelon form over Z/p with the pivot columns. Canonical:
/// every matrix row-equivalent to m yields the same result.
inline RrefResult rref(FfMatrix m) {
  const int p = m.modulus();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    int inv = mod_inverse(m.at(row, col), p);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv % p;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      int f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = ((m.at(i, j) - f * m.at(row, j)) % p + p) % p;
    }
    pivots.push_back(col + 1);
    ++row;
  }
  return RrefResult{std::move(m), std::move(pivots)};
}

inline int rank(const FfMatrix& m) {
  return static_cast<int>(rref(m).pivots.size());
}

/// All m-element subsets of [n] in lexicographic order.
inline std::vector<std::vector<int>> pivot_sets(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    int left = m - static_cast<int>(cur.size());
    for (int v = from; v <= n - left + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Cells of the echelon form with pivot columns C that may hold arbitrary
/// field elements: positions (row i, col j), 0-based, with j right of the
/// row's pivot and outside the pivot columns. Row-major order.
inline std::vector<std::pair<int, int>> free_cells(const std::vector<int>& pivots,
                                                   int n) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(n) + 1, false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (int j = pivots[i] + 1; j <= n; ++j)
      if (!is_pivot[static_cast<std::size_t>(j)])
        cells.emplace_back(static_cast<int>(i), j - 1);
  return cells;
}

/// Visits every m-dimensional subspace of (Z/p)^n exactly once as its
/// reduced echelon basis, grouped by pivot set, free entries iterated in
/// row-major order.
template <typename Fn>
void for_each_subspace(int n, int m, int p, Fn&& fn) {
  if (m < 0 || m > n)
    throw std::invalid_argument("for_each_subspace: bad dimension");
  for (const auto& pivots : pivot_sets(n, m)) {
    FfMatrix base(m, n, p);
    for (int i = 0; i < m; ++i)
      base.at(i, pivots[static_cast<std::size_t>(i)] - 1) = 1;
    auto cells = free_cells(pivots, n);
    std::vector<int> odo(cells.size(), 0);
    while (true) {
      fn(base, pivots);
      // advance the odometer, last cell fastest
      std::size_t k = cells.size();
      while (k > 0 && ++odo[k - 1] == p) {
        odo[k - 1] = 0;
        base.at(cells[k - 1].first, cells[k - 1].second) = 0;
        --k;
      }
      if (k == 0) break;  // wrapped: this pivot set is exhausted
      base.at(cells[k - 1].first, cells[k - 1].second) = odo[k - 1];
    }
  }
}

/// Profile of the row space of span_rows with respect to delta: the
/// successive dimension increments of the subspace chain obtained by
/// repeatedly adjoining the image under delta, until it stabilizes.
inline Partition profile(const FfMatrix& span_rows, const FfMatrix& delta) {
  if (delta.rows() != delta.cols())
    throw std::invalid_argument("profile: delta must be square");
  if (span_rows.cols() != delta.cols() ||
      span_rows.modulus() != delta.modulus())
    throw std::invalid_argument("profile: dimension or modulus mismatch");
  FfMatrix dt = delta.transpose();
  RrefResult cur = rref(span_rows);
  int prev_rank = static_cast<int>(cur.pivots.size());
  std::vector<int> dims{prev_rank};
  for (int round = 0; round < delta.rows(); ++round) {
    FfMatrix basis = cur.mat.top_rows(prev_rank);
    FfMatrix next = basis.vstack(basis.multiply(dt));
    cur = rref(next);
    int r = static_cast<int>(cur.pivots.size());
    if (r == prev_rank) break;
    dims.push_back(r);
    prev_rank = r;
  }
  std::vector<int> incr;
  for (std::size_t j = 0; j < dims.size(); ++j)
    incr.push_back(dims[j] - (j ? dims[j - 1] : 0));
  while (!incr.empty() && incr.back() == 0) incr.pop_back();
  for (std::size_t j = 1; j < incr.size(); ++j)
    if (incr[j] > incr[j - 1])
      throw std::logic_error("profile: increments fail to weakly decrease");
  return Partition(std::move(incr));
}

}  // namespace qcomb
