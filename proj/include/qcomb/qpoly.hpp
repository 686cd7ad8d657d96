#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcomb {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial in a single formal variable q with signed
/// arbitrary-precision integer coefficients. This is the universal value
/// type of the library: every generating function, q-analog and counting
/// polynomial is a QPoly.
///
/// Canonical form: the coefficient vector never has a trailing zero, and
/// the zero polynomial is the empty vector. Equality is coefficient-wise.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long long c) : QPoly(BigInt(c)) {}
  QPoly(BigInt c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static QPoly monomial(BigInt c, std::size_t exponent) {
    if (c == 0) return QPoly{};
    std::vector<BigInt> v(exponent + 1);
    v[exponent] = std::move(c);
    return QPoly(std::move(v));
  }

  /// The variable itself.
  static QPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of q^k (zero beyond the degree).
  const BigInt& coeff(std::size_t k) const {
    static const BigInt kZero{0};
    return k < coeffs_.size() ? coeffs_[k] : kZero;
  }

  std::span<const BigInt> coeffs() const { return coeffs_; }

  bool operator==(const QPoly& other) const = default;

  QPoly& operator+=(const QPoly& other) {
    if (coeffs_.size() < other.coeffs_.size())
      coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
      coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }

  QPoly& operator-=(const QPoly& other) {
    if (coeffs_.size() < other.coeffs_.size())
      coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
      coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly{};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(r));
  }

  QPoly& operator*=(const QPoly& other) { return *this = *this * other; }

  /// Multiply by q^k.
  QPoly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> r(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), r.begin() + k);
    return QPoly(std::move(r));
  }

  /// Exact integer evaluation at q = x (Horner).
  BigInt evaluate(const BigInt& x) const {
    BigInt acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  /// Sum of coefficients, i.e. the value at q = 1.
  BigInt at_one() const {
    BigInt s{0};
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  bool has_nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigInt& c) { return c >= 0; });
  }

  /// Human form in descending powers, e.g. "q^4 + 2*q^3 + 3*q^2 + 2*q + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      BigInt a = c < 0 ? BigInt(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (k == 0) {
        out += a.str();
      } else {
        if (a != 1) out += a.str() + "*";
        out += k == 1 ? "q" : "q^" + std::to_string(k);
      }
    }
    return out;
  }

  /// Serialized form: coefficients as decimal strings, ascending exponent.
  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
  }

  static QPoly from_coeff_strings(const std::vector<std::string>& strs) {
    std::vector<BigInt> v;
    v.reserve(strs.size());
    for (const auto& s : strs) v.emplace_back(s);
    return QPoly(std::move(v));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// Thrown when an exact division leaves a remainder. Carries the residual
/// at the point the division stopped.
class NonDivisibleError : public std::runtime_error {
 public:
  NonDivisibleError(std::string what, QPoly remainder)
      : std::runtime_error(std::move(what)), remainder(std::move(remainder)) {}
  QPoly remainder;
};

/// Exact quotient a / b in Z[q]. Throws NonDivisibleError unless b divides a
/// with an integer quotient and zero remainder. b must be nonzero.
inline QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  if (a.is_zero()) return QPoly{};
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const BigInt& lead = b.coeff(static_cast<std::size_t>(b.degree()));
  int db = b.degree();
  int dr = a.degree();
  if (dr < db)
    throw NonDivisibleError("exact_div: degree of divisor exceeds dividend",
                            a);
  std::vector<BigInt> quot(static_cast<std::size_t>(dr - db) + 1);
  for (int k = dr; k >= db; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (top % lead != 0)
      throw NonDivisibleError("exact_div: leading coefficient does not divide",
                              QPoly(std::move(rem)));
    BigInt f = top / lead;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -=
          f * b.coeff(static_cast<std::size_t>(j));
    quot[static_cast<std::size_t>(k - db)] = std::move(f);
  }
  QPoly r(std::move(rem));
  if (!r.is_zero())
    throw NonDivisibleError("exact_div: nonzero remainder", std::move(r));
  return QPoly(std::move(quot));
}

inline QPoly pow(const QPoly& base, unsigned exponent) {
  QPoly acc{1};
  for (unsigned i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

/// q-analog of n: 1 + q + ... + q^(n-1); zero for n = 0.
inline QPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  std::vector<BigInt> v(static_cast<std::size_t>(n), BigInt(1));
  return QPoly(std::move(v));
}

/// q-factorial: product of q_int(1), ..., q_int(n).
inline QPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  QPoly acc{1};
  for (int i = 1; i <= n; ++i) acc *= q_int(i);
  return acc;
}

/// Gaussian binomial coefficient, computed by the Pascal recursion
/// [n,k] = [n-1,k-1] + q^k [n-1,k]. Returns 0 when k > n.
inline QPoly q_binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("q_binomial: negative argument");
  if (k > n) return QPoly{};
  if (k > n - k) k = n - k;
  // row[j] holds [i, j]_q while i grows
  std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = QPoly{1};
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      if (j == i)
        row[static_cast<std::size_t>(j)] = QPoly{1};
      else
        row[static_cast<std::size_t>(j)] =
            row[static_cast<std::size_t>(j - 1)] +
            row[static_cast<std::size_t>(j)].shifted(static_cast<std::size_t>(j));
    }
  }
  return row[static_cast<std::size_t>(k)];
}

/// q-multinomial coefficient [n; parts]. The parts must sum to at most n;
/// any missing mass counts as one extra part. Computed as a product of
/// q-binomials over prefix sums, so no division is involved.
inline QPoly q_multinomial(int n, std::span<const int> parts) {
  long long total = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
    total += p;
  }
  if (total > n) return QPoly{};
  QPoly acc{1};
  int prefix = 0;
  for (int p : parts) {
    prefix += p;
    acc *= q_binomial(prefix, p);
  }
  if (total < n) acc *= q_binomial(n, static_cast<int>(n - total));
  return acc;
}

inline QPoly q_multinomial(int n, const std::vector<int>& parts) {
  return q_multinomial(n, std::span<const int>(parts));
}

/// Polynomial in two formal variables (q, t) with integer coefficients,
/// stored densely by (q-exponent, t-exponent). Only what the two-variable
/// statistics generating function needs: accumulation, equality, and the
/// specializations back to one variable.
class QPoly2 {
 public:
  QPoly2() = default;

  void add_term(std::size_t qexp, std::size_t texp, const BigInt& c) {
    if (c == 0) return;
    if (qexp >= grid_.size()) grid_.resize(qexp + 1);
    auto& row = grid_[qexp];
    if (texp >= row.size()) row.resize(texp + 1);
    row[texp] += c;
    normalize();
  }

  /// Adds f(q) * g(t).
  void add_product(const QPoly& f, const QPoly& g) {
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
      if (f.coeff(i) == 0) continue;
      for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
        if (g.coeff(j) == 0) continue;
        add_term(i, j, f.coeff(i) * g.coeff(j));
      }
    }
  }

  BigInt coeff(std::size_t qexp, std::size_t texp) const {
    if (qexp >= grid_.size()) return 0;
    const auto& row = grid_[qexp];
    return texp < row.size() ? row[texp] : BigInt(0);
  }

  bool operator==(const QPoly2& other) const = default;

  /// Identifies t with q.
  QPoly at_t_equals_q() const {
    QPoly acc;
    for (std::size_t i = 0; i < grid_.size(); ++i)
      for (std::size_t j = 0; j < grid_[i].size(); ++j)
        if (grid_[i][j] != 0)
          acc += QPoly::monomial(grid_[i][j], i + j);
    return acc;
  }

  /// Coefficient extraction as a polynomial in q for fixed t-exponent.
  QPoly t_coefficient(std::size_t texp) const {
    QPoly acc;
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      BigInt c = coeff(i, texp);
      if (c != 0) acc += QPoly::monomial(c, i);
    }
    return acc;
  }

 private:
  void normalize() {
    for (auto& row : grid_)
      while (!row.empty() && row.back() == 0) row.pop_back();
    while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
  }

  std::vector<std::vector<BigInt>> grid_;
};

}  // namespace qcomb
