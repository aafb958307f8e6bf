#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace supercat {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

// The two-argument cpp_rational constructor wants already-canonical
// components (coprime, positive denominator); routing through division
// normalizes unconditionally.
inline ExactRat make_rat(ExactInt num, ExactInt den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  ExactRat r(std::move(num));
  r /= ExactRat(std::move(den));
  return r;
}

// Quotient of a/b, rejecting any nonzero remainder.
inline ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
  ExactInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::logic_error("exact_div: inexact division");
  return q;
}

inline ExactInt int_pow(ExactInt base, std::uint64_t e) {
  ExactInt res = 1;
  while (e) {
    if (e & 1) res *= base;
    base *= base;
    e >>= 1;
  }
  return res;
}

// C(n,k) by the falling-factorial product; 0 outside 0 <= k <= n.
// Every intermediate division is exact: after step i the value is C(n', i).
inline ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  ExactInt res = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    res *= n + 1 - i;
    res /= i;
  }
  return res;
}

inline ExactInt central_binomial(std::int64_t n) { return binomial(2 * n, n); }

inline ExactInt catalan(std::int64_t n) {
  return exact_div(central_binomial(n), ExactInt(n + 1));
}

// S(m,n) = C(2m,m) C(2n,n) / C(m+n,m); the division is exact for all
// m, n >= 0 (integrality of these numbers is a classical fact, and
// exact_div re-checks it on every call).
inline ExactInt super_catalan(std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) throw std::domain_error("super_catalan: negative argument");
  return exact_div(central_binomial(m) * central_binomial(n), binomial(m + n, m));
}

// base^e over the rationals; e may be negative when base != 0.
inline ExactRat rat_pow(const ExactRat& base, std::int64_t e) {
  if (e == 0) return ExactRat(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    return ExactRat(0);
  }
  const bool invert = e < 0;
  std::uint64_t k = invert ? static_cast<std::uint64_t>(-(e + 1)) + 1
                           : static_cast<std::uint64_t>(e);
  ExactRat acc(1), b = base;
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return invert ? ExactRat(1) / acc : acc;
}

// Memoized Pascal triangle. Rows are appended in order and never mutated
// afterwards, so concurrent readers are safe once growth is done.
class PascalCache {
 public:
  explicit PascalCache(std::int64_t max_row = 0) { grow(max_row); }

  std::int64_t max_row() const { return static_cast<std::int64_t>(rows_.size()) - 1; }

  void grow(std::int64_t new_max_row) {
    if (new_max_row < 0) throw std::domain_error("PascalCache: negative row");
    for (auto n = static_cast<std::int64_t>(rows_.size()); n <= new_max_row; ++n) {
      std::vector<ExactInt> row(static_cast<std::size_t>(n) + 1);
      row.front() = 1;
      row.back() = 1;
      for (std::int64_t k = 1; k < n; ++k)
        row[static_cast<std::size_t>(k)] =
            rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
            rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
      rows_.push_back(std::move(row));
    }
  }

  // Requires 0 <= k <= n <= max_row().
  const ExactInt& at(std::int64_t n, std::int64_t k) const {
    return rows_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k));
  }

  // Same truncation convention as binomial(): 0 outside [0, n].
  ExactInt binomial(std::int64_t n, std::int64_t k) const {
    if (k < 0 || k > n) return 0;
    return at(n, k);
  }

 private:
  std::vector<std::vector<ExactInt>> rows_;
};

// Exact table of S(i,j) for 0 <= i,j < size. Rows are filled by the ratio
//   S(i,j+1) = S(i,j) * (4j+2) / (i+j+1)
// seeded with S(i,0) = C(2i,i); each division is checked exact, which
// re-verifies integrality entry by entry. Only the i >= j triangle is
// stored (S is symmetric).
class SuperCatalanTable {
 public:
  explicit SuperCatalanTable(std::int64_t size) : size_(size) {
    if (size < 0) throw std::domain_error("SuperCatalanTable: negative size");
    tri_.reserve(static_cast<std::size_t>(size));
    ExactInt cb = 1;  // C(2i,i), updated incrementally
    for (std::int64_t i = 0; i < size; ++i) {
      std::vector<ExactInt> row(static_cast<std::size_t>(i) + 1);
      row[0] = cb;
      for (std::int64_t j = 1; j <= i; ++j)
        row[static_cast<std::size_t>(j)] =
            exact_div(row[static_cast<std::size_t>(j - 1)] * (4 * j - 2), ExactInt(i + j));
      tri_.push_back(std::move(row));
      cb = exact_div(cb * (4 * i + 2), ExactInt(i + 1));
    }
  }

  std::int64_t size() const { return size_; }

  const ExactInt& at(std::int64_t i, std::int64_t j) const {
    if (i < j) std::swap(i, j);
    return tri_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
  }

 private:
  std::int64_t size_;
  std::vector<std::vector<ExactInt>> tri_;
};

}  // namespace supercat
