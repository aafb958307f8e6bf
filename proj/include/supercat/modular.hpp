#pragma once

#include <supercat/exact.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercat {

struct NotAPrime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotInvertible : std::domain_error {
  using std::domain_error::domain_error;
};
struct DenominatorDivisibleByP : std::domain_error {
  using std::domain_error::domain_error;
};
struct PrimeTooSmall : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {
inline std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}
inline std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod_u64(r, a, m);
    a = mul_mod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}
}  // namespace detail

// Deterministic Miller-Rabin; the witness set {2,3,5,7} is exact for all
// n < 3'215'031'751, far beyond the p < 10^4 scan range.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  if (n >= 3215031751ull) throw std::domain_error("is_prime: beyond certified witness range");
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = detail::pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mul_mod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Canonical element of Z/mZ. Arithmetic is only defined between equal
// moduli; mixing them is a logic error, not a math result.
class Residue {
 public:
  Residue(std::int64_t value, std::int64_t modulus) : m_(modulus) {
    if (modulus < 2) throw std::domain_error("Residue: modulus must be >= 2");
    v_ = value % m_;
    if (v_ < 0) v_ += m_;
  }

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return m_; }

  // Signed representative in (-m/2, m/2].
  std::int64_t signed_value() const { return v_ > m_ / 2 ? v_ - m_ : v_; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.m_ == b.m_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

  friend Residue operator+(const Residue& a, const Residue& b) {
    check_same(a, b);
    return Residue(a.v_ + b.v_ >= a.m_ ? a.v_ + b.v_ - a.m_ : a.v_ + b.v_, a.m_);
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    check_same(a, b);
    return Residue(a.v_ - b.v_, a.m_);
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    check_same(a, b);
    // moduli stay <= 10^8, so the product fits comfortably in int64
    return Residue(a.v_ * b.v_ % a.m_, a.m_);
  }
  Residue operator-() const { return Residue(-v_, m_); }

 private:
  static void check_same(const Residue& a, const Residue& b) {
    if (a.m_ != b.m_) throw std::logic_error("Residue: mixed moduli");
  }
  std::int64_t v_;
  std::int64_t m_;
};

inline Residue pow_mod(const Residue& a, std::uint64_t e) {
  std::uint64_t m = static_cast<std::uint64_t>(a.modulus());
  return Residue(static_cast<std::int64_t>(
                     detail::pow_mod_u64(static_cast<std::uint64_t>(a.value()), e, m)),
                 a.modulus());
}

inline Residue inverse(const Residue& a) {
  // extended Euclid on (value, modulus)
  std::int64_t r0 = a.modulus(), r1 = a.value();
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1)
    throw NotInvertible("inverse: " + std::to_string(a.value()) + " mod " +
                        std::to_string(a.modulus()));
  return Residue(t0, a.modulus());
}

inline Residue reduce(const ExactInt& x, std::int64_t m) {
  if (m < 2) throw std::domain_error("reduce: modulus must be >= 2");
  ExactInt r = x % m;
  auto v = r.convert_to<std::int64_t>();
  return Residue(v, m);
}

// num * den^{-1} mod m; the denominator of a reduced ExactRat must be a
// unit mod m for the congruence to mean anything.
inline Residue reduce_rat(const ExactRat& x, std::int64_t m) {
  const ExactInt den = denominator(x);
  if (boost::multiprecision::gcd(den, ExactInt(m)) != 1)
    throw DenominatorDivisibleByP("reduce_rat: denominator " + den.str() +
                                  " shares a factor with modulus " + std::to_string(m));
  return reduce(numerator(x), m) * inverse(reduce(den, m));
}

// Odd prime with factorial tables; everything is immutable after
// construction so a value can back any number of concurrent checks.
class OddPrime {
 public:
  explicit OddPrime(std::int64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
      throw NotAPrime("OddPrime: " + std::to_string(p) + " is not an odd prime");
    fact_.resize(static_cast<std::size_t>(p));
    inv_fact_.resize(static_cast<std::size_t>(p));
    fact_[0] = 1;
    for (std::int64_t k = 1; k < p; ++k)
      fact_[static_cast<std::size_t>(k)] = fact_[static_cast<std::size_t>(k - 1)] * k % p;
    inv_fact_[static_cast<std::size_t>(p - 1)] =
        inverse(Residue(fact_[static_cast<std::size_t>(p - 1)], p)).value();
    for (std::int64_t k = p - 1; k > 0; --k)
      inv_fact_[static_cast<std::size_t>(k - 1)] =
          inv_fact_[static_cast<std::size_t>(k)] * k % p;
  }

  std::int64_t value() const { return p_; }
  std::int64_t n_half() const { return (p_ - 1) / 2; }

  Residue fact(std::int64_t k) const { return Residue(fact_.at(static_cast<std::size_t>(k)), p_); }
  Residue inv_fact(std::int64_t k) const {
    return Residue(inv_fact_.at(static_cast<std::size_t>(k)), p_);
  }

  Residue residue(std::int64_t v) const { return Residue(v, p_); }

 private:
  std::int64_t p_;
  std::vector<std::int64_t> fact_;
  std::vector<std::int64_t> inv_fact_;
};

inline Residue reduce_rat(const ExactRat& x, const OddPrime& p) {
  return reduce_rat(x, p.value());
}

// Legendre symbol of p modulo 3: +1 for p = 1 (mod 3), -1 for p = 2 (mod 3),
// 0 for p = 3.
inline int legendre3(std::int64_t p) {
  switch (p % 3) {
    case 0: return 0;
    case 1: return +1;
    default: return -1;
  }
}
inline int legendre3(const OddPrime& p) { return legendre3(p.value()); }

// C(n,k) mod p through the factorial tables; requires 0 <= n < p.
inline Residue binom_mod(std::int64_t n, std::int64_t k, const OddPrime& p) {
  if (n < 0 || n >= p.value()) throw std::domain_error("binom_mod: n outside [0, p)");
  if (k < 0 || k > n) return Residue(0, p.value());
  return p.fact(n) * p.inv_fact(k) * p.inv_fact(n - k);
}

}  // namespace supercat
