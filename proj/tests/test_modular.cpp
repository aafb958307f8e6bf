#include <supercat/modular.hpp>

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace supercat;

namespace {
bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n <= 3000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
  CHECK(is_prime(9973));
  CHECK_FALSE(is_prime(9991));  // 97 * 103
}

TEST_CASE("reduce canonicalizes") {
  CHECK(reduce(ExactInt(-1), 5).value() == 4);
  CHECK(reduce(ExactInt(99), 25).value() == 24);
  CHECK(reduce(ExactInt(33), 3).value() == 0);
  // 10^30 = 3^30 = (3^6)^5 = 1 (mod 7), so -10^30 = 6
  CHECK(reduce(-int_pow(10, 30), 7).value() == 6);
}

TEST_CASE("residue arithmetic") {
  Residue a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((-a).value() == 4);
  CHECK(Residue(-10, 7).value() == 4);
  CHECK(a.signed_value() == 3);
  CHECK(Residue(6, 7).signed_value() == -1);
  CHECK_THROWS_AS(a + Residue(1, 11), std::logic_error);
  CHECK_THROWS_AS(Residue(0, 1), std::domain_error);
}

TEST_CASE("inverse") {
  CHECK(inverse(Residue(3, 7)).value() == 5);
  CHECK(inverse(Residue(1, 101)).value() == 1);
  CHECK(inverse(Residue(4, 25)).value() == 19);  // 4*19 = 76 = 3*25 + 1
  CHECK_THROWS_AS(inverse(Residue(0, 7)), NotInvertible);
  CHECK_THROWS_AS(inverse(Residue(5, 25)), NotInvertible);
}

TEST_CASE("reduce_rat") {
  OddPrime p5(5), p7(7), p3(3);
  CHECK(reduce_rat(make_rat(-8, 3), p5).value() == 4);  // -8 * inv(3) = -16 = -1 (mod 5)
  CHECK(reduce_rat(make_rat(1, 2), p7).value() == 4);
  CHECK_THROWS_AS(reduce_rat(make_rat(-8, 3), p3), DenominatorDivisibleByP);
  // p^2 modulus path
  CHECK(reduce_rat(make_rat(3, 2), 25).value() == 14);  // 3 * inv(2) = 3 * 13 = 39 = 14
}

TEST_CASE("legendre3") {
  CHECK(legendre3(7) == 1);
  CHECK(legendre3(5) == -1);
  CHECK(legendre3(3) == 0);
  for (std::int64_t p = 2; p < 1000; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    CHECK(legendre3(p) == oracle::legendre3_euler(p));
  }
}

TEST_CASE("binom_mod") {
  OddPrime p7(7);
  CHECK(binom_mod(4, 2, p7).value() == 6);
  CHECK(binom_mod(6, 3, p7).value() == 6);  // 20 mod 7
  CHECK(binom_mod(3, 5, p7).value() == 0);
  CHECK(binom_mod(3, -1, p7).value() == 0);
  CHECK_THROWS_AS(binom_mod(7, 2, p7), std::domain_error);
}

TEST_CASE("binom_mod agrees with exact reduction") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                         71, 73, 79, 83, 89, 97}) {
    OddPrime prime(p);
    for (std::int64_t n = 0; n < p; ++n)
      for (std::int64_t k = 0; k <= n; ++k)
        CHECK(binom_mod(n, k, prime) == reduce(binomial(n, k), p));
  }
}

TEST_CASE("pow_mod") {
  CHECK(pow_mod(Residue(4, 5), 2).value() == 1);
  CHECK(pow_mod(Residue(9, 13), 0).value() == 1);
  CHECK(pow_mod(Residue(2, 7), 3).value() == 1);
  CHECK(pow_mod(Residue(0, 7), 5).value() == 0);
}

TEST_CASE("OddPrime factorial tables") {
  for (std::int64_t p = 3; p < 300; p += 2) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    OddPrime prime(p);
    CHECK(prime.n_half() == (p - 1) / 2);
    for (std::int64_t k = 0; k < p; ++k)
      CHECK((prime.fact(k) * prime.inv_fact(k)).value() == 1);
    // Wilson: (p-1)! = -1 (mod p)
    CHECK(prime.fact(p - 1).value() == p - 1);
  }
}

TEST_CASE("OddPrime rejects non-primes and evens") {
  CHECK_THROWS_AS(OddPrime(1), NotAPrime);
  CHECK_THROWS_AS(OddPrime(2), NotAPrime);
  CHECK_THROWS_AS(OddPrime(9), NotAPrime);
  CHECK_THROWS_AS(OddPrime(15), NotAPrime);
  CHECK_NOTHROW(OddPrime(9973));
}
