#pragma once

#include <supercat/exact.hpp>
#include <supercat/modular.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supercat {

// Weight attached to each S(i,j) term of the double sum over [0,p-1]^2.
enum class Weight { unit, linear, affine };  // 1, i+j, 3i+3j+1

inline std::string weight_tag(Weight w) {
  switch (w) {
    case Weight::unit: return "1";
    case Weight::linear: return "i+j";
    case Weight::affine: return "3i+3j+1";
  }
  throw std::logic_error("weight_tag: bad weight");
}

inline std::int64_t weight_factor(Weight w, std::int64_t i, std::int64_t j) {
  switch (w) {
    case Weight::unit: return 1;
    case Weight::linear: return i + j;
    case Weight::affine: return 3 * (i + j) + 1;
  }
  throw std::logic_error("weight_factor: bad weight");
}

// One congruence instance: lhs = rhs (mod modulus). `instance` identifies
// the member of a family ("i=2 j=3", "x=7", "k=4"); empty for standalone
// checks.
struct CongruenceCheck {
  std::string equation;
  std::int64_t prime;
  Residue lhs;
  Residue rhs;
  bool pass;
  std::string instance;
};

inline CongruenceCheck make_check(std::string equation, std::int64_t prime, Residue lhs,
                                  Residue rhs, std::string instance = {}) {
  bool pass = lhs == rhs;
  return CongruenceCheck{std::move(equation), prime, std::move(lhs), std::move(rhs), pass,
                         std::move(instance)};
}

// The four quadrant sums of the weighted double sum, split at n = (p-1)/2:
// s1 over [0,n]^2, s2 over [0,n]x[n+1,2n], s3 its mirror, s4 over
// [n+1,2n]^2. Kept exact so that s2 = s3 can be asserted as integers, not
// just mod p.
struct SplitSums {
  std::int64_t prime;
  ExactInt s1, s2, s3, s4;

  Residue r1() const { return reduce(s1, prime); }
  Residue r2() const { return reduce(s2, prime); }
  Residue r3() const { return reduce(s3, prime); }
  Residue r4() const { return reduce(s4, prime); }
};

// All congruence checks for one prime. The exact S(i,j) memo for
// i,j < p is built on first use and shared by every table-backed check;
// a suite instance belongs to one worker, and distinct primes can be
// scanned concurrently without sharing anything mutable.
class PrimeSuite {
 public:
  explicit PrimeSuite(OddPrime p) : p_(std::move(p)) {}

  const OddPrime& prime() const { return p_; }

  const SuperCatalanTable& table() const {
    if (!table_) table_.emplace(p_.value());
    return *table_;
  }

  // sum_{i,j=0}^{p-1} w(i,j) S(i,j), exact.
  ExactInt sum_exact(Weight w) const {
    const std::int64_t p = p_.value();
    ExactInt total = 0;
    for (std::int64_t i = 0; i < p; ++i)
      for (std::int64_t j = 0; j < p; ++j)
        total += table().at(i, j) * weight_factor(w, i, j);
    return total;
  }

  Residue sum_mod(Weight w) const { return reduce(sum_exact(w), p_.value()); }

  // sum S(i,j) = (p/3)  (mod p), every odd prime.
  CongruenceCheck check_total_sum() const {
    return make_check("total", p_.value(), sum_mod(Weight::unit), legendre_residue());
  }

  // sum (i+j) S(i,j) = -8/3 (p/3)  (mod p), p >= 5.
  CongruenceCheck check_weighted_sum() const {
    require_at_least_5("weighted-total");
    Residue rhs = reduce_rat(make_rat(-8, 3), p_) * legendre_residue();
    return make_check("weighted-total", p_.value(), sum_mod(Weight::linear), rhs);
  }

  // sum (3i+3j+1) S(i,j) = -7 (p/3)  (mod p), every odd prime.
  CongruenceCheck check_affine_sum() const {
    Residue rhs = p_.residue(-7) * legendre_residue();
    return make_check("affine-total", p_.value(), sum_mod(Weight::affine), rhs);
  }

  // Linear recombination of the other two sums: 3 sum(i+j)S + sum S
  // must land on -7 (p/3) as well (3 * (-8/3) + 1 = -7). p >= 5.
  CongruenceCheck check_affine_recombination() const {
    require_at_least_5("affine-recomb");
    Residue lhs = p_.residue(3) * sum_mod(Weight::linear) + sum_mod(Weight::unit);
    Residue rhs = p_.residue(-7) * legendre_residue();
    return make_check("affine-recomb", p_.value(), lhs, rhs);
  }

  SplitSums split_sums(Weight w) const {
    const std::int64_t n = p_.n_half();
    SplitSums s{p_.value(), 0, 0, 0, 0};
    for (std::int64_t i = 0; i <= n; ++i)
      for (std::int64_t j = 0; j <= n; ++j) s.s1 += table().at(i, j) * weight_factor(w, i, j);
    for (std::int64_t i = 0; i <= n; ++i)
      for (std::int64_t j = n + 1; j <= 2 * n; ++j)
        s.s2 += table().at(i, j) * weight_factor(w, i, j);
    for (std::int64_t i = n + 1; i <= 2 * n; ++i)
      for (std::int64_t j = 0; j <= n; ++j) s.s3 += table().at(i, j) * weight_factor(w, i, j);
    for (std::int64_t i = n + 1; i <= 2 * n; ++i)
      for (std::int64_t j = n + 1; j <= 2 * n; ++j)
        s.s4 += table().at(i, j) * weight_factor(w, i, j);
    return s;
  }

  // Quadrant bookkeeping mod p: the four pieces add back up, the corner
  // piece vanishes, and the whole sum folds to s1 + 2 s2.
  std::vector<CongruenceCheck> check_quadrants(Weight w) const {
    const SplitSums s = split_sums(w);
    const Residue total = sum_mod(w);
    const std::string tag = "[" + weight_tag(w) + "]";
    std::vector<CongruenceCheck> out;
    out.push_back(make_check("quadrants-add" + tag, p_.value(),
                             s.r1() + s.r2() + s.r3() + s.r4(), total));
    out.push_back(make_check("quadrant-corner" + tag, p_.value(), s.r4(), p_.residue(0)));
    out.push_back(
        make_check("quadrant-fold" + tag, p_.value(), total, s.r1() + p_.residue(2) * s.r2()));
    return out;
  }

  // Closed forms of the first quadrant sum:
  //   weight 1:    S1 = 2(-1)^n - (p/3)        (mod p), p >= 3
  //   weight i+j:  S1 = 8/3 (p/3) - 4(-1)^n    (mod p), p >= 5
  CongruenceCheck check_s1_closed(Weight w) const {
    const std::string eq = "S1-closed[" + weight_tag(w) + "]";
    Residue rhs = p_.residue(0);
    if (w == Weight::unit) {
      rhs = p_.residue(2) * sign_n() - legendre_residue();
    } else if (w == Weight::linear) {
      rhs = reduce_rat(make_rat(8, 3), p_) * legendre_residue() - p_.residue(4) * sign_n();
    } else {
      throw std::domain_error("check_s1_closed: no closed form for this weight");
    }
    return make_check(eq, p_.value(), split_sums(w).r1(), rhs);
  }

  // Closed forms of the mixed quadrant sum:
  //   weight 1:    S2 = (p/3) - (-1)^n         (mod p), p >= 3
  //   weight i+j:  S2 = 2(-1)^n - 8/3 (p/3)    (mod p), p >= 5
  CongruenceCheck check_s2_closed(Weight w) const {
    const std::string eq = "S2-closed[" + weight_tag(w) + "]";
    Residue rhs = p_.residue(0);
    if (w == Weight::unit) {
      rhs = legendre_residue() - sign_n();
    } else if (w == Weight::linear) {
      rhs = p_.residue(2) * sign_n() - reduce_rat(make_rat(8, 3), p_) * legendre_residue();
    } else {
      throw std::domain_error("check_s2_closed: no closed form for this weight");
    }
    return make_check(eq, p_.value(), split_sums(w).r2(), rhs);
  }

  // Both weights at once; the linear halves need p >= 5 (denominator 3).
  std::pair<CongruenceCheck, CongruenceCheck> check_s1_closed_forms() const {
    return {check_s1_closed(Weight::unit), check_s1_closed(Weight::linear)};
  }
  std::pair<CongruenceCheck, CongruenceCheck> check_s2_closed_forms() const {
    return {check_s2_closed(Weight::unit), check_s2_closed(Weight::linear)};
  }

  // Substituting the closed forms back into the fold S1 + 2 S2 must
  // reproduce the right-hand side of the corresponding headline sum.
  CongruenceCheck check_closed_recombination(Weight w) const {
    const std::string eq = "closed-recomb[" + weight_tag(w) + "]";
    if (w == Weight::unit) {
      Residue lhs = (p_.residue(2) * sign_n() - legendre_residue()) +
                    p_.residue(2) * (legendre_residue() - sign_n());
      return make_check(eq, p_.value(), lhs, legendre_residue());
    }
    if (w == Weight::linear) {
      const Residue eight_thirds = reduce_rat(make_rat(8, 3), p_);
      Residue lhs = (eight_thirds * legendre_residue() - p_.residue(4) * sign_n()) +
                    p_.residue(2) *
                        (p_.residue(2) * sign_n() - eight_thirds * legendre_residue());
      Residue rhs = reduce_rat(make_rat(-8, 3), p_) * legendre_residue();
      return make_check(eq, p_.value(), lhs, rhs);
    }
    throw std::domain_error("check_closed_recombination: no closed form for this weight");
  }

  // Pointwise lemmas behind the quadrant estimates, every valid instance:
  //   cb-to-binom:      C(2i,i) = (-4)^i C(n,i)            (mod p), 0 <= i <= n
  //   upper-band-zero:  S(i,j+n) = 0                        (mod p), i+j <= n, 1 <= j <= n
  //   upper-band-closed S(i,j+n) = (-1)^i 4^{i+j} C(j-1,n-i)/2
  //                                                         (mod p), i+j >= n+1
  //   binom-half-shift: C(n+j,j) = C(2j,j) / 4^j            (mod p), 1 <= j <= n
  std::vector<CongruenceCheck> check_pointwise_lemmas() const {
    const std::int64_t n = p_.n_half();
    std::vector<CongruenceCheck> out;

    Residue pow_m4 = p_.residue(1);  // (-4)^i
    for (std::int64_t i = 0; i <= n; ++i) {
      out.push_back(make_check("cb-to-binom", p_.value(), binom_mod(2 * i, i, p_),
                               pow_m4 * binom_mod(n, i, p_), "i=" + std::to_string(i)));
      pow_m4 = pow_m4 * p_.residue(-4);
    }

    for (std::int64_t j = 1; j <= n; ++j)
      for (std::int64_t i = 0; i + j <= n; ++i)
        out.push_back(make_check("upper-band-zero", p_.value(),
                                 reduce(table().at(i, j + n), p_.value()), p_.residue(0),
                                 "i=" + std::to_string(i) + " j=" + std::to_string(j)));

    const Residue inv2 = inverse(p_.residue(2));
    for (std::int64_t j = 1; j <= n; ++j) {
      for (std::int64_t i = 0; i <= n; ++i) {
        if (i + j < n + 1) continue;
        Residue rhs = pow_mod(p_.residue(4), static_cast<std::uint64_t>(i + j)) *
                      binom_mod(j - 1, n - i, p_) * inv2;
        if (i & 1) rhs = -rhs;
        out.push_back(make_check("upper-band-closed", p_.value(),
                                 reduce(table().at(i, j + n), p_.value()), rhs,
                                 "i=" + std::to_string(i) + " j=" + std::to_string(j)));
      }
    }

    const Residue inv4 = inverse(p_.residue(4));
    Residue inv4_j = inv4;
    for (std::int64_t j = 1; j <= n; ++j) {
      out.push_back(make_check("binom-half-shift", p_.value(), binom_mod(n + j, j, p_),
                               binom_mod(2 * j, j, p_) * inv4_j, "j=" + std::to_string(j)));
      inv4_j = inv4_j * inv4;
    }
    return out;
  }

  // Truncated series values feeding the closed forms:
  //   catalan-qseries: sum_{k<=n} C_k (-3/4)^{k+1} = -3/2   (mod p), p >= 5
  //   cb-qseries:      sum_{k<=n} C(2k,k) (-3/4)^k = 1      (mod p), p >= 5
  //   catalan-top:     C_{p-1} = -1                          (mod p)
  //   cb-middle:       C(2n,n) = (-1)^n                      (mod p)
  std::vector<CongruenceCheck> check_partial_sums() const {
    const std::int64_t p = p_.value();
    const std::int64_t n = p_.n_half();
    std::vector<CongruenceCheck> out;

    if (p >= 5) {
      const Residue q = p_.residue(-3) * inverse(p_.residue(4));
      const Residue inv2 = inverse(p_.residue(2));
      Residue csum = p_.residue(0), bsum = p_.residue(0);
      Residue cpow = q, bpow = p_.residue(1);
      for (std::int64_t k = 0; k <= n; ++k) {
        const Residue cb = binom_mod(2 * k, k, p_);
        csum = csum + cb * inverse(p_.residue(k + 1)) * cpow;  // C_k (-3/4)^{k+1}
        bsum = bsum + cb * bpow;
        cpow = cpow * q;
        bpow = bpow * q;
      }
      out.push_back(make_check("catalan-qseries", p, csum, p_.residue(-3) * inv2));
      out.push_back(make_check("cb-qseries", p, bsum, p_.residue(1)));
    }

    out.push_back(make_check("catalan-top", p, reduce(catalan(p - 1), p), p_.residue(-1)));
    out.push_back(make_check("cb-middle", p, binom_mod(2 * n, n, p_), sign_n()));
    return out;
  }

  // Generating-function congruences at every point x in [0, p), q = p^e:
  //   cb-gf:      sum_{k<q} C(2k,k) x^k = (1-4x)^{(q-1)/2}               (mod p)
  //   catalan-gf: sum_{k<q} C_k x^{k+1} = (1-(1-4x)^{(q+1)/2})/2 - x^q   (mod p)
  // Central binomials and Catalan numbers with 2k >= p are reduced from
  // exact integers; there is no modular shortcut past that wall.
  std::vector<CongruenceCheck> check_series_pointwise(int e) const {
    const std::int64_t p = p_.value();
    const std::int64_t q = pow_int(p, e);
    const std::string suffix = e == 1 ? "[q=p]" : "[q=p^" + std::to_string(e) + "]";

    std::vector<std::int64_t> cb_mod, cat_mod;
    central_rows_mod(q, cb_mod, cat_mod);

    const Residue inv2 = inverse(p_.residue(2));
    std::vector<CongruenceCheck> out;
    for (std::int64_t x = 0; x < p; ++x) {
      const Residue rx = p_.residue(x);
      Residue cb_sum = p_.residue(0), cat_sum = p_.residue(0);
      Residue xpow = p_.residue(1);  // x^k
      for (std::int64_t k = 0; k < q; ++k) {
        cb_sum = cb_sum + p_.residue(cb_mod[static_cast<std::size_t>(k)]) * xpow;
        xpow = xpow * rx;
        cat_sum = cat_sum + p_.residue(cat_mod[static_cast<std::size_t>(k)]) * xpow;
      }
      const Residue base = p_.residue(1) - p_.residue(4) * rx;
      const Residue cb_rhs = pow_mod(base, static_cast<std::uint64_t>((q - 1) / 2));
      const Residue cat_rhs =
          (p_.residue(1) - pow_mod(base, static_cast<std::uint64_t>((q + 1) / 2))) * inv2 -
          pow_mod(rx, static_cast<std::uint64_t>(q));
      const std::string inst = "x=" + std::to_string(x);
      out.push_back(make_check("cb-gf" + suffix, p, cb_sum, cb_rhs, inst));
      out.push_back(make_check("catalan-gf" + suffix, p, cat_sum, cat_rhs, inst));
    }
    return out;
  }

  // Coefficient-by-coefficient form of the cb generating function:
  // C(2k,k) = [x^k] (1-4x)^{(q-1)/2} (mod p) for every k < q, which pins
  // C(2k,k) = 0 for (q-1)/2 < k < q.
  std::vector<CongruenceCheck> check_series_coefficientwise(int e) const {
    const std::int64_t p = p_.value();
    const std::int64_t q = pow_int(p, e);
    const std::int64_t m = (q - 1) / 2;
    const std::string suffix = e == 1 ? "[q=p]" : "[q=p^" + std::to_string(e) + "]";

    std::vector<std::int64_t> cb_mod, cat_mod;
    central_rows_mod(q, cb_mod, cat_mod);

    std::vector<CongruenceCheck> out;
    ExactInt coeff = 1;  // C(m,k), exact
    Residue pow_m4 = p_.residue(1);
    for (std::int64_t k = 0; k < q; ++k) {
      const Residue rhs = reduce(coeff, p) * pow_m4;
      out.push_back(make_check("cb-gf-coeff" + suffix, p,
                               p_.residue(cb_mod[static_cast<std::size_t>(k)]), rhs,
                               "k=" + std::to_string(k)));
      pow_m4 = pow_m4 * p_.residue(-4);
      coeff = k < m ? exact_div(coeff * (m - k), ExactInt(k + 1)) : ExactInt(0);
    }
    return out;
  }

  // Full-row sums mod p^2, p >= 5:
  //   cb-sum-modp2:      sum_{k<p} C(2k,k) = (p/3)              (mod p^2)
  //   catalan-sum-modp2: sum_{k<p} C_k = 3/2 (p/3) - 1/2        (mod p^2)
  std::pair<CongruenceCheck, CongruenceCheck> check_sums_mod_p_squared() const {
    require_at_least_5("sums mod p^2");
    const std::int64_t p = p_.value();
    const std::int64_t p2 = p * p;
    ExactInt cb_sum = 0, cat_sum = 0, cb = 1;
    for (std::int64_t k = 0; k < p; ++k) {
      cb_sum += cb;
      cat_sum += exact_div(cb, ExactInt(k + 1));
      cb = exact_div(cb * (4 * k + 2), ExactInt(k + 1));
    }
    const Residue ell(legendre3(p_), p2);
    CongruenceCheck first = make_check("cb-sum-modp2", p, reduce(cb_sum, p2), ell);
    Residue rhs = reduce_rat(make_rat(3, 2), p2) * ell - reduce_rat(make_rat(1, 2), p2);
    CongruenceCheck second = make_check("catalan-sum-modp2", p, reduce(cat_sum, p2), rhs);
    return {std::move(first), std::move(second)};
  }

  Residue legendre_residue() const { return p_.residue(legendre3(p_)); }

  // (-1)^n mod p with n = (p-1)/2.
  Residue sign_n() const { return p_.residue(p_.n_half() % 2 == 0 ? 1 : -1); }

 private:
  void require_at_least_5(const char* what) const {
    if (p_.value() < 5) throw PrimeTooSmall(std::string(what) + ": requires p >= 5");
  }

  static std::int64_t pow_int(std::int64_t base, int e) {
    if (e < 1) throw std::domain_error("pow_int: exponent must be >= 1");
    std::int64_t r = 1;
    for (int t = 0; t < e; ++t) {
      r *= base;
      if (r > 10000) throw std::domain_error("q = p^e exceeds the 10^4 scan bound");
    }
    return r;
  }

  // C(2k,k) mod p and C_k mod p for k < q, via exact incremental rows.
  void central_rows_mod(std::int64_t q, std::vector<std::int64_t>& cb_mod,
                        std::vector<std::int64_t>& cat_mod) const {
    const std::int64_t p = p_.value();
    cb_mod.resize(static_cast<std::size_t>(q));
    cat_mod.resize(static_cast<std::size_t>(q));
    ExactInt cb = 1;
    for (std::int64_t k = 0; k < q; ++k) {
      cb_mod[static_cast<std::size_t>(k)] = reduce(cb, p).value();
      cat_mod[static_cast<std::size_t>(k)] = reduce(exact_div(cb, ExactInt(k + 1)), p).value();
      cb = exact_div(cb * (4 * k + 2), ExactInt(k + 1));
    }
  }

  OddPrime p_;
  mutable std::optional<SuperCatalanTable> table_;
};

}  // namespace supercat
