#pragma once

#include <supercat/exact.hpp>
#include <supercat/record.hpp>

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace supercat {

// Exact rational verification of two hypergeometric double-sum identities
// and of the third-order recurrences both of their sides satisfy.
//
// Plain identity:
//   sum_{i,j=0}^{n} (-4)^{i+j} C(n,i) C(n,j) / C(i+j,i)
//     = (-3)^n (2n-1) / (4(n+1))
//       + (4^n / C(2n,n)) (1/2 - sum_{k=0}^{n} C_k (-3/4)^{k+1})
//
// Weighted identity:
//   sum_{i,j=0}^{n} (-4)^{i+j} (i+j) C(n,i) C(n,j) / C(i+j,i)
//     = 16n (-3)^{n-1} + (8n 4^n / C(2n,n)) sum_{k=0}^{n} C(2k,k) (-3/4)^k

namespace detail {
// Terms of both double sums share everything except the i+j weight.
inline ExactRat double_sum(std::int64_t n, bool weighted) {
  if (n < 0) throw std::domain_error("double_sum: negative index");
  PascalCache pc(2 * n);
  std::vector<ExactInt> pow4(static_cast<std::size_t>(2 * n) + 1);
  pow4[0] = 1;
  for (std::size_t t = 1; t < pow4.size(); ++t) pow4[t] = pow4[t - 1] * 4;
  ExactRat sum(0);
  for (std::int64_t i = 0; i <= n; ++i) {
    for (std::int64_t j = 0; j <= n; ++j) {
      ExactInt num = pc.at(n, i) * pc.at(n, j) * pow4[static_cast<std::size_t>(i + j)];
      if ((i + j) & 1) num = -num;
      if (weighted) num *= i + j;
      sum += make_rat(std::move(num), pc.at(i + j, i));
    }
  }
  return sum;
}
}  // namespace detail

inline ExactRat double_sum_plain(std::int64_t n) { return detail::double_sum(n, false); }
inline ExactRat double_sum_weighted(std::int64_t n) { return detail::double_sum(n, true); }

inline ExactRat closed_form_plain(std::int64_t n) {
  if (n < 0) throw std::domain_error("closed_form_plain: negative index");
  ExactRat head = make_rat(int_pow(-3, static_cast<std::uint64_t>(n)) * (2 * n - 1),
                           ExactInt(4 * (n + 1)));
  const ExactRat q = make_rat(-3, 4);
  ExactRat csum(0), power = q;  // power = (-3/4)^{k+1}
  ExactInt cat = 1;             // C_k, updated via C_{k+1} = C_k 2(2k+1)/(k+2)
  for (std::int64_t k = 0; k <= n; ++k) {
    csum += ExactRat(cat) * power;
    power *= q;
    cat = exact_div(cat * (4 * k + 2), ExactInt(k + 2));
  }
  ExactRat tail = make_rat(int_pow(4, static_cast<std::uint64_t>(n)), central_binomial(n)) *
                  (make_rat(1, 2) - csum);
  return head + tail;
}

inline ExactRat closed_form_weighted(std::int64_t n) {
  if (n < 0) throw std::domain_error("closed_form_weighted: negative index");
  // both terms carry the explicit factor n, so the n = 0 value is 0 and
  // (-3)^{n-1} never needs evaluating there
  if (n == 0) return ExactRat(0);
  ExactRat head = ExactRat(16 * n) * rat_pow(ExactRat(-3), n - 1);
  const ExactRat q = make_rat(-3, 4);
  ExactRat bsum(0), power(1);  // power = (-3/4)^k
  ExactInt cb = 1;             // C(2k,k)
  for (std::int64_t k = 0; k <= n; ++k) {
    bsum += ExactRat(cb) * power;
    power *= q;
    cb = exact_div(cb * (4 * k + 2), ExactInt(k + 1));
  }
  ExactRat tail = make_rat(ExactInt(8 * n) * int_pow(4, static_cast<std::uint64_t>(n)),
                           central_binomial(n)) *
                  bsum;
  return head + tail;
}

// Inner-sum closed form used by the weighted quadrant estimate: for
// 1 <= j <= n,
//   sum_{i=0}^{n} (2n+j-i) C(j-1,i) (-1/4)^i
//     = (2n+j)(3/4)^{j-1} + ((j-1)/4)(3/4)^{j-2}.
// Returns (direct sum, closed form); callers assert equality.
inline std::pair<ExactRat, ExactRat> inner_sum_pair(std::int64_t n, std::int64_t j) {
  if (j < 1 || j > n) throw std::domain_error("inner_sum_pair: requires 1 <= j <= n");
  const ExactRat mq = make_rat(-1, 4);
  ExactRat direct(0), power(1);
  for (std::int64_t i = 0; i <= n; ++i) {
    direct += ExactRat(binomial(j - 1, i) * (2 * n + j - i)) * power;
    power *= mq;
  }
  const ExactRat tq = make_rat(3, 4);
  ExactRat closed = ExactRat(2 * n + j) * rat_pow(tq, j - 1);
  // the second term carries the factor j-1; short-circuit it at j = 1 so
  // (3/4)^{j-2} is never raised to a negative power along a zero branch
  if (j > 1) closed += make_rat(j - 1, 4) * rat_pow(tq, j - 2);
  return {std::move(direct), std::move(closed)};
}

// One side of an identity: a total map from index to exact value.
struct IdentitySide {
  std::string name;
  std::function<ExactRat(std::int64_t)> eval;
};

// s(n+3) coefficient never vanishes for n >= 0 in either recurrence, so
// three initial values pin the whole sequence on any checked window.
struct RecurrenceSpec {
  std::string name;
  int order = 3;
  std::function<ExactInt(int j, std::int64_t n)> coeff;  // coefficient of s(n+j)
};

inline IdentitySide side_double_sum_plain() { return {"dsum-plain", &double_sum_plain}; }
inline IdentitySide side_closed_form_plain() { return {"closed-plain", &closed_form_plain}; }
inline IdentitySide side_double_sum_weighted() { return {"dsum-weighted", &double_sum_weighted}; }
inline IdentitySide side_closed_form_weighted() {
  return {"closed-weighted", &closed_form_weighted};
}

inline const RecurrenceSpec& recurrence_plain() {
  static const RecurrenceSpec spec{
      "rec-plain", 3, [](int j, std::int64_t n) -> ExactInt {
        switch (j) {
          case 0: return ExactInt(-18 * (n + 1));
          case 1: return ExactInt(3 * (2 * n - 5));
          case 2: return ExactInt(2 * (5 * n + 6));
          case 3: return ExactInt(2 * n + 5);
          default: throw std::domain_error("recurrence_plain: bad coefficient index");
        }
      }};
  return spec;
}

inline const RecurrenceSpec& recurrence_weighted() {
  static const RecurrenceSpec spec{
      "rec-weighted", 3, [](int j, std::int64_t n) -> ExactInt {
        switch (j) {
          case 0: return ExactInt(-6 * (n + 1)) * (581 * n + 793);
          case 1: return ExactInt(818 * n * n - 6653 * n - 9936);
          case 2: return ExactInt(2166 * n * n + 3474 * n + 2898);
          case 3: return ExactInt(2 * n + 5) * (251 * n + 92);
          default: throw std::domain_error("recurrence_weighted: bad coefficient index");
        }
      }};
  return spec;
}

inline std::string render_rat(const ExactRat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// One record per n in [0, n_max]; pass iff the two sides agree exactly.
inline std::vector<VerificationRecord> check_identity(const IdentitySide& lhs,
                                                      const IdentitySide& rhs,
                                                      std::int64_t n_max,
                                                      const std::string& equation) {
  std::vector<VerificationRecord> out;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    ExactRat l = lhs.eval(n), r = rhs.eval(n);
    VerificationRecord rec;
    rec.equation = equation;
    rec.prime_or_index = n;
    rec.lhs = render_rat(l);
    rec.rhs = render_rat(r);
    rec.pass = l == r;
    if (!rec.pass)
      rec.witness = "n=" + std::to_string(n) + " lhs=" + rec.lhs + " rhs=" + rec.rhs;
    out.push_back(std::move(rec));
  }
  return out;
}

// Pass at n iff sum_{j=0}^{3} coeff(j,n) seq(n+j) == 0 exactly.
inline std::vector<VerificationRecord> check_recurrence(const IdentitySide& seq,
                                                        const RecurrenceSpec& rec,
                                                        std::int64_t n_max) {
  std::vector<ExactRat> values;
  values.reserve(static_cast<std::size_t>(n_max) + 4);
  for (std::int64_t n = 0; n <= n_max + rec.order; ++n) values.push_back(seq.eval(n));
  std::vector<VerificationRecord> out;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    ExactRat acc(0);
    for (int j = 0; j <= rec.order; ++j)
      acc += ExactRat(rec.coeff(j, n)) * values[static_cast<std::size_t>(n + j)];
    VerificationRecord r;
    r.equation = rec.name + ":" + seq.name;
    r.prime_or_index = n;
    r.lhs = render_rat(acc);
    r.rhs = "0";
    r.pass = acc == 0;
    if (!r.pass) r.witness = "n=" + std::to_string(n) + " combination=" + r.lhs;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace supercat
