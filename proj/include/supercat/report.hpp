#pragma once

#include <supercat/congruences.hpp>
#include <supercat/identities.hpp>
#include <supercat/record.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace supercat {

enum class Suite {
  thm11,
  thm12,
  conj14,
  split,
  lemmas,
  mt,
  sun_tauraso,
  identity_b1,
  identity_c1,
  recurrences,
};

inline const std::vector<std::pair<Suite, std::string>>& suite_names() {
  static const std::vector<std::pair<Suite, std::string>> names = {
      {Suite::thm11, "thm11"},
      {Suite::thm12, "thm12"},
      {Suite::conj14, "conj14"},
      {Suite::split, "split"},
      {Suite::lemmas, "lemmas"},
      {Suite::mt, "mt"},
      {Suite::sun_tauraso, "sun_tauraso"},
      {Suite::identity_b1, "identity_b1"},
      {Suite::identity_c1, "identity_c1"},
      {Suite::recurrences, "recurrences"},
  };
  return names;
}

inline std::string to_string(Suite s) {
  for (const auto& [suite, name] : suite_names())
    if (suite == s) return name;
  throw std::logic_error("to_string: bad suite");
}

inline Suite suite_from_string(const std::string& name) {
  for (const auto& [suite, n] : suite_names())
    if (n == name) return suite;
  throw std::invalid_argument("unknown suite: " + name);
}

inline std::set<Suite> all_suites() {
  std::set<Suite> out;
  for (const auto& [suite, name] : suite_names()) out.insert(suite);
  return out;
}

enum class OutputFormat { json, csv, text };

inline std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  throw std::logic_error("to_string: bad format");
}

inline OutputFormat format_from_string(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown format: " + name);
}

struct ScanConfig {
  std::int64_t prime_min = 3;
  std::int64_t prime_max = 299;
  std::set<Suite> suites = all_suites();
  std::int64_t identity_n_max = 60;
  int jobs = 1;
  OutputFormat format = OutputFormat::text;
  std::string out_path;  // empty = stdout
  bool self_test = false;

  void validate() const {
    if (prime_min < 3 || prime_min > prime_max || prime_max > 10000)
      throw std::invalid_argument("prime range must satisfy 3 <= min <= max <= 10000");
    if (identity_n_max < 0 || identity_n_max > 200)
      throw std::invalid_argument("n-max must be in [0, 200]");
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  }
};

struct SuiteTally {
  std::int64_t pass = 0;
  std::int64_t fail = 0;
};

struct Report {
  ScanConfig config;
  std::vector<VerificationRecord> records;
  std::map<std::string, SuiteTally> summary;
  std::int64_t wall_time_ms = 0;

  bool all_pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const VerificationRecord& r) { return r.pass; });
  }
};

namespace detail {

// Collapse an instance family into one record; a failing family reports
// its first offending instance with both side values.
inline VerificationRecord aggregate(const std::string& suite,
                                    const std::vector<CongruenceCheck>& family) {
  if (family.empty()) throw std::logic_error("aggregate: empty family");
  VerificationRecord rec;
  rec.suite = suite;
  rec.equation = family.front().equation;
  rec.prime_or_index = family.front().prime;
  rec.instances = static_cast<std::int64_t>(family.size());
  rec.pass = true;
  for (const CongruenceCheck& c : family) {
    if (!c.pass && rec.witness.empty()) {
      rec.pass = false;
      rec.lhs = render_residue(c.lhs);
      rec.rhs = render_residue(c.rhs);
      rec.witness = "p=" + std::to_string(c.prime) +
                    (c.instance.empty() ? "" : " " + c.instance) + " lhs=" + rec.lhs +
                    " rhs=" + rec.rhs;
    }
  }
  if (family.size() == 1 && rec.pass) {
    rec.lhs = render_residue(family.front().lhs);
    rec.rhs = render_residue(family.front().rhs);
  }
  return rec;
}

inline VerificationRecord single(const std::string& suite, const CongruenceCheck& c) {
  return aggregate(suite, {c});
}

// Split a flat list of per-instance checks into families by equation id,
// preserving first-seen order.
inline std::vector<VerificationRecord> aggregate_by_equation(
    const std::string& suite, const std::vector<CongruenceCheck>& checks) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<CongruenceCheck>> families;
  for (const CongruenceCheck& c : checks) {
    auto [it, inserted] = families.try_emplace(c.equation);
    if (inserted) order.push_back(c.equation);
    it->second.push_back(c);
  }
  std::vector<VerificationRecord> out;
  for (const std::string& eq : order) out.push_back(aggregate(suite, families.at(eq)));
  return out;
}

inline std::vector<VerificationRecord> scan_one_prime(std::int64_t p,
                                                      const std::set<Suite>& suites) {
  PrimeSuite ps{OddPrime(p)};  // S(i,j) memo materializes on first table-backed check

  std::vector<VerificationRecord> out;
  if (suites.count(Suite::thm11)) out.push_back(single("thm11", ps.check_total_sum()));
  if (suites.count(Suite::thm12) && p >= 5)
    out.push_back(single("thm12", ps.check_weighted_sum()));
  if (suites.count(Suite::conj14)) {
    out.push_back(single("conj14", ps.check_affine_sum()));
    if (p >= 5) out.push_back(single("conj14", ps.check_affine_recombination()));
  }
  if (suites.count(Suite::split)) {
    for (Weight w : {Weight::unit, Weight::linear, Weight::affine}) {
      for (const CongruenceCheck& c : ps.check_quadrants(w)) out.push_back(single("split", c));
      // mirror symmetry is exact, not just mod p
      const SplitSums s = ps.split_sums(w);
      VerificationRecord rec;
      rec.suite = "split";
      rec.equation = "quadrant-mirror[" + weight_tag(w) + "]";
      rec.prime_or_index = p;
      rec.lhs = s.s2.str();
      rec.rhs = s.s3.str();
      rec.pass = s.s2 == s.s3;
      if (!rec.pass) rec.witness = "p=" + std::to_string(p) + " s2=" + rec.lhs + " s3=" + rec.rhs;
      out.push_back(std::move(rec));
    }
    out.push_back(single("split", ps.check_s1_closed(Weight::unit)));
    out.push_back(single("split", ps.check_s2_closed(Weight::unit)));
    out.push_back(single("split", ps.check_closed_recombination(Weight::unit)));
    if (p >= 5) {
      out.push_back(single("split", ps.check_s1_closed(Weight::linear)));
      out.push_back(single("split", ps.check_s2_closed(Weight::linear)));
      out.push_back(single("split", ps.check_closed_recombination(Weight::linear)));
    }
  }
  if (suites.count(Suite::lemmas)) {
    for (auto& rec : aggregate_by_equation("lemmas", ps.check_pointwise_lemmas()))
      out.push_back(std::move(rec));
    for (const CongruenceCheck& c : ps.check_partial_sums()) out.push_back(single("lemmas", c));
  }
  if (suites.count(Suite::mt)) {
    for (int e : {1, 2}) {
      if (e == 2 && p > 97) continue;  // q = p^2 <= 10^4
      for (auto& rec : aggregate_by_equation("mt", ps.check_series_pointwise(e)))
        out.push_back(std::move(rec));
      for (auto& rec : aggregate_by_equation("mt", ps.check_series_coefficientwise(e)))
        out.push_back(std::move(rec));
    }
  }
  if (suites.count(Suite::sun_tauraso) && p >= 5) {
    auto [cb, cat] = ps.check_sums_mod_p_squared();
    out.push_back(single("sun_tauraso", cb));
    out.push_back(single("sun_tauraso", cat));
  }
  return out;
}

inline bool record_order(const VerificationRecord& a, const VerificationRecord& b) {
  if (a.suite != b.suite) return a.suite < b.suite;
  if (a.prime_or_index != b.prime_or_index) return a.prime_or_index < b.prime_or_index;
  return a.equation < b.equation;
}

}  // namespace detail

inline std::vector<std::int64_t> odd_primes_in(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = std::max<std::int64_t>(lo, 3); p <= hi; ++p)
    if (p % 2 == 1 && is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
  return out;
}

// Run the selected suites; records come back in canonical order (suite,
// prime-or-index, equation) no matter how many workers ran them.
inline Report run_scan(const ScanConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::function<std::vector<VerificationRecord>()>> tasks;

  const bool any_prime_suite =
      config.suites.count(Suite::thm11) || config.suites.count(Suite::thm12) ||
      config.suites.count(Suite::conj14) || config.suites.count(Suite::split) ||
      config.suites.count(Suite::lemmas) || config.suites.count(Suite::mt) ||
      config.suites.count(Suite::sun_tauraso);
  if (any_prime_suite) {
    for (std::int64_t p : odd_primes_in(config.prime_min, config.prime_max))
      tasks.push_back([p, suites = config.suites] { return detail::scan_one_prime(p, suites); });
  }

  if (config.suites.count(Suite::lemmas)) {
    // inner-sum identity, exact and prime-independent; fixed window
    for (std::int64_t n = 1; n <= 40; ++n) {
      tasks.push_back([n]() -> std::vector<VerificationRecord> {
        VerificationRecord rec;
        rec.suite = "lemmas";
        rec.equation = "inner-sum";
        rec.prime_or_index = n;
        rec.instances = n;
        rec.pass = true;
        for (std::int64_t j = 1; j <= n; ++j) {
          auto [direct, closed] = inner_sum_pair(n, j);
          if (direct != closed) {
            rec.pass = false;
            rec.lhs = render_rat(direct);
            rec.rhs = render_rat(closed);
            rec.witness = "n=" + std::to_string(n) + " j=" + std::to_string(j) +
                          " direct=" + rec.lhs + " closed=" + rec.rhs;
            break;
          }
        }
        return {std::move(rec)};
      });
    }
  }

  const std::int64_t n_max = config.identity_n_max;
  const auto identity_task = [](std::string suite, std::string equation,
                                ExactRat (*lhs)(std::int64_t), ExactRat (*rhs)(std::int64_t),
                                std::int64_t n) {
    return [=]() -> std::vector<VerificationRecord> {
      ExactRat l = lhs(n), r = rhs(n);
      VerificationRecord rec;
      rec.suite = suite;
      rec.equation = equation;
      rec.prime_or_index = n;
      rec.lhs = render_rat(l);
      rec.rhs = render_rat(r);
      rec.pass = l == r;
      if (!rec.pass)
        rec.witness = "n=" + std::to_string(n) + " lhs=" + rec.lhs + " rhs=" + rec.rhs;
      return {std::move(rec)};
    };
  };
  if (config.suites.count(Suite::identity_b1)) {
    for (std::int64_t n = 0; n <= n_max; ++n)
      tasks.push_back(
          identity_task("identity_b1", "dsum-plain", &double_sum_plain, &closed_form_plain, n));
  }
  if (config.suites.count(Suite::identity_c1)) {
    for (std::int64_t n = 0; n <= n_max; ++n)
      tasks.push_back(identity_task("identity_c1", "dsum-weighted", &double_sum_weighted,
                                    &closed_form_weighted, n));
  }
  if (config.suites.count(Suite::recurrences)) {
    struct Combo {
      IdentitySide (*side)();
      const RecurrenceSpec& (*rec)();
    };
    constexpr Combo combos[] = {
        {&side_double_sum_plain, &recurrence_plain},
        {&side_closed_form_plain, &recurrence_plain},
        {&side_double_sum_weighted, &recurrence_weighted},
        {&side_closed_form_weighted, &recurrence_weighted},
    };
    for (const Combo combo : combos) {
      for (std::int64_t n = 0; n <= n_max; ++n) {
        tasks.push_back([combo, n]() -> std::vector<VerificationRecord> {
          const IdentitySide side = combo.side();
          const RecurrenceSpec& rec = combo.rec();
          ExactRat acc(0);
          for (int j = 0; j <= rec.order; ++j)
            acc += ExactRat(rec.coeff(j, n)) * side.eval(n + j);
          VerificationRecord out;
          out.suite = "recurrences";
          out.equation = rec.name + ":" + side.name;
          out.prime_or_index = n;
          out.lhs = render_rat(acc);
          out.rhs = "0";
          out.pass = acc == 0;
          if (!out.pass) out.witness = "n=" + std::to_string(n) + " combination=" + out.lhs;
          return {std::move(out)};
        });
      }
    }
  }

  std::vector<std::vector<VerificationRecord>> results(tasks.size());
  const int workers = std::min<int>(config.jobs, static_cast<int>(tasks.size()));
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) results[t] = tasks[t]();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1))
          results[t] = tasks[t]();
      });
    }
    for (std::thread& th : pool) th.join();
  }

  Report report;
  report.config = config;
  for (std::vector<VerificationRecord>& chunk : results)
    for (VerificationRecord& rec : chunk) report.records.push_back(std::move(rec));

  if (config.self_test) {
    // deliberately false claim (C_4 = 0 mod 5) to exercise failure paths
    const Residue lhs = reduce(catalan(4), 5), rhs = Residue(0, 5);
    VerificationRecord rec;
    rec.suite = "selftest";
    rec.equation = "injected-failure";
    rec.prime_or_index = 5;
    rec.lhs = render_residue(lhs);
    rec.rhs = render_residue(rhs);
    rec.pass = lhs == rhs;
    rec.witness = "self-test injection: expected mismatch lhs=" + rec.lhs + " rhs=" + rec.rhs;
    report.records.push_back(std::move(rec));
  }

  std::sort(report.records.begin(), report.records.end(), detail::record_order);
  for (const VerificationRecord& rec : report.records) {
    SuiteTally& tally = report.summary[rec.suite];
    (rec.pass ? tally.pass : tally.fail) += 1;
  }
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

inline nlohmann::ordered_json config_to_json(const ScanConfig& config) {
  std::vector<std::string> suites;
  for (Suite s : config.suites) suites.push_back(to_string(s));
  std::sort(suites.begin(), suites.end());
  return nlohmann::ordered_json{
      {"prime_min", config.prime_min},   {"prime_max", config.prime_max},
      {"suites", suites},                {"n_max", config.identity_n_max},
      {"jobs", config.jobs},             {"format", to_string(config.format)},
      {"out", config.out_path},          {"self_test", config.self_test},
  };
}

inline nlohmann::ordered_json report_to_json(const Report& report) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const VerificationRecord& r : report.records) {
    records.push_back(nlohmann::ordered_json{
        {"suite", r.suite},
        {"equation", r.equation},
        {"prime_or_index", r.prime_or_index},
        {"lhs", r.lhs},
        {"rhs", r.rhs},
        {"pass", r.pass},
        {"witness", r.witness},
        {"instances", r.instances},
    });
  }
  nlohmann::ordered_json suites = nlohmann::ordered_json::object();
  std::int64_t pass_total = 0, fail_total = 0;
  for (const auto& [name, tally] : report.summary) {
    suites[name] = {{"pass", tally.pass}, {"fail", tally.fail}};
    pass_total += tally.pass;
    fail_total += tally.fail;
  }
  return nlohmann::ordered_json{
      {"config", config_to_json(report.config)},
      {"records", records},
      {"summary",
       {{"suites", suites},
        {"total", {{"pass", pass_total}, {"fail", fail_total}}},
        {"all_pass", report.all_pass()}}},
      {"wall_time_ms", report.wall_time_ms},
  };
}

inline Report report_from_json(const nlohmann::json& j) {
  Report report;
  report.config.prime_min = j.at("config").at("prime_min").get<std::int64_t>();
  report.config.prime_max = j.at("config").at("prime_max").get<std::int64_t>();
  report.config.suites.clear();
  for (const auto& name : j.at("config").at("suites"))
    report.config.suites.insert(suite_from_string(name.get<std::string>()));
  report.config.identity_n_max = j.at("config").at("n_max").get<std::int64_t>();
  report.config.jobs = j.at("config").at("jobs").get<int>();
  report.config.format = format_from_string(j.at("config").at("format").get<std::string>());
  report.config.out_path = j.at("config").at("out").get<std::string>();
  report.config.self_test = j.at("config").at("self_test").get<bool>();
  for (const auto& r : j.at("records")) {
    VerificationRecord rec;
    rec.suite = r.at("suite").get<std::string>();
    rec.equation = r.at("equation").get<std::string>();
    rec.prime_or_index = r.at("prime_or_index").get<std::int64_t>();
    rec.lhs = r.at("lhs").get<std::string>();
    rec.rhs = r.at("rhs").get<std::string>();
    rec.pass = r.at("pass").get<bool>();
    rec.witness = r.at("witness").get<std::string>();
    rec.instances = r.at("instances").get<std::int64_t>();
    report.records.push_back(std::move(rec));
  }
  for (const VerificationRecord& rec : report.records) {
    SuiteTally& tally = report.summary[rec.suite];
    (rec.pass ? tally.pass : tally.fail) += 1;
  }
  report.wall_time_ms = j.value("wall_time_ms", std::int64_t{0});
  return report;
}

namespace detail {
inline std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}
}  // namespace detail

inline std::size_t emit(const Report& report, OutputFormat format, std::ostream& os) {
  std::ostringstream buf;
  switch (format) {
    case OutputFormat::json:
      buf << report_to_json(report).dump(2) << "\n";
      break;
    case OutputFormat::csv: {
      buf << "suite,equation,prime_or_index,lhs,rhs,pass,witness\n";
      for (const VerificationRecord& r : report.records) {
        buf << detail::csv_field(r.suite) << ',' << detail::csv_field(r.equation) << ','
            << r.prime_or_index << ',' << detail::csv_field(r.lhs) << ','
            << detail::csv_field(r.rhs) << ',' << (r.pass ? "true" : "false") << ','
            << detail::csv_field(r.witness) << "\n";
      }
      break;
    }
    case OutputFormat::text: {
      buf << "suite            pass   fail\n";
      std::int64_t pass_total = 0, fail_total = 0;
      for (const auto& [name, tally] : report.summary) {
        buf << name;
        for (std::size_t pad = name.size(); pad < 17; ++pad) buf << ' ';
        buf << tally.pass << "   " << tally.fail << "\n";
        pass_total += tally.pass;
        fail_total += tally.fail;
      }
      buf << "total            " << pass_total << "   " << fail_total << "\n";
      for (const VerificationRecord& r : report.records) {
        if (!r.pass)
          buf << "FAIL " << r.suite << " " << r.equation << " @" << r.prime_or_index << ": "
              << r.witness << "\n";
      }
      buf << "wall time: " << report.wall_time_ms << " ms\n";
      buf << (report.all_pass() ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
      break;
    }
  }
  const std::string text = buf.str();
  os << text;
  return text.size();
}

inline std::size_t emit_to_path(const Report& report, OutputFormat format,
                                const std::string& path) {
  if (path.empty()) return emit(report, format, std::cout);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  std::size_t n = emit(report, format, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
  return n;
}

}  // namespace supercat
