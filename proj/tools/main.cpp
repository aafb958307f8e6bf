#include <supercat/supercat.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

// exit codes: 0 all pass, 1 verification failure, 2 runtime/config error;
// CLI11 returns its own nonzero codes for malformed invocations
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::pair<std::int64_t, std::int64_t> parse_prime_range(const std::string& range) {
  const auto pos = range.find("..");
  if (pos == std::string::npos)
    throw CLI::ValidationError("--primes", "expected MIN..MAX, got '" + range + "'");
  try {
    std::int64_t lo = std::stoll(range.substr(0, pos));
    std::int64_t hi = std::stoll(range.substr(pos + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--primes", "expected MIN..MAX, got '" + range + "'");
  }
}

int run_compute(const std::string& kind, const std::vector<std::int64_t>& args) {
  using namespace supercat;
  if (kind == "supercatalan") {
    if (args.size() != 2) throw CLI::ValidationError("compute", "supercatalan takes M N");
    std::cout << super_catalan(args[0], args[1]).str() << "\n";
  } else if (kind == "catalan") {
    if (args.size() != 1) throw CLI::ValidationError("compute", "catalan takes N");
    std::cout << catalan(args[0]).str() << "\n";
  } else if (kind == "centralbinom") {
    if (args.size() != 1) throw CLI::ValidationError("compute", "centralbinom takes N");
    std::cout << central_binomial(args[0]).str() << "\n";
  } else {
    throw CLI::ValidationError("compute", "unknown kind '" + kind + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace supercat;

  CLI::App app{"super Catalan number calculator and congruence verifier"};
  app.require_subcommand(1);

  // compute: print one exact value
  auto* compute = app.add_subcommand("compute", "print an exact value");
  std::string kind;
  std::vector<std::int64_t> compute_args;
  compute->add_option("kind", kind, "supercatalan | catalan | centralbinom")->required();
  compute->add_option("args", compute_args, "nonnegative integer arguments")
      ->expected(1, 2)
      ->check(CLI::NonNegativeNumber);

  // verify: run suites and emit a report
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string primes = "3..299";
  std::string suites_csv = "all";
  std::string format = "text";
  std::string out_path;
  std::int64_t n_max = 60;
  int jobs = 1;
  bool self_test = false;
  verify->add_option("--primes", primes, "prime range MIN..MAX (inclusive)")
      ->envname("SUPERCAT_PRIMES");
  verify->add_option("--suites", suites_csv, "comma-separated suite list, or 'all'")
      ->envname("SUPERCAT_SUITES");
  verify->add_option("--n-max", n_max, "identity window upper index")
      ->envname("SUPERCAT_N_MAX");
  verify->add_option("--format", format, "json | csv | text")->envname("SUPERCAT_FORMAT");
  verify->add_option("--out", out_path, "output path (default stdout)")
      ->envname("SUPERCAT_OUT");
  verify->add_option("--jobs", jobs, "worker threads")->envname("SUPERCAT_JOBS");
  verify->add_flag("--self-test", self_test, "inject a known-false check")
      ->envname("SUPERCAT_SELF_TEST");

  // report: re-emit a saved JSON report in another format
  auto* report_cmd = app.add_subcommand("report", "re-emit a saved JSON report");
  std::string report_in;
  std::string report_format = "text";
  std::string report_out;
  report_cmd->add_option("input", report_in, "JSON report produced by verify")->required();
  report_cmd->add_option("--format", report_format, "json | csv | text")
      ->envname("SUPERCAT_FORMAT");
  report_cmd->add_option("--out", report_out, "output path (default stdout)")
      ->envname("SUPERCAT_OUT");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(kind, compute_args);

    if (verify->parsed()) {
      ScanConfig config;
      auto [lo, hi] = parse_prime_range(primes);
      config.prime_min = lo;
      config.prime_max = hi;
      config.identity_n_max = n_max;
      config.jobs = jobs;
      config.format = format_from_string(format);
      config.out_path = out_path;
      config.self_test = self_test;
      if (suites_csv != "all") {
        config.suites.clear();
        std::stringstream ss(suites_csv);
        std::string token;
        while (std::getline(ss, token, ','))
          if (!token.empty()) config.suites.insert(suite_from_string(token));
      }
      Report report = run_scan(config);
      emit_to_path(report, config.format, config.out_path);
      return report.all_pass() ? 0 : kExitFail;
    }

    if (report_cmd->parsed()) {
      std::ifstream in(report_in);
      if (!in) throw std::runtime_error("cannot open report: " + report_in);
      nlohmann::json j;
      in >> j;
      Report report = report_from_json(j);
      emit_to_path(report, format_from_string(report_format), report_out);
      return report.all_pass() ? 0 : kExitFail;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
