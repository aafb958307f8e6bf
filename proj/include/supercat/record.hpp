#pragma once

#include <supercat/modular.hpp>

#include <cstdint>
#include <string>

namespace supercat {

// Outcome of one check. Instance families (one check per (i,j) or per x)
// are aggregated into a single record: `instances` counts them and a
// failing record carries the offending tuple plus both side values in
// `witness`.
struct VerificationRecord {
  std::string suite;
  std::string equation;
  std::int64_t prime_or_index = 0;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::string witness;
  std::int64_t instances = 1;
};

// Canonical value, annotated with the small signed form when one exists
// ("24 (-1)" for -1 mod 25).
inline std::string render_residue(const Residue& r) {
  std::string s = std::to_string(r.value());
  const std::int64_t sv = r.signed_value();
  if (sv < 0 && sv >= -10) s += " (" + std::to_string(sv) + ")";
  return s;
}

}  // namespace supercat
