#pragma once

// Property suites behind `rdnf verify`. Each check is self-contained and
// reports a one-line detail string.

#include <cstdint>
#include <string>
#include <vector>

namespace rdnf {

struct VerifyConfig {
  // Random functions per (n, p) cell for the enumerator cross-checks.
  int functions_per_cell = 100;
  // Largest n for the enumerator cross-checks (<= 12).
  int max_enum_n = 8;
  // Largest n for the exhaustive expectation identity (<= 4).
  int max_exact_n = 4;
  // Largest power-of-two n for the unimodality scan.
  int max_curve_n = 1024;
  // Random points per inequality chain.
  int inequality_points = 10000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<PropertyResult> run_verification(const VerifyConfig& config);

}  // namespace rdnf
