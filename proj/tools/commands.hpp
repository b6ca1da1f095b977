#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace rdnf::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kResourceCap = 3,
  kVerifyFailed = 4,
};

enum class Format { kCsv, kJson };

struct RunConfig {
  std::string command;
  int n = 4;
  double p = 0.5;
  std::optional<int> k;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  std::uint64_t index = 0;
  std::string in_path;
  std::string out_path;
  Format format = Format::kCsv;
  unsigned jobs = 1;
  double x = 0.0;
  double y = 0.0;
  // verify grid
  int verify_functions = 100;
  int verify_enum_n = 8;
  int verify_curve_n = 1024;
  int verify_points = 10000;
};

// Runs one command, writing its result to `out` and diagnostics to `err`.
// Library errors are mapped onto ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Decimal rendering with 17 significant digits, independent of locale.
std::string format_double(double v);

}  // namespace rdnf::cli
