#pragma once

// The random-function model F_p: every vertex of E^n independently takes the
// value 1 with probability p.

#include <cstdint>
#include <vector>

#include "rdnf/truth_table.hpp"

namespace rdnf {

inline constexpr int kMaxExactDim = 4;

struct ModelParams {
  int n = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1;

  // Throws DomainError unless n >= 1, 0 < p < 1 and samples >= 1.
  void validate() const;
};

// Per-k sample statistics of r_k(f) over independent draws.
struct McEstimate {
  int n = 0;
  std::uint64_t samples = 0;
  std::vector<double> mean;
  // Standard error of the mean from the unbiased sample variance; zero when
  // `degenerate` (a single draw).
  std::vector<double> std_error;
  bool degenerate = false;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

struct TailEstimate {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double frequency = 0.0;
  // Binomial standard error sqrt(q(1-q)/N) at the observed frequency q.
  double std_error = 0.0;
};

// Draw number `index`; a pure function of (params.seed, index, n, p).
TruthTable sample_function(const ModelParams& params, std::uint64_t index);

// p^|N_f| (1-p)^(2^n - |N_f|), evaluated through logarithms.
double function_probability(const TruthTable& f, double p);

// Expectation of r_k(f) as a weighted sum over all 2^(2^n) functions, n <= 4.
std::vector<double> exact_expectation(int n, double p);

// `jobs` worker threads; the result does not depend on `jobs`.
McEstimate monte_carlo(const ModelParams& params, unsigned jobs = 1);

// Fraction of draws having a maximal interval of dimension k < k_low or
// k > k_high.
TailEstimate tail_frequency(const ModelParams& params, int k_low, int k_high, unsigned jobs = 1);

}  // namespace rdnf
