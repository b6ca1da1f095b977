#include "rdnf/random_model.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "rdnf/counter_rng.hpp"
#include "rdnf/error.hpp"
#include "rdnf/maximal_intervals.hpp"

namespace rdnf {

namespace {

void check_p(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("p must lie strictly inside (0, 1), got " + std::to_string(p));
  }
}

// Runs body(index, worker) for every index in [0, count) across `jobs`
// threads, worker w taking indices congruent to w.
template <typename Body>
void parallel_indices(std::uint64_t count, unsigned jobs, Body&& body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) {
      body(i, 0u);
    }
    return;
  }
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::uint64_t i = w; i < count; i += jobs) {
          body(i, w);
        }
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

}  // namespace

void ModelParams::validate() const {
  if (n < 1) {
    throw DomainError("n must be >= 1");
  }
  check_p(p);
  if (samples < 1) {
    throw DomainError("samples must be >= 1");
  }
}

TruthTable sample_function(const ModelParams& params, std::uint64_t index) {
  params.validate();
  if (index >= params.samples) {
    throw DomainError("sample index " + std::to_string(index) + " >= samples");
  }
  TruthTable tt(params.n);
  CounterRng rng(params.seed, index);
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(params.p, 64));
  for (Mask v = 0; v < tt.num_vertices(); ++v) {
    if (rng() < threshold) {
      tt.set(v, true);
    }
  }
  return tt;
}

double function_probability(const TruthTable& f, double p) {
  check_p(p);
  const auto ones = static_cast<double>(f.count_ones());
  const auto zeros = static_cast<double>(f.num_vertices()) - ones;
  return std::exp(ones * std::log(p) + zeros * std::log1p(-p));
}

std::vector<double> exact_expectation(int n, double p) {
  check_p(p);
  if (n < 1) {
    throw DomainError("n must be >= 1");
  }
  if (n > kMaxExactDim) {
    throw CapExceeded("exact_expectation enumerates 2^(2^n) functions; n=" + std::to_string(n) +
                      " exceeds cap " + std::to_string(kMaxExactDim));
  }
  const std::uint64_t functions = std::uint64_t{1} << (1u << n);
  std::vector<long double> acc(static_cast<std::size_t>(n) + 1, 0.0L);
  for (std::uint64_t bits = 0; bits < functions; ++bits) {
    const TruthTable f(n, {bits});
    const double weight = function_probability(f, p);
    const auto s = enumerate_bruteforce(f).spectrum();
    for (std::size_t k = 0; k < acc.size(); ++k) {
      acc[k] += static_cast<long double>(weight) * static_cast<long double>(s.counts[k]);
    }
  }
  return {acc.begin(), acc.end()};
}

McEstimate monte_carlo(const ModelParams& params, unsigned jobs) {
  params.validate();
  if (params.n > kMaxEnumDim) {
    throw CapExceeded("monte_carlo: n exceeds cap " + std::to_string(kMaxEnumDim));
  }
  const std::size_t width = static_cast<std::size_t>(params.n) + 1;
  jobs = std::max(1u, jobs);
  // Integer partial sums per worker keep the merge exact and order-free.
  std::vector<std::vector<std::uint64_t>> sums(jobs, std::vector<std::uint64_t>(width, 0));
  std::vector<std::vector<unsigned __int128>> squares(jobs,
                                                      std::vector<unsigned __int128>(width, 0));
  parallel_indices(params.samples, jobs, [&](std::uint64_t i, unsigned w) {
    const auto s = spectrum(sample_function(params, i));
    for (std::size_t k = 0; k < width; ++k) {
      sums[w][k] += s.counts[k];
      squares[w][k] += static_cast<unsigned __int128>(s.counts[k]) * s.counts[k];
    }
  });

  McEstimate est;
  est.n = params.n;
  est.samples = params.samples;
  est.degenerate = params.samples == 1;
  est.mean.assign(width, 0.0);
  est.std_error.assign(width, 0.0);
  const auto count = static_cast<long double>(params.samples);
  for (std::size_t k = 0; k < width; ++k) {
    std::uint64_t sum = 0;
    unsigned __int128 sq = 0;
    for (unsigned w = 0; w < jobs; ++w) {
      sum += sums[w][k];
      sq += squares[w][k];
    }
    const long double mean = static_cast<long double>(sum) / count;
    est.mean[k] = static_cast<double>(mean);
    if (!est.degenerate) {
      const long double ssd =
          static_cast<long double>(sq) - static_cast<long double>(sum) * mean;
      const long double var = std::max(0.0L, ssd / (count - 1.0L));
      est.std_error[k] = static_cast<double>(std::sqrt(var / count));
    }
  }
  return est;
}

TailEstimate tail_frequency(const ModelParams& params, int k_low, int k_high, unsigned jobs) {
  params.validate();
  if (k_low < 0 || k_low > k_high || k_high > params.n) {
    throw DomainError("tail_frequency requires 0 <= k_low <= k_high <= n");
  }
  if (params.n > kMaxEnumDim) {
    throw CapExceeded("tail_frequency: n exceeds cap " + std::to_string(kMaxEnumDim));
  }
  jobs = std::max(1u, jobs);
  std::vector<std::uint64_t> hits(jobs, 0);
  parallel_indices(params.samples, jobs, [&](std::uint64_t i, unsigned w) {
    const auto s = spectrum(sample_function(params, i));
    for (int k = 0; k <= params.n; ++k) {
      if ((k < k_low || k > k_high) && s.counts[static_cast<std::size_t>(k)] > 0) {
        ++hits[w];
        break;
      }
    }
  });
  TailEstimate out;
  out.samples = params.samples;
  for (auto h : hits) {
    out.hits += h;
  }
  out.frequency = static_cast<double>(out.hits) / static_cast<double>(out.samples);
  out.std_error =
      std::sqrt(out.frequency * (1.0 - out.frequency) / static_cast<double>(out.samples));
  return out;
}

}  // namespace rdnf
