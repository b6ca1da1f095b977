#include <doctest.h>

#include <cmath>
#include <vector>

#include "rdnf/analytics.hpp"
#include "rdnf/counter_rng.hpp"
#include "rdnf/error.hpp"
#include "rdnf/maximal_intervals.hpp"
#include "rdnf/random_model.hpp"

using namespace rdnf;

TEST_CASE("counter rng is a pure function of its key") {
  CounterRng a(9, 4), b(9, 4), c(9, 5), d(10, 4);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());
  }
}

TEST_CASE("sample_function determinism and domain") {
  const ModelParams params{8, 0.3, 42, 10};
  CHECK(sample_function(params, 3) == sample_function(params, 3));
  CHECK_FALSE(sample_function(params, 3) == sample_function(params, 4));
  CHECK_THROWS_AS(sample_function(params, 10), DomainError);
  CHECK_THROWS_AS(sample_function({8, 0.0, 1, 1}, 0), DomainError);
  CHECK_THROWS_AS(sample_function({8, 1.0, 1, 1}, 0), DomainError);
  CHECK_THROWS_AS(sample_function({0, 0.5, 1, 1}, 0), DomainError);
  CHECK_THROWS_AS(sample_function({8, 0.5, 1, 0}, 0), DomainError);
}

TEST_CASE("sampled density matches p") {
  const ModelParams params{10, 0.3, 7, 10000};
  std::uint64_t ones = 0;
  for (std::uint64_t i = 0; i < params.samples; ++i) {
    ones += sample_function(params, i).count_ones();
  }
  const double trials = 10000.0 * 1024.0;
  const double se = std::sqrt(0.3 * 0.7 / trials);
  CHECK(std::abs(static_cast<double>(ones) / trials - 0.3) <= 5 * se);
}

TEST_CASE("function probability") {
  CHECK(function_probability(TruthTable::constant(2, false), 0.5) == doctest::Approx(0.0625));
  CHECK(function_probability(TruthTable::constant(2, true), 0.25) ==
        doctest::Approx(0.00390625).epsilon(1e-14));
  for (double p : {0.1, 0.5, 0.85}) {
    long double sum = 0;
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
      sum += function_probability(TruthTable(2, {bits}), p);
    }
    CHECK(std::abs(static_cast<double>(sum) - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(function_probability(TruthTable(2), 1.5), DomainError);
}

TEST_CASE("exact expectation") {
  const auto e2 = exact_expectation(2, 0.5);
  REQUIRE(e2.size() == 3);
  CHECK(e2[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e2[1] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(e2[2] == doctest::Approx(0.0625).epsilon(1e-12));
  for (double p : {0.2, 0.7}) {
    CHECK(exact_expectation(2, p)[0] == doctest::Approx(4 * p * (1 - p) * (1 - p)).epsilon(1e-12));
  }
  CHECK(exact_expectation(3, 0.5)[1] == doctest::Approx(1.6875).epsilon(1e-12));
  CHECK(exact_expectation(3, 0.5)[2] == doctest::Approx(0.3515625).epsilon(1e-12));
  CHECK_THROWS_AS(exact_expectation(5, 0.5), CapExceeded);
}

TEST_CASE("exact expectation against a direct sum over all functions") {
  // n = 3 by hand: enumerate every table and add weight * count.
  const double p = 0.35;
  std::vector<double> acc(4, 0.0);
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    const TruthTable f(3, {bits});
    const int ones = static_cast<int>(f.count_ones());
    const double w = std::pow(p, ones) * std::pow(1 - p, 8 - ones);
    const auto s = enumerate_bruteforce(f).spectrum();
    for (int k = 0; k <= 3; ++k) {
      acc[static_cast<std::size_t>(k)] += w * static_cast<double>(s.counts[static_cast<std::size_t>(k)]);
    }
  }
  const auto exact = exact_expectation(3, p);
  for (int k = 0; k <= 3; ++k) {
    CHECK(exact[static_cast<std::size_t>(k)] ==
          doctest::Approx(acc[static_cast<std::size_t>(k)]).epsilon(1e-12));
  }
}

TEST_CASE("monte carlo against the exhaustive oracle") {
  const auto est = monte_carlo({2, 0.5, 1, 100000}, 4);
  const std::vector<double> exact{0.5, 0.75, 0.0625};
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(std::abs(est.mean[k] - exact[k]) <= 5 * est.std_error[k]);
    CHECK(est.std_error[k] > 0);
  }
}

TEST_CASE("monte carlo reproducibility and job independence") {
  const ModelParams params{7, 0.6, 99, 300};
  const auto a = monte_carlo(params, 1);
  CHECK(a == monte_carlo(params, 1));
  CHECK(a == monte_carlo(params, 3));
  CHECK(a == monte_carlo(params, 8));
  CHECK(a.mean.size() == 8);
  for (std::size_t k = 0; k < a.mean.size(); ++k) {
    CHECK(a.mean[k] >= 0);
    CHECK(a.std_error[k] >= 0);
  }
}

TEST_CASE("standard error shrinks with more samples") {
  const auto small = monte_carlo({6, 0.5, 3, 4000}, 4);
  const auto large = monte_carlo({6, 0.5, 3, 8000}, 4);
  for (int k = 0; k <= 2; ++k) {
    const double ratio = large.std_error[static_cast<std::size_t>(k)] /
                         small.std_error[static_cast<std::size_t>(k)];
    CHECK(ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.1));
  }
}

TEST_CASE("single draw is flagged") {
  const auto est = monte_carlo({5, 0.5, 1, 1});
  CHECK(est.degenerate);
  for (double se : est.std_error) {
    CHECK(se == 0.0);
  }
  CHECK_FALSE(monte_carlo({5, 0.5, 1, 2}).degenerate);
}

TEST_CASE("tail frequency") {
  CHECK(tail_frequency({6, 0.5, 1, 200}, 0, 6).hits == 0);
  // Near-constant functions at p = 0.99 often reach the full cube.
  const auto high = tail_frequency({4, 0.99, 1, 2000}, 0, 3);
  CHECK(high.frequency > 0.7);
  CHECK(high.frequency == doctest::Approx(std::pow(0.99, 16)).epsilon(0.05));
  const auto t = tail_frequency({10, 0.5, 2, 500}, 1, 4, 2);
  CHECK(t.frequency == static_cast<double>(t.hits) / 500.0);
  CHECK_THROWS_AS(tail_frequency({6, 0.5, 1, 10}, 3, 2), DomainError);
  CHECK_THROWS_AS(tail_frequency({6, 0.5, 1, 10}, 0, 7), DomainError);
}
