#include <doctest.h>

#include <cmath>
#include <vector>

#include "rdnf/analytics.hpp"
#include "rdnf/error.hpp"
#include "rdnf/random_model.hpp"

using namespace rdnf;

namespace {

// r_k as a plain long-double product; fine for small n.
long double naive_count(int n, int k, long double p) {
  long double c = 1;
  for (int i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
  }
  const long double e = std::pow(p, std::pow(2.0L, k));
  return c * std::pow(2.0L, n - k) * e * std::pow(1 - e, n - k);
}

bool rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

const std::vector<double> kGrid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

}  // namespace

TEST_CASE("expected count examples") {
  CHECK(expected_count(4, 1, 0.5) == doctest::Approx(3.375).epsilon(1e-12));
  CHECK(expected_count(2, 1, 0.5) == doctest::Approx(0.75).epsilon(1e-12));
  for (int n : {1, 2, 7, 30, 200}) {
    CHECK(expected_count(n, 0, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
  }
  CHECK_THROWS_AS(expected_count(4, 5, 0.5), DomainError);
  CHECK_THROWS_AS(expected_count(4, -1, 0.5), DomainError);
  CHECK_THROWS_AS(expected_count(4, 1, 0.0), DomainError);
}

TEST_CASE("closed form matches the naive product") {
  for (int n = 1; n <= 40; ++n) {
    for (double p : kGrid) {
      for (int k = 0; k <= n; ++k) {
        const auto naive = static_cast<double>(naive_count(n, k, p));
        if (naive > 1e-300) {
          CHECK(rel(expected_count(n, k, p), naive, 1e-10));
        }
      }
    }
  }
}

TEST_CASE("closed form equals the exhaustive expectation") {
  for (int n = 2; n <= 4; ++n) {
    for (double p : {0.25, 0.5, 0.75}) {
      const auto exact = exact_expectation(n, p);
      for (int k = 0; k <= n; ++k) {
        CHECK(rel(exact[static_cast<std::size_t>(k)], expected_count(n, k, p), 1e-9));
      }
    }
  }
}

TEST_CASE("log helpers") {
  CHECK(log1mexp(-1e-20) == doctest::Approx(std::log(1e-20)).epsilon(1e-12));
  CHECK(log1mexp(-50.0) == doctest::Approx(-std::exp(-50.0)).epsilon(1e-12));
  CHECK(log1mexp(std::log(0.5)) == doctest::Approx(std::log(0.5)).epsilon(1e-14));
  CHECK(log2_binomial(10, 3) == doctest::Approx(std::log2(120.0)).epsilon(1e-14));
  CHECK(log2_binomial(1000, 500) ==
        doctest::Approx((std::lgamma(1001.0) - 2 * std::lgamma(501.0)) / std::log(2.0)).epsilon(1e-12));
  CHECK(e_value(3, 0.5) == doctest::Approx(1.0 / 256));
  CHECK(log2_e_value(3, 0.5) == doctest::Approx(-8.0));
}

TEST_CASE("curve") {
  const auto c = expectation_curve(2, 0.5);
  REQUIRE(c.value.size() == 3);
  CHECK(c.value[0] == doctest::Approx(0.5));
  CHECK(c.value[1] == doctest::Approx(0.75));
  CHECK(c.value[2] == doctest::Approx(0.0625));
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(c.value[k] == doctest::Approx(std::exp2(c.log2_value[k])));
  }
}

TEST_CASE("large n stays in the log domain") {
  const int n = 1000000;
  const auto c = expectation_curve(n, 0.5);
  for (int k = 0; k <= 1000; ++k) {
    CHECK(std::isfinite(c.log2_value[static_cast<std::size_t>(k)]));
  }
  for (double l : c.log2_value) {
    CHECK_FALSE(std::isnan(l));
  }
}

TEST_CASE("ratio decomposition") {
  const auto d = ratio(16, 2, 0.5);
  CHECK(d.A == doctest::Approx(0.875));
  CHECK(d.B == doctest::Approx(std::pow(1 + 1.0 / 16, 14)));
  for (int n = 1; n <= 30; ++n) {
    for (double p : kGrid) {
      for (int k = 0; k < n; ++k) {
        const double lhs = expected_count(n, k, p) * ratio(n, k, p).R;
        const double rhs = expected_count(n, k + 1, p);
        if (rhs > 1e-290) {
          CHECK(rel(lhs, rhs, 1e-9));
          CHECK(rel(ratio(n, k, p).R_quotient, ratio(n, k, p).R, 1e-9));
        }
      }
    }
  }
  CHECK_THROWS_AS(ratio(5, 5, 0.5), DomainError);
}

TEST_CASE("A and B near k0 for growing n") {
  double previous = 10;
  for (int n : {1 << 8, 1 << 12, 1 << 16, 1 << 20}) {
    const double k0 = characteristic_points(n, 0.5).k0;
    const auto d = ratio(n, k0, 0.5);
    CHECK(std::abs(d.A - 1.0) < 64.0 / n);
    const double gap = std::abs(d.B - std::exp(1.0));
    CHECK(gap < previous);
    previous = gap;
  }
}

TEST_CASE("B step") {
  CHECK(ratio_b_step(10, 1, 0.5).below_one());
  CHECK(ratio_b_step(10, 8, 0.5).below_one());
  for (int n = 2; n <= 30; ++n) {
    for (double p : kGrid) {
      for (int k = 0; k < n - 1; ++k) {
        const auto s = ratio_b_step(n, k, p);
        CHECK(s.below_one());
        const double direct = b_part(n, k + 1, p) / b_part(n, k, p);
        CHECK(rel(s.value, direct, 1e-9));
      }
    }
  }
  // Far in the tail the value rounds to one but the deficit stays finite.
  const auto far = ratio_b_step(4000, 40, 0.5);
  CHECK(far.below_one());
  CHECK(std::isfinite(far.log2_deficit));
  CHECK_THROWS_AS(ratio_b_step(5, 4, 0.5), DomainError);
}

TEST_CASE("characteristic points") {
  const auto pts = characteristic_points(16, 0.5);
  CHECK(pts.k1 == doctest::Approx(0.0));
  CHECK(pts.k0 == doctest::Approx(2.0));
  CHECK(pts.k2 == doctest::Approx(4.0));
  CHECK(e_value(pts.k2, 0.5) == doctest::Approx(1.0 / 65536));
  CHECK(e_value(pts.k0, 0.5) == doctest::Approx(1.0 / 16));
  for (int n : {2, 5, 100, 100000}) {
    for (double p : kGrid) {
      const auto c = characteristic_points(n, p);
      CHECK(rel(e_value(c.k1, p), 0.5, 1e-9));
      CHECK(rel(e_value(c.k0, p), 1.0 / n, 1e-9));
      CHECK(rel(log2_e_value(c.k2, p), -n, 1e-9));
    }
  }
  CHECK_THROWS_AS(characteristic_points(1, 0.5), DomainError);
}

TEST_CASE("asymptotic estimate") {
  const double k = std::round(characteristic_points(1000, 0.5).k2);
  CHECK(k == 10);
  const double exact = log2_expected_count(1000, k, 0.5);
  const double approx = log2_asymptotic_estimate(1000, k, 0.5);
  CHECK(std::abs(approx - exact) / std::abs(exact) < 0.05);
  double previous = 1;
  for (int n : {1 << 8, 1 << 10, 1 << 12}) {
    const double kk = std::round(characteristic_points(n, 0.5).k2);
    const double e = log2_expected_count(n, kk, 0.5);
    const double err = std::abs(log2_asymptotic_estimate(n, kk, 0.5) - e) / std::abs(e);
    CHECK(err < previous);
    previous = err;
  }
  const double one = asymptotic_estimate(20, 1, 0.5);
  CHECK(std::isfinite(one));
  CHECK(one > 0);
  CHECK_THROWS_AS(asymptotic_estimate(20, 0, 0.5), DomainError);
}

TEST_CASE("boundary table") {
  for (int n : {2, 3, 5, 12}) {
    const auto rows = boundary_values(n, 0.5);
    CHECK(rows.front().k == 0);
    CHECK(rows.front().value == doctest::Approx(0.5));
    CHECK(rows.back().k == n);
    CHECK(rows.back().value == doctest::Approx(std::pow(0.5, std::pow(2.0, n))));
  }
  const auto four = boundary_values(4, 0.5);
  REQUIRE(four.size() == 4);
  CHECK(four[1].k == 1);
  CHECK(four[1].value == doctest::Approx(3.375));
  REQUIRE(four[1].printed_half.has_value());
  CHECK(*four[1].printed_half == doctest::Approx(3.375));

  const auto three = boundary_values(3, 0.5);
  const auto& row = three[2];
  CHECK(row.k == 2);
  CHECK(row.value == doctest::Approx(0.3515625).epsilon(1e-12));
  CHECK(row.value == doctest::Approx(exact_expectation(3, 0.5)[2]).epsilon(1e-12));
  CHECK_FALSE(row.agrees);
  CHECK_FALSE(row.note.empty());
  // The two row formulas coincide at n = 2.
  for (const auto& r : boundary_values(2, 0.5)) {
    CHECK(r.agrees);
  }
}

TEST_CASE("peak and unimodality") {
  const int a256 = argmax_k(256, 0.5);
  CHECK((a256 == 3 || a256 == 4));
  const int a16 = argmax_k(16, 0.5);
  CHECK((a16 == 2 || a16 == 3));
  for (int n : {8, 16, 64, 256}) {
    for (double p : kGrid) {
      const int peak = argmax_k(n, p);
      for (int k = 0; k < n; ++k) {
        const double log_r = ratio(n, k, p).log2_R;
        if (k < peak) {
          CHECK(log_r >= 0);
        } else {
          CHECK(log_r < 0);
        }
      }
      const auto rep = unimodality(n, p);
      CHECK(rep.argmax == peak);
      CHECK(rep.unimodal());
    }
  }
}

TEST_CASE("tail sums") {
  CHECK(tail_bound(4, 0.5, 4) == doctest::Approx(std::pow(2.0, -16)));
  CHECK(tail_bound(40, 0.5, 3) == 1.0);
  const auto t = upper_tail(14, 0.5, 4);
  double direct = 0;
  for (int k = 5; k <= 14; ++k) {
    direct += expected_count(14, k, 0.5);
  }
  CHECK(t.value == doctest::Approx(direct).epsilon(1e-9));
  CHECK(t.value == doctest::Approx(2.387e-4).epsilon(1e-3));
  double previous = 0;
  for (int n : {1 << 10, 1 << 12, 1 << 14}) {
    // The linear sums underflow past n = 2^10; compare logs.
    const auto s = theorem2_tail(n, 0.5);
    CHECK(s.log2_value < previous);
    previous = s.log2_value;
  }
}

TEST_CASE("inequality chains") {
  for (double y : {0.0, 1.0, 37.5}) {
    const auto c = check_one_plus_power(0, y);
    CHECK(c.holds);
    CHECK(c.log_lower == 0);
    CHECK(c.log_middle == 0);
    CHECK(c.log_upper == 0);
  }
  const auto one = check_one_plus_power(1, 1);
  CHECK(std::exp(one.log_lower) == doctest::Approx(std::exp(0.5)));
  CHECK(std::exp(one.log_middle) == doctest::Approx(2.0));
  CHECK(std::exp(one.log_upper) == doctest::Approx(std::exp(1.0)));
  CHECK(one.holds);

  const auto prod = check_falling_product(3, 6);
  CHECK(std::exp(prod.log_lower) == doctest::Approx(0.5));
  CHECK(std::exp(prod.log_middle) == doctest::Approx(5.0 / 9.0));
  CHECK(std::exp(prod.log_upper) == doctest::Approx(0.5625));
  CHECK(prod.holds);

  CHECK(check_one_minus_upper(0.3, 12).holds);
  CHECK(check_one_minus_lower(0.5, 12).holds);
  CHECK(check_one_minus_lower(0.5, 12).log_lower == doctest::Approx(-9.0));
  CHECK_THROWS_AS(check_one_minus_lower(0.6, 1), DomainError);
  CHECK_THROWS_AS(check_one_plus_power(1.5, 1), DomainError);
  CHECK_THROWS_AS(check_falling_product(7, 6), DomainError);
  CHECK(bound_checks(0.25, 8).size() == 3);
  CHECK(bound_checks(3, 6).size() == 1);
  CHECK_THROWS_AS(bound_checks(-1, 1), DomainError);
}
