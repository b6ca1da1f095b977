#include "rdnf/analytics.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>

#include "rdnf/error.hpp"
#include "rdnf/hypercube.hpp"

namespace rdnf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = std::numbers::ln2;

void check_p(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("p must lie strictly inside (0, 1), got " + std::to_string(p));
  }
}

void check_k(int n, double k) {
  if (n < 1) {
    throw DomainError("n must be >= 1, got " + std::to_string(n));
  }
  if (!(k >= 0.0 && k <= n)) {
    throw DomainError("k must lie in [0, n], got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n));
  }
}

// y * log-value with the convention 0 * (-inf) = 0 (an empty power is 1).
double scaled(double y, double log_value) { return y == 0.0 ? 0.0 : y * log_value; }

// log2(2^a + 2^b).
double log2_add(double a, double b) {
  if (a == -kInf) {
    return b;
  }
  if (b == -kInf) {
    return a;
  }
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp2(lo - hi)) / kLn2;
}

bool is_integral(double v) { return std::floor(v) == v; }

}  // namespace

double log2_binomial(double n, double k) {
  if (!(k >= 0.0 && k <= n)) {
    throw DomainError("log2_binomial requires 0 <= k <= n");
  }
  if (is_integral(n) && is_integral(k) && n <= 60.0) {
    return std::log2(static_cast<double>(binomial(static_cast<int>(n), static_cast<int>(k))));
  }
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / kLn2;
}

double log1mexp(double a) {
  if (a > 0.0) {
    throw DomainError("log1mexp requires a <= 0");
  }
  if (a == 0.0) {
    return -kInf;
  }
  return a > -kLn2 ? std::log(-std::expm1(a)) : std::log1p(-std::exp(a));
}

double log2_e_value(double k, double p) {
  check_p(p);
  const double power = std::exp2(k);
  return std::isinf(power) ? -kInf : power * std::log2(p);
}

double e_value(double k, double p) { return std::exp2(log2_e_value(k, p)); }

double log2_expected_count(int n, double k, double p) {
  check_p(p);
  check_k(n, k);
  const double log2_q = log2_e_value(k, p);
  const double rest = n - k;
  const double log2_not_all = log1mexp(log2_q * kLn2) / kLn2;
  return log2_binomial(n, k) + rest + log2_q + scaled(rest, log2_not_all);
}

double expected_count(int n, int k, double p) {
  return std::exp2(log2_expected_count(n, static_cast<double>(k), p));
}

ExpectationCurve expectation_curve(int n, double p) {
  check_p(p);
  check_k(n, 0);
  ExpectationCurve curve;
  curve.n = n;
  curve.p = p;
  curve.log2_value.resize(static_cast<std::size_t>(n) + 1);
  curve.value.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double l = log2_expected_count(n, k, p);
    curve.log2_value[static_cast<std::size_t>(k)] = l;
    curve.value[static_cast<std::size_t>(k)] = std::exp2(l);
  }
  return curve;
}

RatioDecomposition ratio(int n, double k, double p) {
  check_p(p);
  check_k(n, k);
  if (!(k <= n - 1.0)) {
    throw DomainError("ratio requires k <= n - 1");
  }
  const double log2_q = log2_e_value(k, p);
  const double q = std::exp2(log2_q);
  const double rest = n - k;
  RatioDecomposition out;
  out.A = rest * q;
  out.B = std::exp2(rest * std::log1p(q) / kLn2);
  out.log2_R = std::log2(rest) + log2_q + rest * std::log1p(q) / kLn2 - 1.0 - std::log2(k + 1.0) -
               log1mexp(2.0 * log2_q * kLn2) / kLn2;
  out.R = std::exp2(out.log2_R);
  out.R_quotient =
      std::exp2(log2_expected_count(n, k + 1.0, p) - log2_expected_count(n, k, p));
  return out;
}

double b_part(int n, double k, double p) {
  check_p(p);
  check_k(n, k);
  return std::exp2((n - k) * std::log1p(e_value(k, p)) / kLn2);
}

bool BStep::below_one() const { return log2_deficit > -kInf; }

BStep ratio_b_step(int n, double k, double p) {
  check_p(p);
  check_k(n, k);
  if (!(k < n - 1.0)) {
    throw DomainError("ratio_b_step requires k < n - 1");
  }
  const double log2_q = log2_e_value(k, p);
  const double q = std::exp2(log2_q);
  const double rest = n - k;
  BStep out;
  if (q >= DBL_MIN) {
    const double lq2 = std::log1p(q * q);
    const double deficit = rest * (std::log1p(q) - lq2) + lq2;
    out.log2_deficit = std::log2(deficit);
    out.value = std::exp(-deficit);
  } else {
    // -ln value = rest * q + O(q^2).
    out.log2_deficit = std::log2(rest) + log2_q;
    out.value = 1.0;
  }
  return out;
}

CharacteristicPoints characteristic_points(int n, double p) {
  check_p(p);
  if (n < 2) {
    throw DomainError("characteristic points need n >= 2");
  }
  const double neg_log = -std::log2(p);
  return {std::log2(1.0 / neg_log), std::log2(std::log2(static_cast<double>(n)) / neg_log),
          std::log2(n / neg_log)};
}

double log2_asymptotic_estimate(int n, double k, double p) {
  check_p(p);
  check_k(n, k);
  if (k < 1.0) {
    throw DomainError("asymptotic estimate needs k >= 1");
  }
  return k * std::log2(static_cast<double>(n)) + k * std::numbers::log2e + (n - k) +
         log2_e_value(k, p) - k * std::log2(k) - 0.5 * std::log2(2.0 * std::numbers::pi * k);
}

double asymptotic_estimate(int n, double k, double p) {
  return std::exp2(log2_asymptotic_estimate(n, k, p));
}

std::vector<BoundaryRow> boundary_values(int n, double p) {
  check_p(p);
  if (n < 2) {
    throw DomainError("boundary table needs n >= 2");
  }
  const double lp = std::log2(p);
  const bool half = p == 0.5;
  const double dn = n;
  auto rel_close = [](double log2_a, double log2_b) {
    if (log2_a == log2_b) {
      return true;
    }
    return std::abs(log2_a - log2_b) <= std::log2(1.0 + 1e-9);
  };

  std::vector<BoundaryRow> rows;
  auto add = [&](int k, double log2_printed, std::optional<double> printed_half, std::string note) {
    if (std::any_of(rows.begin(), rows.end(), [k](const BoundaryRow& r) { return r.k == k; })) {
      return;
    }
    BoundaryRow row;
    row.k = k;
    const double log2_value = log2_expected_count(n, k, p);
    row.value = std::exp2(log2_value);
    row.printed_general = std::exp2(log2_printed);
    row.printed_half = printed_half;
    row.agrees = rel_close(log2_value, log2_printed);
    row.note = std::move(note);
    rows.push_back(std::move(row));
  };

  // 2^n p (1-p)^n
  add(0, dn + lp + dn * std::log2(1.0 - p), half ? std::optional(0.5) : std::nullopt, "");
  // n 2^(n-1) p^2 (1-p^2)^(n-1)
  add(1, std::log2(dn) + (dn - 1.0) + 2.0 * lp + (dn - 1.0) * std::log2(1.0 - p * p),
      half ? std::optional(dn / 4.0 * std::pow(1.5, dn - 1.0)) : std::nullopt, "");
  {
    // n 2^(n-1) q (1-q) with q = p^(2^(n-1)).
    const double log2_q = log2_e_value(n - 1.0, p);
    const double log2_printed =
        std::log2(dn) + (dn - 1.0) + log2_q + log1mexp(log2_q * kLn2) / kLn2;
    std::optional<double> printed_half;
    if (half) {
      printed_half = std::exp2(log2_printed);
    }
    std::string note;
    if (n > 2) {
      note = "published row uses factor n*2^(n-1); closed form gives C(n,n-1)*2 = 2n";
    }
    add(n - 1, log2_printed, printed_half, note);
  }
  add(n, log2_e_value(n, p), half ? std::optional(std::exp2(-std::exp2(dn))) : std::nullopt, "");
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
  return rows;
}

int argmax_k(int n, double p) {
  check_p(p);
  check_k(n, 0);
  int best = 0;
  double best_value = log2_expected_count(n, 0, p);
  for (int k = 1; k <= n; ++k) {
    const double v = log2_expected_count(n, k, p);
    if (v > best_value) {
      best = k;
      best_value = v;
    }
  }
  return best;
}

UnimodalityReport unimodality(int n, double p) {
  check_p(p);
  if (n < 2) {
    throw DomainError("unimodality needs n >= 2");
  }
  UnimodalityReport report;
  report.argmax = argmax_k(n, p);
  std::vector<double> log2_r(static_cast<std::size_t>(n));
  std::vector<double> r(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const auto d = ratio(n, k, p);
    log2_r[static_cast<std::size_t>(k)] = d.log2_R;
    r[static_cast<std::size_t>(k)] = d.R;
  }
  auto rising = [&](int k) { return log2_r[static_cast<std::size_t>(k)] >= 0.0; };
  for (int k = 1; k < n; ++k) {
    if (rising(k) != rising(k - 1)) {
      ++report.sign_changes;
    }
  }
  for (int k = 0; k <= n; ++k) {
    const bool left = k == 0 || rising(k - 1);
    const bool right = k == n || !rising(k);
    if (left && right) {
      ++report.local_maxima;
    }
  }
  // sign(r_{k+1} - 2 r_k + r_{k-1}) = sign(R_k - 2 + 1/R_{k-1}).
  for (int k = 1; k < n; ++k) {
    const double second = r[static_cast<std::size_t>(k)] - 2.0 + 1.0 / r[static_cast<std::size_t>(k - 1)];
    if (second > 0.0) {
      ++report.convex_points;
    }
  }
  return report;
}

double tail_bound(int n, double p, int k) {
  return std::min(1.0, expected_count(n, k, p));
}

namespace {

TailSum tail_sum(int n, double p, int low_cut, int high_cut) {
  TailSum out;
  out.low_cut = low_cut;
  out.high_cut = high_cut;
  out.log2_value = -kInf;
  for (int k = 0; k <= n; ++k) {
    if (k < low_cut || k > high_cut) {
      out.log2_value = log2_add(out.log2_value, std::min(0.0, log2_expected_count(n, k, p)));
    }
  }
  out.value = std::exp2(out.log2_value);
  return out;
}

}  // namespace

TailSum theorem2_tail(int n, double p) {
  const auto pts = characteristic_points(n, p);
  return tail_sum(n, p, static_cast<int>(std::ceil(pts.k1)),
                  static_cast<int>(std::floor(pts.k2)) + 1);
}

TailSum upper_tail(int n, double p, int k_high) {
  check_p(p);
  check_k(n, k_high);
  return tail_sum(n, p, 0, k_high);
}

namespace {

ChainCheck finish(ChainCheck c) {
  // Rounding allowance for chains that are tight (x = 0, y = 0, x = 1, ...).
  const double tol = 1e-12 * std::max(1.0, std::abs(c.log_middle));
  c.slack_low = c.log_middle - c.log_lower;
  c.slack_high = c.log_upper - c.log_middle;
  const bool low_ok = c.log_lower == -kInf || c.log_lower <= c.log_middle + tol;
  const bool high_ok = c.log_upper == kInf || c.log_middle <= c.log_upper + tol;
  c.holds = low_ok && high_ok;
  return c;
}

void check_unit(double x, double y, double x_max) {
  if (!(x >= 0.0 && x <= x_max) || !(y >= 0.0) || std::isinf(y)) {
    throw DomainError("inequality precondition violated: need 0 <= x <= " +
                      std::to_string(x_max) + ", 0 <= y < inf");
  }
}

}  // namespace

ChainCheck check_one_plus_power(double x, double y) {
  check_unit(x, y, 1.0);
  ChainCheck c{.name = "one_plus_power", .x = x, .y = y};
  c.log_lower = x * (1.0 - x / 2.0) * y;
  c.log_middle = scaled(y, std::log1p(x));
  c.log_upper = x * y;
  return finish(c);
}

ChainCheck check_one_minus_upper(double x, double y) {
  check_unit(x, y, 1.0);
  ChainCheck c{.name = "one_minus_upper", .x = x, .y = y};
  c.log_lower = -kInf;
  c.log_middle = scaled(y, std::log1p(-x));
  c.log_upper = -x * y;
  return finish(c);
}

ChainCheck check_one_minus_lower(double x, double y) {
  check_unit(x, y, 0.5);
  ChainCheck c{.name = "one_minus_lower", .x = x, .y = y};
  c.log_lower = -x * (1.0 + x) * y;  // ln(1-x) >= -x - x^2 on [0, 1/2]
  c.log_middle = scaled(y, std::log1p(-x));
  c.log_upper = kInf;
  return finish(c);
}

ChainCheck check_falling_product(long x, long y) {
  if (x < 1 || x > y) {
    throw DomainError("falling product bounds need natural 1 <= x <= y");
  }
  const double dx = static_cast<double>(x);
  const double dy = static_cast<double>(y);
  ChainCheck c{.name = "falling_product", .x = dx, .y = dy};
  c.log_lower = scaled((dx - 1.0) / 2.0, std::log1p(-dx / dy));
  double sum = 0.0;
  for (long i = 1; i < x; ++i) {
    sum += std::log1p(-static_cast<double>(i) / dy);
  }
  c.log_middle = sum;
  c.log_upper = scaled(dx - 1.0, std::log1p(-dx / (2.0 * dy)));
  return finish(c);
}

std::vector<ChainCheck> bound_checks(double x, double y) {
  std::vector<ChainCheck> out;
  const bool finite_y = y >= 0.0 && !std::isinf(y);
  if (x >= 0.0 && x <= 1.0 && finite_y) {
    out.push_back(check_one_plus_power(x, y));
    out.push_back(check_one_minus_upper(x, y));
    if (x <= 0.5) {
      out.push_back(check_one_minus_lower(x, y));
    }
  }
  if (is_integral(x) && is_integral(y) && x >= 1.0 && x <= y && y < 1e9) {
    out.push_back(check_falling_product(static_cast<long>(x), static_cast<long>(y)));
  }
  if (out.empty()) {
    throw DomainError("no inequality chain admits (x, y) = (" + std::to_string(x) + ", " +
                      std::to_string(y) + ")");
  }
  return out;
}

}  // namespace rdnf
