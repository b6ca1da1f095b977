#pragma once

// Closed-form and asymptotic analysis of the expected spectrum r_k(n,p) of the
// reduced DNF under F_p. All logarithms are base 2 unless a name says
// otherwise. Quantities that span hundreds of orders of magnitude are carried
// as log2 values with a linear rendering that flushes to 0 or +inf.

#include <optional>
#include <string>
#include <vector>

namespace rdnf {

// log2 C(n,k); exact integer binomials for integral n <= 60, log-gamma
// otherwise (k may be real).
double log2_binomial(double n, double k);

// log(1 - e^a) for a <= 0, accurate at both ends.
double log1mexp(double a);

// log2 of p^(2^k); -inf once 2^k overflows.
double log2_e_value(double k, double p);
// E_k = p^(2^k).
double e_value(double k, double p);

// log2 r_k(n,p) = log2 C(n,k) + (n-k) + 2^k log2 p + (n-k) log2(1 - p^(2^k)).
// Real k in [0,n] is accepted.
double log2_expected_count(int n, double k, double p);
// r_k(n,p) = C(n,k) 2^(n-k) p^(2^k) (1 - p^(2^k))^(n-k); integer k in [0,n].
double expected_count(int n, int k, double p);

struct ExpectationCurve {
  int n = 0;
  double p = 0.0;
  std::vector<double> log2_value;  // index k
  std::vector<double> value;       // 2^log2_value, flushed to 0 / inf
};

ExpectationCurve expectation_curve(int n, double p);

// R_k = r_{k+1}/r_k with its parts A_k = (n-k) p^(2^k) and
// B_k = (1 + p^(2^k))^(n-k).
struct RatioDecomposition {
  double R = 0.0;           // closed form (n-k) q (1+q)^(n-k) / (2(k+1)(1-q^2)), q = p^(2^k)
  double log2_R = 0.0;      // log2 of the closed form
  double R_quotient = 0.0;  // 2^(log2 r_{k+1} - log2 r_k)
  double A = 0.0;
  double B = 0.0;
};

// 0 <= k < n, real k allowed.
RatioDecomposition ratio(int n, double k, double p);

// B_k alone.
double b_part(int n, double k, double p);

// B_{k+1}/B_k = ((1 + q^2)/(1 + q))^(n-k) / (1 + q^2), q = p^(2^k).
// The value sits within rounding of 1 once q is tiny, so the distance below
// one is also carried as log2(-ln value).
struct BStep {
  double value = 0.0;
  double log2_deficit = 0.0;  // log2(-ln value); finite iff value < 1
  bool below_one() const;
};

// 0 <= k < n-1.
BStep ratio_b_step(int n, double k, double p);

struct CharacteristicPoints {
  double k1 = 0.0;  // E_k = 1/2
  double k0 = 0.0;  // E_k = 1/n
  double k2 = 0.0;  // E_k = 2^-n
};

// n >= 2, 0 < p < 1.
CharacteristicPoints characteristic_points(int n, double p);

// log2 of  n^k e^k 2^(n-k) p^(2^k) / (k^k sqrt(2 pi k)),  1 <= k <= n.
double log2_asymptotic_estimate(int n, double k, double p);
double asymptotic_estimate(int n, double k, double p);

struct BoundaryRow {
  int k = 0;
  double value = 0.0;          // from the closed form
  double printed_general = 0.0;  // the published row formula at this p
  std::optional<double> printed_half;  // the published p = 1/2 column, when p = 1/2
  bool agrees = true;          // closed form vs published row within 1e-9 relative
  std::string note;
};

// Rows k = 0, 1, n-1, n (deduplicated, ascending). n >= 2.
std::vector<BoundaryRow> boundary_values(int n, double p);

// Smallest k maximizing r_k(n,p).
int argmax_k(int n, double p);

struct UnimodalityReport {
  int argmax = 0;
  int local_maxima = 0;  // k with r_{k-1} <= r_k > r_{k+1} (via R)
  int sign_changes = 0;  // sign changes of R_k - 1 over k = 0..n-1
  // Points where the second difference of the linear sequence is positive;
  // reported only, discrete concavity is not claimed.
  int convex_points = 0;
  bool unimodal() const { return local_maxima == 1 && sign_changes <= 1; }
};

UnimodalityReport unimodality(int n, double p);

// Markov bound on P(r_k(f) >= 1): min(1, r_k(n,p)).
double tail_bound(int n, double p, int k);

struct TailSum {
  double value = 0.0;
  double log2_value = 0.0;
  int low_cut = 0;   // terms k < low_cut
  int high_cut = 0;  // terms k > high_cut
};

// Sum of tail_bound over k < ceil(k1) and k > floor(k2) + 1.
TailSum theorem2_tail(int n, double p);

// Sum of tail_bound over k > k_high, in log2 with a linear rendering.
TailSum upper_tail(int n, double p, int k_high);

// One inequality chain lower <= middle <= upper, evaluated in natural logs.
struct ChainCheck {
  std::string name;
  double x = 0.0;
  double y = 0.0;
  double log_lower = 0.0;
  double log_middle = 0.0;
  double log_upper = 0.0;
  bool holds = true;
  double slack_low = 0.0;   // log_middle - log_lower
  double slack_high = 0.0;  // log_upper - log_middle
};

// exp(x(1 - x/2) y) <= (1+x)^y <= exp(xy);  0 <= x <= 1, y >= 0.
ChainCheck check_one_plus_power(double x, double y);
// (1-x)^y <= exp(-xy);  0 <= x <= 1, y >= 0. Lower side is -inf (unused).
ChainCheck check_one_minus_upper(double x, double y);
// exp(-x(1+x) y) <= (1-x)^y;  0 <= x <= 1/2, y >= 0. Upper side is +inf.
// With the factor (1-x) in place of (1+x) the left side would exceed the
// middle for every x > 0, y > 0, since ln(1-x) < -x.
ChainCheck check_one_minus_lower(double x, double y);
// (1 - x/y)^((x-1)/2) <= prod_{i<x} (1 - i/y) <= (1 - x/(2y))^(x-1);
// natural 1 <= x <= y.
ChainCheck check_falling_product(long x, long y);

// Every chain whose precondition admits (x, y). Throws DomainError if none.
std::vector<ChainCheck> bound_checks(double x, double y);

}  // namespace rdnf
