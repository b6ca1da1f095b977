#include "rdnf/verify.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "rdnf/analytics.hpp"
#include "rdnf/counter_rng.hpp"
#include "rdnf/error.hpp"
#include "rdnf/maximal_intervals.hpp"
#include "rdnf/random_model.hpp"

namespace rdnf {

namespace {

const std::vector<double> kPGrid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)) ||
         (a == 0.0 && b == 0.0);
}

double unit(CounterRng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

PropertyResult interval_counts() {
  for (int n = 1; n <= 12; ++n) {
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k) {
      total += count_intervals(n, k);
    }
    std::uint64_t three = 1;
    for (int i = 0; i < n; ++i) {
      three *= 3;
    }
    if (total != three) {
      return {"interval_count_sum", false, "n=" + std::to_string(n)};
    }
  }
  return {"interval_count_sum", true, "sum_k C(n,k) 2^(n-k) = 3^n for n <= 12"};
}

PropertyResult normalization() {
  for (int n = 1; n <= 3; ++n) {
    for (double p : {0.25, 0.5, 0.75}) {
      long double sum = 0;
      const std::uint64_t count = std::uint64_t{1} << (1u << n);
      for (std::uint64_t bits = 0; bits < count; ++bits) {
        sum += function_probability(TruthTable(n, {bits}), p);
      }
      if (std::abs(static_cast<double>(sum) - 1.0) > 1e-12) {
        return {"probability_normalization", false,
                "n=" + std::to_string(n) + " p=" + fmt(p) + " sum=" + fmt(static_cast<double>(sum))};
      }
    }
  }
  return {"probability_normalization", true, "n <= 3"};
}

PropertyResult exhaustive_identity(const VerifyConfig& cfg) {
  const int max_n = std::min(cfg.max_exact_n, kMaxExactDim);
  for (int n = 2; n <= max_n; ++n) {
    for (double p : {0.25, 0.5, 0.75}) {
      const auto exact = exact_expectation(n, p);
      for (int k = 0; k <= n; ++k) {
        const double closed = expected_count(n, k, p);
        if (!rel_close(exact[static_cast<std::size_t>(k)], closed, 1e-9)) {
          return {"exhaustive_vs_closed_form", false,
                  "n=" + std::to_string(n) + " p=" + fmt(p) + " k=" + std::to_string(k) +
                      " exhaustive=" + fmt(exact[static_cast<std::size_t>(k)]) +
                      " closed=" + fmt(closed)};
        }
      }
    }
  }
  return {"exhaustive_vs_closed_form", true, "n in [2," + std::to_string(max_n) + "], rel 1e-9"};
}

PropertyResult enumerator_agreement(const VerifyConfig& cfg) {
  const int max_n = std::min(cfg.max_enum_n, kMaxBruteForceDim);
  int checked = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (double p : {0.3, 0.5, 0.7}) {
      const ModelParams params{n, p, cfg.seed, static_cast<std::uint64_t>(cfg.functions_per_cell)};
      for (int i = 0; i < cfg.functions_per_cell; ++i) {
        const auto f = sample_function(params, static_cast<std::uint64_t>(i));
        const auto brute = enumerate_bruteforce(f);
        if (brute != enumerate_fast(f) || brute != blake_consensus(f) ||
            brute.spectrum() != spectrum(f)) {
          return {"enumerator_agreement", false,
                  "n=" + std::to_string(n) + " p=" + fmt(p) + " sample=" + std::to_string(i)};
        }
        ++checked;
      }
    }
  }
  return {"enumerator_agreement", true, std::to_string(checked) + " functions"};
}

PropertyResult reduced_form_structure(const VerifyConfig& cfg) {
  for (int n = 1; n <= std::min(cfg.max_enum_n, kMaxBruteForceDim); ++n) {
    const ModelParams params{n, 0.6, cfg.seed + 7, static_cast<std::uint64_t>(cfg.functions_per_cell)};
    for (int i = 0; i < cfg.functions_per_cell; ++i) {
      const auto f = sample_function(params, static_cast<std::uint64_t>(i));
      const auto dnf = enumerate_fast(f);
      const auto terms = dnf.intervals();
      for (const auto& t : terms) {
        if (!all_ones(f, t)) {
          return {"reduced_form_structure", false, "unsound term " + t.to_string()};
        }
        for (const auto& u : terms) {
          if (!(t == u) && t.contains(u)) {
            return {"reduced_form_structure", false, "nested terms " + t.to_string()};
          }
        }
      }
      for (Mask v = 0; v < f.num_vertices(); ++v) {
        if (f.get(v) && !dnf_covers(terms, Vertex(n, v))) {
          return {"reduced_form_structure", false, "uncovered vertex n=" + std::to_string(n)};
        }
      }
    }
  }
  return {"reduced_form_structure", true, "sound, complete, antichain"};
}

PropertyResult quotient_consistency() {
  for (int n = 1; n <= 30; ++n) {
    for (double p : kPGrid) {
      for (int k = 0; k < n; ++k) {
        const auto d = ratio(n, k, p);
        const double lhs = d.log2_R + log2_expected_count(n, k, p);
        const double rhs = log2_expected_count(n, k + 1, p);
        // Relative 1e-9 on the linear values while they are representable;
        // below that the logs themselves carry rounding of order |rhs| ulp.
        const double tol = rhs > -1000.0 ? std::log2(1.0 + 1e-9) : 1e-12 * std::abs(rhs);
        if (std::isfinite(rhs) && std::abs(lhs - rhs) > tol) {
          return {"ratio_quotient_consistency", false,
                  "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + fmt(p)};
        }
      }
    }
  }
  return {"ratio_quotient_consistency", true, "n <= 30, p in 0.1..0.9"};
}

PropertyResult unimodal(const VerifyConfig& cfg) {
  int cells = 0;
  for (int n = 8; n <= cfg.max_curve_n; n *= 2) {
    for (double p : kPGrid) {
      const auto rep = unimodality(n, p);
      const bool interior = rep.argmax > 0 && rep.argmax < n;
      if (!rep.unimodal() || (interior && rep.sign_changes != 1)) {
        return {"unimodality", false, "n=" + std::to_string(n) + " p=" + fmt(p)};
      }
      ++cells;
    }
  }
  return {"unimodality", true, std::to_string(cells) + " (n, p) cells single-peaked"};
}

PropertyResult b_step() {
  for (int n = 2; n <= 30; ++n) {
    for (double p : kPGrid) {
      for (int k = 0; k < n - 1; ++k) {
        if (!ratio_b_step(n, k, p).below_one()) {
          return {"b_step_below_one", false,
                  "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + fmt(p)};
        }
      }
    }
  }
  return {"b_step_below_one", true, "n <= 30"};
}

PropertyResult characteristic_identities() {
  for (int n : {2, 3, 10, 16, 100, 1000, 1 << 20}) {
    for (double p : kPGrid) {
      const auto pts = characteristic_points(n, p);
      if (!rel_close(e_value(pts.k1, p), 0.5, 1e-9) ||
          !rel_close(e_value(pts.k0, p), 1.0 / n, 1e-9) ||
          !rel_close(log2_e_value(pts.k2, p), -static_cast<double>(n), 1e-9) ||
          !(pts.k1 <= pts.k0 && pts.k0 <= pts.k2)) {
        return {"characteristic_points", false, "n=" + std::to_string(n) + " p=" + fmt(p)};
      }
    }
  }
  return {"characteristic_points", true, "E_k1 = 1/2, E_k0 = 1/n, E_k2 = 2^-n"};
}

PropertyResult inequality_chains(const VerifyConfig& cfg) {
  CounterRng rng(cfg.seed, 0x1E0);
  int violations = 0;
  std::string first;
  auto record = [&](const ChainCheck& c) {
    if (!c.holds) {
      if (violations++ == 0) {
        first = c.name + " x=" + fmt(c.x) + " y=" + fmt(c.y);
      }
    }
  };
  for (int i = 0; i < cfg.inequality_points; ++i) {
    const double x = unit(rng);
    const double y = 1000.0 * unit(rng);
    record(check_one_plus_power(x, y));
    record(check_one_minus_upper(x, y));
    record(check_one_minus_lower(0.5 * unit(rng), y));
    const long yy = 1 + static_cast<long>(rng() % 2000);
    const long xx = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(yy));
    record(check_falling_product(xx, yy));
  }
  if (violations > 0) {
    return {"inequality_chains", false, std::to_string(violations) + " violations, first " + first};
  }
  return {"inequality_chains", true,
          std::to_string(cfg.inequality_points) + " points per chain, 0 violations"};
}

PropertyResult stability() {
  const int n = 1000000;
  for (double p : {0.1, 0.5, 0.9}) {
    for (int k = 0; k <= n; ++k) {
      const double l = log2_expected_count(n, k, p);
      // 2^k log2 p leaves the double range near k = 1024; beyond that the
      // log value saturates at -inf.
      if (std::isnan(l) || (k <= 1000 && !std::isfinite(l))) {
        return {"log_domain_stability", false, "k=" + std::to_string(k) + " p=" + fmt(p)};
      }
    }
  }
  return {"log_domain_stability", true, "n = 10^6: no NaN, finite for k <= 1000"};
}

}  // namespace

std::vector<PropertyResult> run_verification(const VerifyConfig& config) {
  std::vector<std::function<PropertyResult()>> suites = {
      [] { return interval_counts(); },
      [] { return normalization(); },
      [&] { return exhaustive_identity(config); },
      [&] { return enumerator_agreement(config); },
      [&] { return reduced_form_structure(config); },
      [] { return quotient_consistency(); },
      [&] { return unimodal(config); },
      [] { return b_step(); },
      [] { return characteristic_identities(); },
      [&] { return inequality_chains(config); },
      [] { return stability(); },
  };
  std::vector<PropertyResult> results;
  for (auto& suite : suites) {
    try {
      results.push_back(suite());
    } catch (const Error& e) {
      results.push_back({"exception", false, e.what()});
    }
  }
  return results;
}

}  // namespace rdnf
