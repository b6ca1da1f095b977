#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <locale>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "rdnf/analytics.hpp"
#include "rdnf/error.hpp"
#include "rdnf/maximal_intervals.hpp"
#include "rdnf/random_model.hpp"
#include "rdnf/truth_table.hpp"
#include "rdnf/verify.hpp"

namespace rdnf::cli {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

namespace {

// JSON has no infinities; they are emitted as strings.
json number(double v) {
  if (std::isfinite(v)) {
    return v;
  }
  return format_double(v);
}

TruthTable load_or_sample(const RunConfig& cfg) {
  if (!cfg.in_path.empty()) {
    std::ifstream in(cfg.in_path);
    if (!in) {
      throw ParseError("cannot open " + cfg.in_path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_truth_table(buffer.str());
  }
  const ModelParams params{cfg.n, cfg.p, cfg.seed, cfg.index + 1};
  return sample_function(params, cfg.index);
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const auto f = load_or_sample(cfg);
  const auto dnf = enumerate_fast(f);
  const auto lines = dnf.sorted_strings();
  const auto s = dnf.spectrum();
  if (cfg.format == Format::kJson) {
    json doc;
    doc["n"] = f.num_vars();
    doc["truth_table"] = to_hex(f);
    doc["intervals"] = lines;
    doc["spectrum"] = s.counts;
    doc["complexity"] = s.complexity();
    out << doc.dump(2) << "\n";
    return kOk;
  }
  for (const auto& line : lines) {
    out << line << "\n";
  }
  out << "\nk,count\n";
  for (std::size_t k = 0; k < s.counts.size(); ++k) {
    out << k << "," << s.counts[k] << "\n";
  }
  return kOk;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  out << to_text(load_or_sample(cfg));
  return kOk;
}

int cmd_expect(const RunConfig& cfg, std::ostream& out) {
  const auto curve = expectation_curve(cfg.n, cfg.p);
  if (cfg.format == Format::kJson) {
    json doc;
    doc["n"] = cfg.n;
    doc["p"] = cfg.p;
    json rows = json::array();
    for (std::size_t k = 0; k < curve.value.size(); ++k) {
      rows.push_back({{"k", k},
                      {"log2_value", number(curve.log2_value[k])},
                      {"value", number(curve.value[k])}});
    }
    doc["curve"] = rows;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "k,log2_value,value\n";
  for (std::size_t k = 0; k < curve.value.size(); ++k) {
    out << k << "," << format_double(curve.log2_value[k]) << "," << format_double(curve.value[k])
        << "\n";
  }
  return kOk;
}

int cmd_mc(const RunConfig& cfg, std::ostream& out) {
  const ModelParams params{cfg.n, cfg.p, cfg.seed, cfg.samples};
  const auto est = monte_carlo(params, cfg.jobs);
  if (cfg.format == Format::kJson) {
    json doc;
    doc["params"] = {{"n", cfg.n}, {"p", cfg.p}, {"seed", cfg.seed}, {"samples", cfg.samples}};
    doc["degenerate"] = est.degenerate;
    json rows = json::array();
    for (std::size_t k = 0; k < est.mean.size(); ++k) {
      rows.push_back({{"k", k},
                      {"mean", est.mean[k]},
                      {"se", est.std_error[k]},
                      {"samples", est.samples}});
    }
    doc["estimate"] = rows;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "k,mean,se,samples\n";
  for (std::size_t k = 0; k < est.mean.size(); ++k) {
    out << k << "," << format_double(est.mean[k]) << "," << format_double(est.std_error[k]) << ","
        << est.samples << "\n";
  }
  return kOk;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
  const auto values = exact_expectation(cfg.n, cfg.p);
  if (cfg.format == Format::kJson) {
    json doc;
    doc["n"] = cfg.n;
    doc["p"] = cfg.p;
    doc["expectation"] = values;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "k,value\n";
  for (std::size_t k = 0; k < values.size(); ++k) {
    out << k << "," << format_double(values[k]) << "\n";
  }
  return kOk;
}

int cmd_points(const RunConfig& cfg, std::ostream& out) {
  const auto pts = characteristic_points(cfg.n, cfg.p);
  const int peak = argmax_k(cfg.n, cfg.p);
  if (cfg.format == Format::kCsv) {
    out << "k1,k0,k2,argmax\n"
        << format_double(pts.k1) << "," << format_double(pts.k0) << "," << format_double(pts.k2)
        << "," << peak << "\n";
    return kOk;
  }
  json doc;
  doc["k1"] = pts.k1;
  doc["k0"] = pts.k0;
  doc["k2"] = pts.k2;
  doc["argmax"] = peak;
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const auto rows = boundary_values(cfg.n, cfg.p);
  if (cfg.format == Format::kJson) {
    json doc = json::array();
    for (const auto& r : rows) {
      json row{{"k", r.k},
               {"value", number(r.value)},
               {"printed", number(r.printed_general)},
               {"agrees", r.agrees}};
      if (r.printed_half) {
        row["printed_half"] = number(*r.printed_half);
      }
      if (!r.note.empty()) {
        row["note"] = r.note;
      }
      doc.push_back(row);
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "k,value,printed,printed_half,agrees,note\n";
  for (const auto& r : rows) {
    out << r.k << "," << format_double(r.value) << "," << format_double(r.printed_general) << ","
        << (r.printed_half ? format_double(*r.printed_half) : "") << ","
        << (r.agrees ? "yes" : "no") << "," << r.note << "\n";
  }
  return kOk;
}

int cmd_tail(const RunConfig& cfg, std::ostream& out) {
  const auto pts = characteristic_points(cfg.n, cfg.p);
  const int k_high = cfg.k.value_or(static_cast<int>(std::floor(pts.k2)) + 1);
  const auto bound = upper_tail(cfg.n, cfg.p, k_high);
  const auto t2 = theorem2_tail(cfg.n, cfg.p);
  out << "quantity,value\n";
  out << "k_high," << k_high << "\n";
  out << "markov_bound_above_k_high," << format_double(bound.value) << "\n";
  out << "log2_markov_bound_above_k_high," << format_double(bound.log2_value) << "\n";
  out << "outside_band_bound," << format_double(t2.value) << "\n";
  out << "log2_outside_band_bound," << format_double(t2.log2_value) << "\n";
  if (cfg.n <= kMaxEnumDim && cfg.samples > 0) {
    const ModelParams params{cfg.n, cfg.p, cfg.seed, cfg.samples};
    const auto freq = tail_frequency(params, 0, k_high, cfg.jobs);
    out << "observed_frequency," << format_double(freq.frequency) << "\n";
    out << "observed_se," << format_double(freq.std_error) << "\n";
    out << "samples," << freq.samples << "\n";
  }
  return kOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const auto checks = bound_checks(cfg.x, cfg.y);
  char line[256];
  std::snprintf(line, sizeof line, "%-18s %12s %12s %22s %22s %22s %s\n", "chain", "x", "y",
                "ln_lower", "ln_middle", "ln_upper", "holds");
  out << line;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-18s %12s %12s %22s %22s %22s %s\n", c.name.c_str(),
                  format_double(c.x).c_str(), format_double(c.y).c_str(),
                  format_double(c.log_lower).c_str(), format_double(c.log_middle).c_str(),
                  format_double(c.log_upper).c_str(), c.holds ? "yes" : "NO");
    out << line;
  }
  const bool all = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
  return all ? kOk : kVerifyFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyConfig vc;
  vc.functions_per_cell = cfg.verify_functions;
  vc.max_enum_n = cfg.verify_enum_n;
  vc.max_curve_n = cfg.verify_curve_n;
  vc.inequality_points = cfg.verify_points;
  vc.seed = cfg.seed;
  vc.jobs = cfg.jobs;
  const auto results = run_verification(vc);
  const PropertyResult* first_failure = nullptr;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    if (!r.passed && first_failure == nullptr) {
      first_failure = &r;
    }
  }
  if (first_failure != nullptr) {
    err << "verification failed: " << first_failure->name << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto& c = config.command;
    if (c == "enumerate") {
      return cmd_enumerate(config, out);
    }
    if (c == "sample") {
      return cmd_sample(config, out);
    }
    if (c == "expect") {
      return cmd_expect(config, out);
    }
    if (c == "mc") {
      return cmd_mc(config, out);
    }
    if (c == "exact") {
      return cmd_exact(config, out);
    }
    if (c == "points") {
      return cmd_points(config, out);
    }
    if (c == "table") {
      return cmd_table(config, out);
    }
    if (c == "tail") {
      return cmd_tail(config, out);
    }
    if (c == "bounds") {
      return cmd_bounds(config, out);
    }
    if (c == "verify") {
      return cmd_verify(config, out, err);
    }
    err << "unknown command: " << c << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace rdnf::cli
