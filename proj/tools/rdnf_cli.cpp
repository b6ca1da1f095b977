// rdnf: maximal intervals of Boolean functions and the expected spectrum of the
// reduced DNF under the random-function model.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using rdnf::cli::Format;
  rdnf::cli::RunConfig cfg;

  CLI::App app{"Maximal intervals (prime implicants) and reduced-DNF spectra on the n-cube"};
  app.fallthrough();
  app.require_subcommand(1);

  int k = -1;
  std::string format = "csv";
  app.add_option("--n", cfg.n, "number of variables")->capture_default_str();
  app.add_option("--p", cfg.p, "probability of a 1-value per vertex, 0 < p < 1")
      ->capture_default_str();
  app.add_option("--k", k, "dimension threshold (tail: largest admitted dimension)");
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Monte Carlo sample count")->capture_default_str();
  app.add_option("--index", cfg.index, "sample index for enumerate/sample without --in")
      ->capture_default_str();
  app.add_option("--in", cfg.in_path, "truth-table file (\"n=<int>\" line, then hex)");
  app.add_option("--out", cfg.out_path, "output file (default stdout)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads for sampling")->capture_default_str();

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"enumerate", "list the maximal intervals and the spectrum of one function"},
      {"sample", "write one random truth table in the text format"},
      {"expect", "closed-form expected spectrum r_k(n,p) as k,log2_value,value"},
      {"mc", "Monte Carlo estimate of the expected spectrum as k,mean,se,samples"},
      {"exact", "exhaustive expectation over all functions (n <= 4)"},
      {"points", "characteristic points k1, k0, k2 and the peak dimension"},
      {"table", "boundary values k = 0, 1, n-1, n"},
      {"tail", "Markov tail bounds and observed tail frequency"},
      {"bounds", "evaluate the exponential / product inequality chains at (x, y)"},
      {"verify", "run the property suites; exit 4 on the first failure"},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&cfg, name = std::string(s.name)] { cfg.command = name; });
    if (std::string(s.name) == "bounds") {
      sub->add_option("--x", cfg.x, "x")->required();
      sub->add_option("--y", cfg.y, "y")->required();
    }
    if (std::string(s.name) == "verify") {
      sub->add_option("--functions", cfg.verify_functions, "random functions per (n, p) cell")
          ->capture_default_str();
      sub->add_option("--enum-n", cfg.verify_enum_n, "largest n for enumerator checks")
          ->capture_default_str();
      sub->add_option("--curve-n", cfg.verify_curve_n, "largest n for the unimodality scan")
          ->capture_default_str();
      sub->add_option("--points", cfg.verify_points, "random points per inequality chain")
          ->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rdnf::cli::kUsage;
  }
  std::transform(format.begin(), format.end(), format.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  cfg.format = format == "json" ? Format::kJson : Format::kCsv;
  if (k >= 0) {
    cfg.k = k;
  }
  if (cfg.jobs == 0) {
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  }

  if (cfg.out_path.empty()) {
    return rdnf::cli::run(cfg, std::cout, std::cerr);
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << cfg.out_path << " for writing\n";
    return rdnf::cli::kUsage;
  }
  return rdnf::cli::run(cfg, file, std::cerr);
}
