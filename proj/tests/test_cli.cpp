#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "../tools/commands.hpp"
#include "rdnf/truth_table.hpp"

using namespace rdnf;
using namespace rdnf::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("rdnf_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

RunConfig command(const std::string& name) {
  RunConfig cfg;
  cfg.command = name;
  return cfg;
}

}  // namespace

TEST_CASE("enumerate from a file") {
  auto cfg = command("enumerate");
  cfg.in_path = temp_file("single.tt", "n=2\n8\n");
  auto r = invoke(cfg);
  CHECK(r.code == kOk);
  CHECK(r.out == "11\n\nk,count\n0,1\n1,0\n2,0\n");

  cfg.in_path = temp_file("one.tt", "n=2\nF\n");
  CHECK(invoke(cfg).out == "--\n\nk,count\n0,0\n1,0\n2,1\n");

  cfg.in_path = temp_file("classic.tt", "n=3\nD8\n");
  CHECK(invoke(cfg).out == "-11\n0-1\n11-\n\nk,count\n0,0\n1,3\n2,0\n3,0\n");
}

TEST_CASE("enumerate errors map to exit codes") {
  auto cfg = command("enumerate");
  cfg.in_path = temp_file("bad.tt", "n=2\nZZ\n");
  CHECK(invoke(cfg).code == kUsage);
  cfg.in_path = temp_file("big.tt", "n=25\n0\n");
  CHECK(invoke(cfg).code == kResourceCap);
  cfg.in_path = "/nonexistent/rdnf.tt";
  CHECK(invoke(cfg).code == kUsage);
  CHECK(invoke(command("nonsense")).code == kUsage);
}

TEST_CASE("expect") {
  auto cfg = command("expect");
  cfg.n = 2;
  auto r = invoke(cfg);
  CHECK(r.code == kOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "k,log2_value,value");
  std::getline(in, line);
  CHECK(line == "0,-1,0.5");
  std::getline(in, line);
  CHECK(line.rfind("1,", 0) == 0);
  CHECK(line.substr(line.rfind(',') + 1) == "0.75");
  std::getline(in, line);
  CHECK(line == "2,-4,0.0625");

  cfg.n = 4;
  CHECK(invoke(cfg).out.find("\n1,") != std::string::npos);
  cfg.p = 1.0;
  CHECK(invoke(cfg).code == kUsage);
}

TEST_CASE("expect at a million variables") {
  auto cfg = command("expect");
  cfg.n = 1000000;
  const auto r = invoke(cfg);
  CHECK(r.code == kOk);
  CHECK(r.out.find("nan") == std::string::npos);
}

TEST_CASE("points json") {
  auto cfg = command("points");
  cfg.n = 16;
  cfg.format = Format::kJson;
  const auto r = invoke(cfg);
  CHECK(r.code == kOk);
  CHECK(r.out.find("\"k1\": 0.0") != std::string::npos);
  CHECK(r.out.find("\"k0\": 2.0") != std::string::npos);
  CHECK(r.out.find("\"k2\": 4.0") != std::string::npos);
  CHECK(r.out.find("\"argmax\": 2") != std::string::npos);
}

TEST_CASE("mc, exact and table") {
  auto mc = command("mc");
  mc.n = 3;
  mc.samples = 50;
  mc.seed = 8;
  const auto a = invoke(mc);
  CHECK(a.code == kOk);
  CHECK(a.out.rfind("k,mean,se,samples\n", 0) == 0);
  mc.jobs = 3;
  CHECK(invoke(mc).out == a.out);
  mc.format = Format::kJson;
  CHECK(invoke(mc).out.find("\"params\"") != std::string::npos);

  auto exact = command("exact");
  exact.n = 3;
  CHECK(invoke(exact).out.find("2,0.351562") != std::string::npos);
  exact.n = 5;
  CHECK(invoke(exact).code == kResourceCap);

  auto table = command("table");
  table.n = 3;
  const auto t = invoke(table);
  CHECK(t.code == kOk);
  CHECK(t.out.find("2,0.351562") != std::string::npos);
  CHECK(t.out.find(",no,") != std::string::npos);
}

TEST_CASE("bounds") {
  auto cfg = command("bounds");
  cfg.x = 1;
  cfg.y = 1;
  CHECK(invoke(cfg).code == kOk);
  cfg.x = 3;
  cfg.y = 6;
  const auto r = invoke(cfg);
  CHECK(r.code == kOk);
  CHECK(r.out.find("yes") != std::string::npos);
  cfg.x = -2;
  CHECK(invoke(cfg).code == kUsage);
}

TEST_CASE("sample round trip and determinism") {
  auto cfg = command("sample");
  cfg.n = 9;
  cfg.seed = 77;
  cfg.index = 4;
  const auto a = invoke(cfg);
  CHECK(a.code == kOk);
  CHECK(invoke(cfg).out == a.out);
  const auto path = temp_file("roundtrip.tt", a.out);
  const auto parsed = parse_truth_table(a.out);
  CHECK(to_text(parsed) == a.out);

  auto from_file = command("enumerate");
  from_file.in_path = path;
  auto sampled = command("enumerate");
  sampled.n = 9;
  sampled.seed = 77;
  sampled.index = 4;
  CHECK(invoke(from_file).out == invoke(sampled).out);
}

TEST_CASE("verify on a small grid") {
  auto cfg = command("verify");
  cfg.verify_functions = 5;
  cfg.verify_enum_n = 5;
  cfg.verify_curve_n = 64;
  cfg.verify_points = 200;
  const auto r = invoke(cfg);
  CHECK(r.code == kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("format_double") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-1.0 / 0.0) == "-inf");
}
