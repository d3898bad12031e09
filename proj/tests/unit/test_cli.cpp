#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gupsu2/eigenfunctions.hpp"
#include "gupsu2_cli/cli.hpp"
#include "json.hpp"

using namespace gupsu2::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> owned{"gupsu2"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : owned) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "gupsu2_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("spectrum as CSV") {
  const Result r = invoke({"spectrum", "--g", "1", "--beta", "1", "--n-max", "3", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "n,E\n0,0\n1,3\n2,8\n3,15\n");
}

TEST_CASE("empty table is a header-only CSV") {
  Artifact a;
  a.columns = {"n", "E"};
  CHECK(to_csv(a) == "n,E\n");
}

TEST_CASE("oracle JSON parses back") {
  const Result r = invoke({"oracle", "--g", "2", "--beta", "1", "--N", "4096", "--k", "4", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["closed_form"] == nlohmann::json::array({0, 5, 12, 21}));
  CHECK(doc["residuals"]["max_rel_error"].get<double>() <= 5e-3);
  CHECK(doc["lines"].size() == 4);
  CHECK(doc["params"]["N"] == 4096);
  CHECK(doc["slow_convergence_warning"] == false);
}

TEST_CASE("numbers keep 17 significant digits") {
  const Result r = invoke({"eigenfunction", "--n", "2", "--g", "1.3", "--beta", "0.7", "--samples", "11"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& fn = doc["function"];
  const gupsu2::AlgebraicFunction psi(fn["coeffs"].get<std::vector<double>>(), fn["s"].get<double>(),
                                      fn["beta"].get<double>());
  const gupsu2::AlgebraicFunction ref = gupsu2::eigenfunction(2, 1.3, 0.7);
  CHECK(psi == ref);
  for (const auto& line : doc["lines"]) CHECK(line["psi"].get<double>() == ref(line["p"].get<double>()));
  CHECK(doc["residuals"]["norm_defect"].get<double>() <= 1e-12);
}

TEST_CASE("identical configs give identical bytes") {
  const Result a = invoke({"harmonic", "--beta", "0.5", "--n-max", "3", "--N", "512"});
  const Result b = invoke({"harmonic", "--beta", "0.5", "--n-max", "3", "--N", "512"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc.contains("g"));
  CHECK(doc["oracle_deltas"].size() == 4);
}

TEST_CASE("dirac reports g and oracle deltas") {
  const Result r = invoke({"dirac", "--beta", "0.5", "--n-max", "3"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["g"].get<double>() == 2.0);
  CHECK(doc["residuals"]["max_oracle_delta"].get<double>() <= 5e-3);
  CHECK(doc["residuals"]["coefficient_residual"].get<double>() <= 1e-14);

  const Result skipped = invoke({"dirac", "--beta", "4", "--n-max", "1"});
  REQUIRE(skipped.code == kExitOk);
  CHECK(skipped.err.find("oracle skipped") != std::string::npos);
  CHECK(nlohmann::json::parse(skipped.out)["residuals"]["max_oracle_delta"].is_null());
}

TEST_CASE("verify exit codes") {
  const Result r = invoke({"verify", "--suite", "algebra"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("all checks passed") != std::string::npos);

  RunConfig cfg;
  cfg.command = Command::verify;
  cfg.suites = {gupsu2::Suite::su2, gupsu2::Suite::normalization};
  cfg.output = scratch("verify.json");
  std::ostringstream out;
  std::ostringstream err;
  CHECK(run(cfg, out, err) == kExitOk);
  const auto doc = nlohmann::json::parse(slurp(cfg.output));
  CHECK(doc["passed"] == true);
  CHECK(doc["notes"].contains("normalization"));
}

TEST_CASE("usage and validation errors exit 2") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"spectrum", "--nope", "1"}).code == kExitUsage);
  CHECK(invoke({"spectrum", "--beta", "0"}).code == kExitUsage);
  CHECK(invoke({"spectrum", "--beta", "abc"}).code == kExitUsage);
  CHECK(invoke({"spectrum", "--n-max", "-1"}).code == kExitUsage);
  CHECK(invoke({"oracle", "--N", "8"}).code == kExitUsage);
  CHECK(invoke({"oracle", "--g", "0.4"}).code == kExitUsage);
  CHECK(invoke({"oracle", "--N", "16", "--k", "17"}).code == kExitUsage);
  CHECK(invoke({"verify", "--suite", "bogus"}).code == kExitUsage);
  CHECK(invoke({"spectrum", "--format", "xml"}).code == kExitUsage);
  CHECK(invoke({"dirac", "--beta", "1e-18"}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("I/O errors exit 3") {
  CHECK(invoke({"spectrum", "--output", "/nonexistent-dir/x/y.json"}).code == kExitIo);
  CHECK(invoke({"spectrum", "--config", "/nonexistent-dir/c.json"}).code == kExitIo);
}

TEST_CASE("config file sits between flags and defaults") {
  const auto path = scratch("config.json");
  {
    std::ofstream(path) << R"({"g": 2, "beta": 0.5, "n-max": 2, "format": "csv"})";
  }
  const Result r = invoke({"spectrum", "--config", path.string(), "--g", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "n,E\n0,0\n1,3.5\n2,8\n");

  const auto bad = scratch("bad.json");
  {
    std::ofstream(bad) << R"({"unknown": 1})";
  }
  CHECK(invoke({"spectrum", "--config", bad.string()}).code == kExitUsage);

  const auto suites = scratch("suites.json");
  {
    std::ofstream(suites) << R"({"suite": ["su2"], "sequential": true})";
  }
  const Result v = invoke({"verify", "--config", suites.string()});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("== su2") != std::string::npos);
  CHECK(v.out.find("== algebra") == std::string::npos);
}

TEST_CASE("output directory from the environment") {
  const auto dir = scratch("envdir");
  std::filesystem::create_directories(dir);
  ::setenv(kOutputDirEnv, dir.c_str(), 1);
  const Result r = invoke({"spectrum", "--n-max", "1", "--format", "csv"});
  ::unsetenv(kOutputDirEnv);
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(slurp(dir / "spectrum.csv") == "n,E\n0,0\n1,3\n");
}
