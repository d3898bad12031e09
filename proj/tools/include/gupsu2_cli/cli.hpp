#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gupsu2/verification.hpp"

namespace gupsu2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Directory used for artifacts when no --output is given.
inline constexpr const char* kOutputDirEnv = "GUPSU2_OUTPUT_DIR";

enum class Command { spectrum, eigenfunction, verify, oracle, harmonic, dirac };
enum class Format { csv, json };

[[nodiscard]] std::string to_string(Command c);
[[nodiscard]] std::string to_string(Format f);

struct RunConfig {
  Command command = Command::spectrum;
  double g = 1.0;
  double beta = 1.0;
  long long n_max = 5;
  long long grid = 4096;
  long long k = 5;
  long long level = 0;
  double p_min = -5.0;
  double p_max = 5.0;
  long long samples = 101;
  double m = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double c = 1.0;
  std::vector<Suite> suites{kAllSuites.begin(), kAllSuites.end()};
  std::uint64_t seed = kDefaultVerificationSeed;
  bool concurrent = true;
  Format format = Format::json;
  std::filesystem::path output;
};

/// Bad parameters or grammar; maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unwritable output; maps to exit 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws UsageError for out-of-range parameters of the selected command.
void validate(const RunConfig& config);

/// Tabular result plus metadata. JSON form:
///   {"params": {...}, "lines": [{column: value}...], "residuals": {...}, extra keys...}
struct Artifact {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
  nlohmann::ordered_json residuals = nlohmann::ordered_json::object();
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  bool passed = true;
};

/// Computes the artifact of a validated config. Verification failures set passed = false.
[[nodiscard]] Artifact compute(const RunConfig& config);

[[nodiscard]] std::string to_csv(const Artifact& artifact);
[[nodiscard]] std::string to_json(const Artifact& artifact);

/// Writes the artifact to path, or to out when path is empty. Throws IoError.
void emit(const Artifact& artifact, Format format, const std::filesystem::path& path, std::ostream& out);

/// --output if given, else $GUPSU2_OUTPUT_DIR/<command>.<ext>, else empty (stdout).
[[nodiscard]] std::filesystem::path resolve_output(const RunConfig& config);

/// Validates, computes and emits. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (flags > --config JSON file > defaults) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gupsu2::cli
