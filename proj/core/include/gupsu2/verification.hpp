#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gupsu2 {

/// Groups of invariant checks run by `gupsu2 verify`.
enum class Suite { algebra, su2, eigenfunctions, oracle, models, normalization };

inline constexpr std::array<Suite, 6> kAllSuites = {Suite::algebra,        Suite::su2,    Suite::eigenfunctions,
                                                    Suite::oracle,         Suite::models, Suite::normalization};

[[nodiscard]] std::string_view to_string(Suite suite) noexcept;
[[nodiscard]] std::optional<Suite> parse_suite(std::string_view name) noexcept;

/// One row of a residual table: the worst value seen against its tolerance.
struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct SuiteReport {
  Suite suite = Suite::algebra;
  std::vector<CheckResult> checks;
  /// Free-form report lines (e.g. the normalization audit table).
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const noexcept;
};

inline constexpr std::uint64_t kDefaultVerificationSeed = 20240607;

[[nodiscard]] SuiteReport run_suite(Suite suite, std::uint64_t seed = kDefaultVerificationSeed);

/// Runs the suites, concurrently when requested; reports come back in input order.
[[nodiscard]] std::vector<SuiteReport> run_suites(std::span<const Suite> suites, bool concurrent = true,
                                                  std::uint64_t seed = kDefaultVerificationSeed);

/// Sample points in [lo, hi] at which neither side of the Gegenbauer comparison
/// is close to a root, so the proportionality ratio is well conditioned.
[[nodiscard]] std::vector<double> gegenbauer_samples(unsigned n, double g, double beta, double lo, double hi,
                                                     std::size_t count);

}  // namespace gupsu2
