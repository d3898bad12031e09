#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <random>

#include "gupsu2/algebraic_function.hpp"
#include "gupsu2/operators.hpp"

namespace gupsu2 {

/// Sampling ranges for randomized identity checks.
struct RandomFamilySpec {
  int max_degree = 6;
  double max_abs_s = 10.0;
  double g_min = -3.0;
  double g_max = 3.0;
  std::array<double, 3> betas{0.25, 1.0, 4.0};
};

/// Deterministic generator of random functions and states.
class RandomFamily {
 public:
  explicit RandomFamily(std::uint64_t seed, RandomFamilySpec spec = {}) : rng_(seed), spec_(spec) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  double g() { return uniform(spec_.g_min, spec_.g_max); }
  double beta() { return spec_.betas[static_cast<std::size_t>(integer(0, static_cast<int>(spec_.betas.size()) - 1))]; }
  double s() { return uniform(-spec_.max_abs_s, spec_.max_abs_s); }

  /// Coefficients uniform in [-1, 1], nonzero leading coefficient.
  AlgebraicFunction function(double s, double beta, int degree);
  AlgebraicFunction function(double s, double beta) { return function(s, beta, integer(0, spec_.max_degree)); }
  AlgebraicFunction function() { return function(s(), beta()); }

  /// State with components at the given lattice offsets sharing one exponent and beta.
  ModeState mode_state(double base, std::initializer_list<int> offsets);
  SequenceState sequence_state(double base, std::initializer_list<int> offsets);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
  RandomFamilySpec spec_;
};

}  // namespace gupsu2
