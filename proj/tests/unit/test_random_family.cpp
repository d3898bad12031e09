#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "gupsu2/random_family.hpp"

using namespace gupsu2;

TEST_CASE("same seed, same draws") {
  RandomFamily a(99);
  RandomFamily b(99);
  for (int i = 0; i < 20; ++i) CHECK(a.function() == b.function());
  CHECK(a.g() == b.g());
}

TEST_CASE("draws respect the family bounds") {
  RandomFamily rf(1);
  const RandomFamilySpec bounds;
  for (int i = 0; i < 500; ++i) {
    const AlgebraicFunction f = rf.function();
    CHECK(f.degree() <= bounds.max_degree);
    CHECK(f.degree() >= 0);
    CHECK(std::abs(f.s()) <= bounds.max_abs_s);
    CHECK(std::find(bounds.betas.begin(), bounds.betas.end(), f.beta()) != bounds.betas.end());
    CHECK(std::abs(f.coeffs().back()) >= 0.1);
    CHECK(f.max_abs_coeff() <= 1.0);
    const double g = rf.g();
    CHECK(g >= bounds.g_min);
    CHECK(g <= bounds.g_max);
  }
}

TEST_CASE("lattice states carry the requested offsets") {
  RandomFamily rf(2);
  const ModeState m = rf.mode_state(0.5, {-1, 0, 2});
  CHECK(m.components().size() == 3);
  CHECK(m.at(2) != nullptr);
  const SequenceState s = rf.sequence_state(0.0, {1, 2, 3});
  CHECK(s.components().size() == 3);
  CHECK(s.weight(3) == 3.0);
  for (const auto& [k, f] : s.components()) CHECK(f.s() == s.components().begin()->second.s());
}
