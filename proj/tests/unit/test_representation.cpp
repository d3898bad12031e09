#include <cmath>

#include "doctest.h"
#include "gupsu2/error.hpp"
#include "gupsu2/representation.hpp"

using namespace gupsu2;

TEST_CASE("label validation") {
  CHECK(validate_label(1.5, -0.5));
  CHECK(validate_label(1.0, 1.0));
  CHECK_FALSE(validate_label(0.7, 0.7));
  CHECK_FALSE(validate_label(1.0, 2.0));
  CHECK_FALSE(validate_label(1.0, -1.0));
  CHECK_FALSE(validate_label(1.0, 0.5));
  CHECK(validate_label(RepLabel{2.0, -1.0}));
  CHECK_FALSE(validate_label(0.0, 0.0));
}

TEST_CASE("ladder norms") {
  CHECK(ladder_norm_up(0.5, 0.5, 1.0) == 0.0);
  CHECK(ladder_norm_down(2.0, 2.0, 1.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(ladder_norm_up(1.0, 0.0, 4.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(ladder_norm_down(1.0, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS((void)ladder_norm_up(0.7, 0.7, 1.0), DomainError);
  CHECK_THROWS_AS((void)ladder_norm_down(1.0, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS((void)ladder_norm_up(1.0, 0.0, 0.0), InvalidParameterError);
}

TEST_CASE("casimir eigenvalue") {
  CHECK(casimir_eigenvalue(0.5) == 0.0);
  CHECK(casimir_eigenvalue(1.0) == 0.75);
  CHECK(casimir_eigenvalue(1.5) == 2.0);
  CHECK_THROWS((void)casimir_eigenvalue(0.25));
}

TEST_CASE("energy levels") {
  CHECK(energy(0, 3.7, 0.2) == 0.0);
  CHECK(energy(1, 1.0, 1.0) == 3.0);
  CHECK(energy(2, 1.5, 0.5) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK_THROWS_AS((void)energy(1, 0.0, 1.0), InvalidParameterError);
  CHECK_THROWS_AS((void)energy(1, 1.0, -1.0), InvalidParameterError);
}

TEST_CASE("descent coefficients") {
  for (double j : {0.5, 1.0, 2.5}) CHECK(descent_coefficient(j, j, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(descent_coefficient(1.0, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(descent_coefficient(2.0, 1.0, 1.0) == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
  CHECK_THROWS_AS((void)descent_coefficient(1.0, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS((void)descent_coefficient(2.3, 2.3, 1.0), DomainError);

  CHECK(descent_coefficient_n(0, 1.7, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(descent_coefficient_n(1, 1.0, 1.0) == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
  CHECK(descent_coefficient_n(2, 0.5, 1.0) == doctest::Approx(std::sqrt(1.0 / 24.0)).epsilon(1e-14));
}

TEST_CASE("descent coefficient equals the inverse product of lowering norms") {
  for (double beta : {0.25, 1.0, 4.0})
    for (int twice_j = 1; twice_j <= 12; ++twice_j) {
      const double j = 0.5 * twice_j;
      double product = 1.0;
      for (double g = j; g >= 1.0 - j - 1e-9; g -= 1.0) {
        CHECK(descent_coefficient(j, g, beta) * product == doctest::Approx(1.0).epsilon(1e-12));
        if (g - 1.0 >= 1.0 - j - 1e-9) product *= ladder_norm_down(j, g, beta);
      }
    }
}

TEST_CASE("descent_coefficient_n is the j = g + n coefficient") {
  for (double g : {0.5, 1.0, 2.5})
    for (unsigned n = 0; n <= 6; ++n)
      CHECK(descent_coefficient_n(n, g, 0.7) ==
            doctest::Approx(descent_coefficient(g + n, g, 0.7)).epsilon(1e-12));
}

TEST_CASE("closed-form spectrum") {
  const SpectralResult r = closed_form_spectrum(1.0, 1.0, 3);
  REQUIRE(r.lines.size() == 4);
  const double expected[] = {0.0, 3.0, 8.0, 15.0};
  for (unsigned n = 0; n < 4; ++n) {
    CHECK(r.lines[n].n == n);
    CHECK(r.lines[n].energy == expected[n]);
  }
  CHECK(r.source == SpectralSource::closed_form);
  CHECK(to_string(SpectralSource::closed_form) == "closed-form");
  CHECK(to_string(SpectralSource::oracle) == "oracle");
}
