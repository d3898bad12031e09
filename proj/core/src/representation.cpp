#include "gupsu2/representation.hpp"

#include <cmath>
#include <sstream>

#include "gupsu2/error.hpp"
#include "gupsu2/special_functions.hpp"

namespace gupsu2 {
namespace {

constexpr double kLabelTolerance = 1e-12;

bool is_integer(double x) { return std::abs(x - std::round(x)) <= kLabelTolerance; }

void require_label(double j, double g, const char* what) {
  if (!validate_label(j, g)) {
    std::ostringstream os;
    os << what << ": (j=" << j << ", g=" << g << ") is not a unitary su(2) label";
    throw DomainError(os.str());
  }
}

void require_positive_beta(double beta, const char* what) {
  if (!(beta > 0.0)) {
    std::ostringstream os;
    os << what << ": beta must be positive, got " << beta;
    throw InvalidParameterError(os.str());
  }
}

double checked_sqrt(double radicand, const char* what) {
  if (radicand < 0.0) {
    std::ostringstream os;
    os << what << ": negative norm squared " << radicand;
    throw DomainError(os.str());
  }
  return std::sqrt(radicand);
}

}  // namespace

bool validate_label(double j, double g) noexcept {
  if (!std::isfinite(j) || !std::isfinite(g)) return false;
  const double two_j = 2.0 * j;
  if (!is_integer(two_j) || std::round(two_j) < 1.0) return false;
  if (!is_integer(j - g)) return false;
  return g <= j + kLabelTolerance && g >= 1.0 - j - kLabelTolerance;
}

double ladder_norm_up(double j, double g, double beta) {
  require_label(j, g, "ladder_norm_up");
  require_positive_beta(beta, "ladder_norm_up");
  return checked_sqrt(beta * (j * j - g * g), "ladder_norm_up");
}

double ladder_norm_down(double j, double g, double beta) {
  require_label(j, g, "ladder_norm_down");
  require_positive_beta(beta, "ladder_norm_down");
  return checked_sqrt(beta * (j * j - (g - 1.0) * (g - 1.0)), "ladder_norm_down");
}

double casimir_eigenvalue(double j) {
  if (!(j >= 0.5)) throw DomainError("casimir_eigenvalue: j must be >= 1/2");
  return j * j - 0.25;
}

double energy(unsigned n, double g, double beta) {
  if (!(g > 0.0)) throw InvalidParameterError("energy: g must be positive");
  require_positive_beta(beta, "energy");
  const double nn = static_cast<double>(n);
  return (nn * nn + 2.0 * nn * g) * beta;
}

double descent_coefficient(double j, double g, double beta) {
  require_label(j, g, "descent_coefficient");
  require_positive_beta(beta, "descent_coefficient");
  const double steps = std::round(j - g);
  const double log_c2 =
      log_gamma(j + g) - steps * std::log(beta) - log_gamma(2.0 * j) - log_gamma(steps + 1.0);
  return std::exp(0.5 * log_c2);
}

double descent_coefficient_n(unsigned n, double g, double beta) {
  if (!(g > 0.0)) throw InvalidParameterError("descent_coefficient_n: g must be positive");
  require_positive_beta(beta, "descent_coefficient_n");
  const double nn = static_cast<double>(n);
  const double log_c2 = log_gamma(2.0 * g + nn) - nn * std::log(beta) - log_gamma(nn + 1.0) -
                        log_gamma(2.0 * g + 2.0 * nn);
  return std::exp(0.5 * log_c2);
}

std::string_view to_string(SpectralSource s) noexcept {
  return s == SpectralSource::oracle ? "oracle" : "closed-form";
}

SpectralResult closed_form_spectrum(double g, double beta, unsigned n_max) {
  SpectralResult r;
  r.source = SpectralSource::closed_form;
  r.g = g;
  r.beta = beta;
  r.lines.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) r.lines.push_back({n, energy(n, g, beta)});
  return r;
}

}  // namespace gupsu2
