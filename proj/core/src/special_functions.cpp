#include "gupsu2/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gupsu2/error.hpp"

namespace gupsu2 {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << "log_gamma: argument must be positive, got " << x;
    throw DomainError(os.str());
  }
  if (x < 0.5) {
    // Reflection keeps the series in its accurate range.
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

double gamma_ratio(double a, double b) { return std::exp(log_gamma(a) - log_gamma(b)); }

double gegenbauer(unsigned n, double a, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * a * x;
  for (unsigned k = 2; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double next = (2.0 * x * (kk + a - 1.0) * curr - (kk + 2.0 * a - 2.0) * prev) / kk;
    prev = curr;
    curr = next;
  }
  return curr;
}

double beta_moment(unsigned k, double a, double beta) {
  const double kk = static_cast<double>(k);
  if (!(a > kk + 0.5)) {
    std::ostringstream os;
    os << "moment int p^" << 2 * k << " (1+beta p^2)^-" << a << " dp diverges";
    throw DivergenceError(os.str());
  }
  const double log_value = -(kk + 0.5) * std::log(beta) + log_gamma(kk + 0.5) + log_gamma(a - kk - 0.5) -
                           log_gamma(a);
  return std::exp(log_value);
}

}  // namespace gupsu2
