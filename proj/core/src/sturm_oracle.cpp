#include "gupsu2/sturm_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gupsu2/error.hpp"

namespace gupsu2 {
namespace {

constexpr std::size_t kMinGrid = 16;

double grid_length(double beta) noexcept { return std::numbers::pi / std::sqrt(beta); }

}  // namespace

double sturm_node(std::size_t i, std::size_t n, double beta) noexcept {
  const double length = grid_length(beta);
  const double h = length / static_cast<double>(n + 1);
  return -0.5 * length + static_cast<double>(i) * h;
}

double poschl_teller_potential(double u, double g, double beta) noexcept {
  const double t = std::tan(std::sqrt(beta) * u);
  return beta * (g * (g - 1.0) * t * t - g);
}

TridiagonalOperator to_sturm(double g, double beta, std::size_t n) {
  if (!(g >= 0.5) || !std::isfinite(g)) {
    std::ostringstream os;
    os << "to_sturm: g must be >= 1/2, got " << g;
    throw InvalidParameterError(os.str());
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidParameterError("to_sturm: beta must be positive");
  if (n < kMinGrid) {
    std::ostringstream os;
    os << "to_sturm: need at least " << kMinGrid << " interior nodes, got " << n;
    throw InvalidParameterError(os.str());
  }
  TridiagonalOperator t;
  t.g = g;
  t.beta = beta;
  t.h = grid_length(beta) / static_cast<double>(n + 1);
  t.slow_convergence_warning = g < 1.0;
  const double inv_h2 = 1.0 / (t.h * t.h);
  t.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.diag[i] = 2.0 * inv_h2 + poschl_teller_potential(sturm_node(i + 1, n, beta), g, beta);
  }
  t.offdiag.assign(n - 1, -inv_h2);
  return t;
}

std::size_t sturm_count(const TridiagonalOperator& t, double x) noexcept {
  // LDL^T pivots of T - xI; the number of negative pivots is the inertia count.
  const std::size_t n = t.size();
  std::size_t count = 0;
  double pivot = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double b2 = i == 0 ? 0.0 : t.offdiag[i - 1] * t.offdiag[i - 1];
    pivot = (t.diag[i] - x) - (i == 0 ? 0.0 : b2 / pivot);
    if (pivot == 0.0) pivot = -std::numeric_limits<double>::min();
    if (pivot < 0.0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& t, std::size_t k) {
  const std::size_t n = t.size();
  if (n == 0 || t.offdiag.size() + 1 != n) {
    throw InvalidParameterError("lowest_eigenvalues: malformed tridiagonal operator");
  }
  if (k < 1 || k > n) {
    std::ostringstream os;
    os << "lowest_eigenvalues: k must be in [1, " << n << "], got " << k;
    throw InvalidParameterError(os.str());
  }

  // Gershgorin interval.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.offdiag[i - 1]);
    if (i + 1 < n) r += std::abs(t.offdiag[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
  lo -= pad;
  hi += pad;

  std::vector<double> out;
  out.reserve(k);
  double floor = lo;
  for (std::size_t index = 0; index < k; ++index) {
    // Smallest x with count(x) > index: eigenvalue number `index`.
    double a = floor;
    double b = hi;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(t, mid) > index) {
        b = mid;
      } else {
        a = mid;
      }
    }
    const double value = 0.5 * (a + b);
    out.push_back(value);
    floor = a;
  }
  return out;
}

SpectralResult oracle_spectrum(double g, double beta, std::size_t n, std::size_t k) {
  const TridiagonalOperator t = to_sturm(g, beta, n);
  const std::vector<double> values = lowest_eigenvalues(t, k);
  SpectralResult r;
  r.source = SpectralSource::oracle;
  r.g = g;
  r.beta = beta;
  r.lines.reserve(k);
  for (std::size_t i = 0; i < values.size(); ++i) r.lines.push_back({static_cast<unsigned>(i), values[i]});
  return r;
}

double discrete_box_eigenvalue(std::size_t level, std::size_t n, double beta) noexcept {
  const double length = grid_length(beta);
  const double h = length / static_cast<double>(n + 1);
  const double s = std::sin(static_cast<double>(level) * std::numbers::pi * h / (2.0 * length));
  return 4.0 / (h * h) * s * s - beta;
}

}  // namespace gupsu2
