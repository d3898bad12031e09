#include "gupsu2/physical_models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gupsu2/eigenfunctions.hpp"
#include "gupsu2/error.hpp"
#include "gupsu2/operators.hpp"

namespace gupsu2 {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream os;
    os << name << " must be finite and positive, got " << value;
    throw InvalidParameterError(os.str());
  }
}

constexpr double kMaxDiracG = 1e15;

}  // namespace

double uncertainty_bound(double dp, double p_mean, double beta, double hbar) {
  if (!(dp > 0.0)) throw InvalidParameterError("uncertainty_bound: dp must be positive");
  return 0.5 * hbar * (1.0 + beta * dp * dp + beta * p_mean * p_mean);
}

double optimal_momentum_spread(double p_mean, double beta) {
  require_positive(beta, "beta");
  return std::sqrt((1.0 + beta * p_mean * p_mean) / beta);
}

double minimal_position_uncertainty(double p_mean, double beta, double hbar) {
  require_positive(beta, "beta");
  return hbar * std::sqrt(beta) * std::sqrt(1.0 + beta * p_mean * p_mean);
}

void validate(const HarmonicGUP& model) {
  require_positive(model.m, "m");
  require_positive(model.omega, "omega");
  require_positive(model.hbar, "hbar");
  require_positive(model.beta, "beta");
}

void validate(const DiracGUP& model) {
  require_positive(model.m, "m");
  require_positive(model.omega, "omega");
  require_positive(model.hbar, "hbar");
  require_positive(model.c, "c");
  require_positive(model.beta, "beta");
}

// --- harmonic -------------------------------------------------------------------

double harmonic_g(const HarmonicGUP& model) {
  validate(model);
  const double k = model.m * model.hbar * model.omega * model.beta;
  return 0.5 + std::sqrt(0.25 + 1.0 / (k * k));
}

double harmonic_energy(unsigned n, const HarmonicGUP& model) {
  validate(model);
  const double nn = static_cast<double>(n);
  const double hw = model.hbar * model.omega;
  const double half_k = 0.5 * model.m * hw * model.beta;
  return hw * (nn + 0.5) * (half_k + std::sqrt(1.0 + half_k * half_k)) +
         0.5 * model.m * hw * hw * model.beta * nn * nn;
}

double harmonic_energy_from_eigenvalue(double lambda, const HarmonicGUP& model) {
  const double g = harmonic_g(model);
  const double hw = model.hbar * model.omega;
  return 0.5 * model.m * hw * hw * (lambda + g * model.beta);
}

double harmonic_energy_from_su2(unsigned n, const HarmonicGUP& model) {
  return harmonic_energy_from_eigenvalue(energy(n, harmonic_g(model), model.beta), model);
}

// --- Dirac ----------------------------------------------------------------------

double dirac_g(const DiracGUP& model) {
  validate(model);
  const double g = 1.0 / (model.m * model.hbar * model.omega * model.beta);
  if (!(g <= kMaxDiracG)) {
    std::ostringstream os;
    os << "dirac_g: g = " << g << " exceeds " << kMaxDiracG;
    throw OverflowError(os.str());
  }
  return g;
}

double dirac_energy(unsigned n, const DiracGUP& model, Branch branch) {
  validate(model);
  const double nn = static_cast<double>(n);
  const double hw = model.hbar * model.omega;
  const double mc2 = model.m * model.c * model.c;
  const double root =
      std::sqrt(1.0 + hw * hw * model.beta / (model.c * model.c) * nn * nn + 2.0 * hw / mc2 * nn);
  return (branch == Branch::positive ? 1.0 : -1.0) * mc2 * root;
}

double DiracUpperProblem::reduced_eigenvalue(double energy) const noexcept {
  return scale * (energy * energy - rest_energy * rest_energy) + shift;
}

double DiracUpperProblem::h_eigenvalue(double energy) const noexcept {
  return reduced_eigenvalue(energy) - g * beta;
}

double DiracUpperProblem::energy_from_h_eigenvalue(double lambda, Branch branch) const {
  const double e2 = rest_energy * rest_energy + (lambda + g * beta - shift) / scale;
  if (e2 < 0.0) throw DomainError("energy_from_h_eigenvalue: negative E^2");
  return (branch == Branch::positive ? 1.0 : -1.0) * std::sqrt(e2);
}

double DiracUpperProblem::coefficient_residual() const noexcept {
  const long double gl = g;
  const long double bl = beta;
  const long double lhs = gl * (gl - 1.0L) * bl * bl;
  const long double rhs = potential_coefficient;
  const long double scale = std::max({std::abs(lhs), std::abs(rhs), gl * gl * bl * bl});
  return scale > 0.0L ? static_cast<double>((lhs - rhs) / scale) : 0.0;
}

DiracUpperProblem dirac_upper_problem(const DiracGUP& model) {
  DiracUpperProblem p;
  p.g = dirac_g(model);
  const double k = model.m * model.hbar * model.omega;
  p.beta = model.beta;
  p.scale = 1.0 / (model.c * model.c * k * k);
  p.shift = 1.0 / k;
  p.potential_coefficient = (1.0 - k * model.beta) / (k * k);
  p.rest_energy = model.m * model.c * model.c;
  return p;
}

SpinorProfile dirac_spinor(unsigned n, const DiracGUP& model) {
  const double g = dirac_g(model);
  const double k = model.m * model.hbar * model.omega;
  const double mc2 = model.m * model.c * model.c;
  const double e = dirac_energy(n, model, Branch::positive);

  AlgebraicFunction f1 = eigenfunction(n, g, model.beta);
  // Second row of the Dirac equation: c k A(g) f1 = (E + m c^2) Im f2.
  AlgebraicFunction lower = (model.c * k / (e + mc2)) * apply_A(g, f1);

  const double norm2 = inner_product(f1, f1) + inner_product(lower, lower);
  const double inv = 1.0 / std::sqrt(norm2);
  return SpinorProfile{inv * f1, inv * lower, e, true};
}

double dirac_lower_residual(unsigned n, const DiracGUP& model) {
  const double g = dirac_g(model);
  const SpinorProfile sp = dirac_spinor(n, model);
  if (sp.lower_imaginary.is_zero()) return 0.0;
  const double lambda = energy(n, g, model.beta);
  const AlgebraicFunction lhs = apply_Htilde(g, sp.lower_imaginary);
  const AlgebraicFunction rhs = lambda * sp.lower_imaginary;
  return max_abs_coeff_difference(lhs, rhs) / sp.lower_imaginary.max_abs_coeff();
}

double dirac_equation_residual(const SpinorProfile& spinor, const DiracGUP& model) {
  const double g = dirac_g(model);
  const double k = model.m * model.hbar * model.omega;
  const double mc2 = model.m * model.c * model.c;
  const double ck = model.c * k;

  // Row 1: c k Abar(g) Im f2 = (E - m c^2) f1.  Row 2: c k A(g) f1 = (E + m c^2) Im f2.
  const AlgebraicFunction row1_lhs = ck * apply_Abar(g, spinor.lower_imaginary);
  const AlgebraicFunction row1_rhs = (spinor.energy - mc2) * spinor.f1;
  const AlgebraicFunction row2_lhs = ck * apply_A(g, spinor.f1);
  const AlgebraicFunction row2_rhs = (spinor.energy + mc2) * spinor.lower_imaginary;

  const double scale = std::max({row1_lhs.max_abs_coeff(), row1_rhs.max_abs_coeff(), row2_lhs.max_abs_coeff(),
                                 row2_rhs.max_abs_coeff()});
  if (scale == 0.0) return 0.0;
  const double r1 = row1_lhs.is_zero() && row1_rhs.is_zero() ? 0.0 : max_abs_coeff_difference(row1_lhs, row1_rhs);
  const double r2 = row2_lhs.is_zero() && row2_rhs.is_zero() ? 0.0 : max_abs_coeff_difference(row2_lhs, row2_rhs);
  return std::max(r1, r2) / scale;
}

}  // namespace gupsu2
