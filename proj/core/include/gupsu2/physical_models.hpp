#pragma once

#include <cstddef>
#include <variant>

#include "gupsu2/algebraic_function.hpp"
#include "gupsu2/representation.hpp"

namespace gupsu2 {

/// Right-hand side of the deformed uncertainty relation,
///   Delta x Delta p >= (hbar/2) [1 + beta (Delta p)^2 + beta <p>^2].
/// Throws InvalidParameterError unless dp > 0.
[[nodiscard]] double uncertainty_bound(double dp, double p_mean, double beta, double hbar);

/// Smallest admissible Delta x, min over Delta p of uncertainty_bound / Delta p:
/// hbar sqrt(beta) sqrt(1 + beta <p>^2), attained at Delta p = sqrt((1 + beta <p>^2) / beta).
[[nodiscard]] double minimal_position_uncertainty(double p_mean, double beta, double hbar);
[[nodiscard]] double optimal_momentum_spread(double p_mean, double beta);

/// Harmonic oscillator H = p^2/2m + m omega^2 x^2 / 2 with [x,p] = i hbar (1 + beta p^2).
struct HarmonicGUP {
  double m = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double beta = 1.0;
};

/// Dirac oscillator H = c sigma_y (p - i sigma_z m omega x) + sigma_z m c^2.
struct DiracGUP {
  double m = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double c = 1.0;
  double beta = 1.0;
};

using PhysicalModel = std::variant<HarmonicGUP, DiracGUP>;

/// Throws InvalidParameterError unless every constant is finite and positive.
void validate(const HarmonicGUP& model);
void validate(const DiracGUP& model);

// --- harmonic oscillator ------------------------------------------------------

/// g = 1/2 + sqrt(1/4 + 1/(m hbar omega beta)^2), the positive root of
/// g (g - 1) beta^2 = 1 / (m hbar omega)^2.
[[nodiscard]] double harmonic_g(const HarmonicGUP& model);

/// hbar omega (n + 1/2) [k/2 + sqrt(1 + (k/2)^2)] + (1/2) m hbar^2 omega^2 beta n^2, k = m hbar omega beta.
[[nodiscard]] double harmonic_energy(unsigned n, const HarmonicGUP& model);

/// The same level through H(g): (m hbar^2 omega^2 / 2) [(n^2 + 2 n g) beta + g beta].
[[nodiscard]] double harmonic_energy_from_su2(unsigned n, const HarmonicGUP& model);

/// Physical level from an eigenvalue lambda of H(g): (m hbar^2 omega^2 / 2)(lambda + g beta).
[[nodiscard]] double harmonic_energy_from_eigenvalue(double lambda, const HarmonicGUP& model);

// --- Dirac oscillator ---------------------------------------------------------

enum class Branch { positive, negative };

/// g = 1 / (m hbar omega beta). Throws OverflowError above 1e15.
[[nodiscard]] double dirac_g(const DiracGUP& model);

/// +- m c^2 sqrt(1 + (hbar^2 omega^2 beta / c^2) n^2 + (2 hbar omega / (m c^2)) n).
[[nodiscard]] double dirac_energy(unsigned n, const DiracGUP& model, Branch branch);

/// Identification of the squared upper-component equation with H(g).
///
/// Squaring the Dirac equation gives
///   [-D^2 + potential_coefficient p^2] f1 = mu f1,  D = (1 + beta p^2) d/dp,
///   mu = scale (E^2 - m^2 c^4) + shift,
/// and -D^2 + potential_coefficient p^2 = H(g) + g beta, so H(g) f1 = (mu - g beta) f1.
struct DiracUpperProblem {
  double g = 0.0;
  double scale = 0.0;                  ///< 1 / (c^2 (m hbar omega)^2)
  double shift = 0.0;                  ///< 1 / (m hbar omega)
  double potential_coefficient = 0.0;  ///< (1 - m hbar omega beta) / (m hbar omega)^2
  double beta = 0.0;
  double rest_energy = 0.0;            ///< m c^2

  /// mu = scale (E^2 - m^2 c^4) + shift.
  [[nodiscard]] double reduced_eigenvalue(double energy) const noexcept;
  /// Eigenvalue of H(g) implied by an energy: mu - g beta.
  [[nodiscard]] double h_eigenvalue(double energy) const noexcept;
  /// Energy of the requested branch implied by an eigenvalue of H(g).
  /// Throws DomainError if the implied E^2 is negative.
  [[nodiscard]] double energy_from_h_eigenvalue(double lambda, Branch branch) const;
  /// (g (g - 1) beta^2 - potential_coefficient) in long double,
  /// relative to the largest of |lhs|, |rhs| and g^2 beta^2 = 1/(m hbar omega)^2.
  /// Zero when the identification holds.
  [[nodiscard]] double coefficient_residual() const noexcept;
};

[[nodiscard]] DiracUpperProblem dirac_upper_problem(const DiracGUP& model);

/// Two-component momentum wavefunction (f1, f2) with f2 = i * lower_imaginary.
///
/// The lower component of a positive-energy eigenspinor is purely imaginary
/// when f1 is real, so only its imaginary part is stored.
struct SpinorProfile {
  AlgebraicFunction f1;
  AlgebraicFunction lower_imaginary;
  double energy = 0.0;
  bool jointly_normalized = false;
};

/// Positive-branch eigenspinor of level n: f1 from the H(g) eigenfunction,
/// f2 = i c m hbar omega A(g) f1 / (E + m c^2), rescaled so that
/// int dp/(1+beta p^2) (|f1|^2 + |f2|^2) = 1.
[[nodiscard]] SpinorProfile dirac_spinor(unsigned n, const DiracGUP& model);

/// Relative residual of Htilde(g) Im f2 - lambda_n Im f2: the lower component
/// solves the partner Hamiltonian at the same eigenvalue.
[[nodiscard]] double dirac_lower_residual(unsigned n, const DiracGUP& model);

/// Relative residual of the two first-order Dirac equations applied to the spinor.
[[nodiscard]] double dirac_equation_residual(const SpinorProfile& spinor, const DiracGUP& model);

}  // namespace gupsu2
