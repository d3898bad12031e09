#pragma once

#include <span>

#include "gupsu2/algebraic_function.hpp"

namespace gupsu2 {

/// Exact weighted inner product  int dp / (1 + beta p^2) f1(p) f2(p),
/// summed term by term from beta_moment. Throws BetaMismatchError when the
/// deformation parameters differ and DivergenceError unless
/// s1 + s2 + 2 > deg(P1 P2) + 1.
[[nodiscard]] double inner_product(const AlgebraicFunction& f1, const AlgebraicFunction& f2);

/// Weighted norm sqrt(<f, f>).
[[nodiscard]] double weighted_norm(const AlgebraicFunction& f);

/// True when <f1, f2> converges absolutely.
[[nodiscard]] bool inner_product_converges(const AlgebraicFunction& f1, const AlgebraicFunction& f2);

/// Unit-norm solution of A(G) psi = 0: N (1 + beta p^2)^{-G/2}, G > 0.
[[nodiscard]] AlgebraicFunction ground_profile(double G, double beta);

/// Unit-norm constant of the ground profile: N^2 = sqrt(beta/pi) Gamma(G+1) / Gamma(G+1/2).
[[nodiscard]] double ground_constant(double G, double beta);

/// The constant as printed in the source derivation:
/// (beta/pi)^{1/4} sqrt(Gamma((G+2)/2) / Gamma((G+1)/2)). Kept for the audit only.
[[nodiscard]] double printed_ground_constant(double G, double beta);

struct NormalizationAudit {
  double G = 0.0;
  double beta = 0.0;
  double implemented_constant = 0.0;
  double printed_constant = 0.0;
  double implemented_norm = 0.0;  ///< weighted norm of the implemented profile
  double printed_norm = 0.0;      ///< weighted norm the printed constant would give
};

[[nodiscard]] NormalizationAudit normalization_audit(double G, double beta);

/// descent_coefficient_n(n,g,beta) * Abar(g) Abar(g+1) ... Abar(g+n-1) ground_profile(g+n),
/// with the rightmost operator applied first. Unit norm up to rounding.
[[nodiscard]] AlgebraicFunction descended_state(unsigned n, double g, double beta);

/// Normalized n-th eigenfunction of H(g), g > 0: descended_state rescaled to
/// exactly unit weighted norm. Exponent s = g + n, degree n, parity (-1)^n.
[[nodiscard]] AlgebraicFunction eigenfunction(unsigned n, double g, double beta);

/// descent_coefficient(j,g,beta) (J_-)^{j-g} applied to the highest-weight
/// profile, taken literally. For integer j and g <= -1 the result is not square
/// integrable under the weighted measure. Throws DomainError on an invalid label.
[[nodiscard]] AlgebraicFunction descended_representation_state(double j, double g, double beta);

/// Normalized wavefunction of |j, g>: the descended state when it is square
/// integrable, otherwise the square-integrable eigenfunction of H(g) with
/// eigenvalue beta (j^2 - g^2), i.e. eigenfunction(j - (1-g), 1-g, beta).
/// Throws DomainError on an invalid label.
[[nodiscard]] AlgebraicFunction representation_state(double j, double g, double beta);

/// xi(p) = sqrt(beta) p / sqrt(1 + beta p^2), mapping the real line onto (-1, 1).
[[nodiscard]] double gegenbauer_variable(double p, double beta) noexcept;

/// Proportionality defect between eigenfunction(n,g,beta) and
/// (1 + beta p^2)^{-g/2} C_n^g(xi(p)) over the sample points:
/// max |r(p)/r(p_0) - 1|. Throws DomainError if a sample hits a zero of either
/// factor and InvalidParameterError for an empty sample set.
[[nodiscard]] double gegenbauer_match(unsigned n, double g, double beta, std::span<const double> samples);

enum class Realization { theta_modes, number_sequence };
enum class Ladder { raising, lowering };

/// <j, g +- 1| J_+- |j, g> evaluated with the given realization of the generators
/// on representation_state wavefunctions. Throws DomainError if either label is invalid.
[[nodiscard]] double ladder_matrix_element(Realization realization, Ladder ladder, double j, double g, double beta);

}  // namespace gupsu2
