#pragma once

namespace gupsu2 {

/// ln Gamma(x) for x > 0 via a Lanczos approximation (g = 7, 9 terms).
/// Relative error of Gamma below ~1e-15 on (0, 200]; throws DomainError for x <= 0.
/// Reentrant, unlike std::lgamma which may write the global signgam.
[[nodiscard]] double log_gamma(double x);

/// Gamma(a) / Gamma(b) for positive a, b, via log_gamma.
[[nodiscard]] double gamma_ratio(double a, double b);

/// Gegenbauer polynomial C_n^a(x) by the three-term recurrence
///   C_0 = 1, C_1 = 2 a x, n C_n = 2 x (n + a - 1) C_{n-1} - (n + 2a - 2) C_{n-2}.
[[nodiscard]] double gegenbauer(unsigned n, double a, double x);

/// Even moment of the deformed measure:
///   M(k, a, beta) = int p^{2k} (1 + beta p^2)^{-a} dp
///                 = beta^{-k-1/2} Gamma(k+1/2) Gamma(a-k-1/2) / Gamma(a),
/// defined for a > k + 1/2. Throws DivergenceError otherwise.
[[nodiscard]] double beta_moment(unsigned k, double a, double beta);

}  // namespace gupsu2
