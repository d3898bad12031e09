#pragma once

#include <cstddef>
#include <vector>

#include "gupsu2/representation.hpp"

namespace gupsu2 {

/// Symmetric tridiagonal matrix, optionally tagged with the grid it discretizes.
struct TridiagonalOperator {
  std::vector<double> diag;
  std::vector<double> offdiag;  ///< size diag.size() - 1
  double h = 0.0;               ///< grid step in u; 0 for a bare matrix
  double g = 0.0;
  double beta = 0.0;
  /// Set when 0.5 <= g < 1: the boundary potential is attractive and the
  /// discretization converges slowly, so oracle tolerances do not apply.
  bool slow_convergence_warning = false;

  [[nodiscard]] std::size_t size() const noexcept { return diag.size(); }
};

/// Position of interior node i (1-based) on u in (-L/2, L/2), L = pi / sqrt(beta).
[[nodiscard]] double sturm_node(std::size_t i, std::size_t n, double beta) noexcept;

/// Potential of the transformed problem, beta [g(g-1) tan^2(sqrt(beta) u) - g].
[[nodiscard]] double poschl_teller_potential(double u, double g, double beta) noexcept;

/// Central-difference discretization of -d^2/du^2 + V(u) on n interior nodes
/// with Dirichlet ends; u = arctan(sqrt(beta) p) / sqrt(beta) turns H(g) into
/// this weight-free problem. Throws InvalidParameterError for g < 1/2, n < 16
/// or beta <= 0.
[[nodiscard]] TridiagonalOperator to_sturm(double g, double beta, std::size_t n);

/// Number of eigenvalues strictly below x (Sturm sequence count).
[[nodiscard]] std::size_t sturm_count(const TridiagonalOperator& t, double x) noexcept;

/// The k smallest eigenvalues in ascending order, by bisection on Sturm counts.
/// Throws InvalidParameterError unless 1 <= k <= size() and the off-diagonal
/// has size() - 1 entries.
[[nodiscard]] std::vector<double> lowest_eigenvalues(const TridiagonalOperator& t, std::size_t k);

/// Eigenvalues of the discretized H(g), tagged as oracle output.
[[nodiscard]] SpectralResult oracle_spectrum(double g, double beta, std::size_t n, std::size_t k);

/// Exact eigenvalues of the n-point Dirichlet discrete Laplacian on length
/// pi / sqrt(beta) shifted by -beta: the g = 1 discretization in closed form.
[[nodiscard]] double discrete_box_eigenvalue(std::size_t level, std::size_t n, double beta) noexcept;

}  // namespace gupsu2
