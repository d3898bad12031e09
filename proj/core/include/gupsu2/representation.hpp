#pragma once

#include <string_view>
#include <vector>

namespace gupsu2 {

/// Label (j, g) of a simultaneous eigenstate of the Casimir operator and J_z.
struct RepLabel {
  double j = 0.5;
  double g = 0.5;
};

/// True iff 2j is a positive integer, j - g is an integer and 1 - j <= g <= j.
[[nodiscard]] bool validate_label(double j, double g) noexcept;
[[nodiscard]] inline bool validate_label(const RepLabel& l) noexcept { return validate_label(l.j, l.g); }

/// ||J_+ |j,g>|| = sqrt(beta (j^2 - g^2)). Throws DomainError on an invalid label.
[[nodiscard]] double ladder_norm_up(double j, double g, double beta);
/// ||J_- |j,g>|| = sqrt(beta (j^2 - (g-1)^2)). Throws DomainError on an invalid label.
[[nodiscard]] double ladder_norm_down(double j, double g, double beta);

/// Casimir eigenvalue j^2 - 1/4 in the normalization where C = (1/beta) H(J_z) + J_z^2 - 1/4.
[[nodiscard]] double casimir_eigenvalue(double j);

/// Energy of the n-th level of H(g): (n^2 + 2 n g) beta. Accepts any real g > 0.
[[nodiscard]] double energy(unsigned n, double g, double beta);

/// Normalization of (J_-)^{j-g} |j,j>:
///   sqrt( Gamma(j+g) / (beta^{j-g} Gamma(2j) Gamma(j-g+1)) ),
/// evaluated through log-gamma differences. Throws DomainError on an invalid label.
[[nodiscard]] double descent_coefficient(double j, double g, double beta);

/// descent_coefficient(g+n, g, beta) for any real g > 0 (no quantization check).
[[nodiscard]] double descent_coefficient_n(unsigned n, double g, double beta);

enum class SpectralSource { closed_form, oracle };

[[nodiscard]] std::string_view to_string(SpectralSource s) noexcept;

struct SpectralLine {
  unsigned n = 0;
  double energy = 0.0;
};

struct SpectralResult {
  std::vector<SpectralLine> lines;
  SpectralSource source = SpectralSource::closed_form;
  double g = 0.0;
  double beta = 0.0;
};

/// Levels n = 0..n_max of H(g) from the closed form.
[[nodiscard]] SpectralResult closed_form_spectrum(double g, double beta, unsigned n_max);

}  // namespace gupsu2
