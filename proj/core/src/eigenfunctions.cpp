#include "gupsu2/eigenfunctions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "gupsu2/error.hpp"
#include "gupsu2/operators.hpp"
#include "gupsu2/representation.hpp"
#include "gupsu2/special_functions.hpp"

namespace gupsu2 {
namespace {

std::vector<double> product(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  return out;
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream os;
    os << what << " must be positive and finite, got " << value;
    throw InvalidParameterError(os.str());
  }
}

}  // namespace

bool inner_product_converges(const AlgebraicFunction& f1, const AlgebraicFunction& f2) {
  if (f1.is_zero() || f2.is_zero()) return true;
  const double degree = static_cast<double>(f1.degree() + f2.degree());
  return f1.s() + f2.s() + 2.0 > degree + 1.0;
}

double inner_product(const AlgebraicFunction& f1, const AlgebraicFunction& f2) {
  require_same_beta(f1, f2);
  if (f1.is_zero() || f2.is_zero()) return 0.0;
  if (!inner_product_converges(f1, f2)) {
    std::ostringstream os;
    os << "inner product diverges: s1+s2+2 = " << f1.s() + f2.s() + 2.0
       << " <= deg(P1 P2)+1 = " << f1.degree() + f2.degree() + 1;
    throw DivergenceError(os.str());
  }
  const std::vector<double> q = product(f1.coeffs(), f2.coeffs());
  // The measure adds one power of (1+beta p^2)^{-1}.
  const double a = 0.5 * (f1.s() + f2.s()) + 1.0;
  double sum = 0.0;
  for (std::size_t k = 0; 2 * k < q.size(); ++k) {
    if (q[2 * k] != 0.0) sum += q[2 * k] * beta_moment(static_cast<unsigned>(k), a, f1.beta());
  }
  return sum;
}

double weighted_norm(const AlgebraicFunction& f) { return std::sqrt(inner_product(f, f)); }

double ground_constant(double G, double beta) {
  require_positive(G, "ground_constant: G");
  require_positive(beta, "ground_constant: beta");
  return 1.0 / std::sqrt(beta_moment(0, G + 1.0, beta));
}

double printed_ground_constant(double G, double beta) {
  require_positive(G, "printed_ground_constant: G");
  require_positive(beta, "printed_ground_constant: beta");
  return std::pow(beta / std::numbers::pi, 0.25) * std::sqrt(gamma_ratio(0.5 * (G + 2.0), 0.5 * (G + 1.0)));
}

AlgebraicFunction ground_profile(double G, double beta) {
  return AlgebraicFunction({ground_constant(G, beta)}, G, beta);
}

NormalizationAudit normalization_audit(double G, double beta) {
  NormalizationAudit a;
  a.G = G;
  a.beta = beta;
  a.implemented_constant = ground_constant(G, beta);
  a.printed_constant = printed_ground_constant(G, beta);
  a.implemented_norm = weighted_norm(AlgebraicFunction({a.implemented_constant}, G, beta));
  a.printed_norm = weighted_norm(AlgebraicFunction({a.printed_constant}, G, beta));
  return a;
}

AlgebraicFunction descended_state(unsigned n, double g, double beta) {
  require_positive(g, "eigenfunction: g");
  AlgebraicFunction f = ground_profile(g + static_cast<double>(n), beta);
  for (unsigned k = n; k-- > 0;) f = apply_Abar(g + static_cast<double>(k), f);
  return descent_coefficient_n(n, g, beta) * f;
}

AlgebraicFunction eigenfunction(unsigned n, double g, double beta) {
  AlgebraicFunction f = descended_state(n, g, beta);
  return (1.0 / weighted_norm(f)) * f;
}

AlgebraicFunction descended_representation_state(double j, double g, double beta) {
  if (!validate_label(j, g)) {
    std::ostringstream os;
    os << "representation_state: (j=" << j << ", g=" << g << ") is not a unitary su(2) label";
    throw DomainError(os.str());
  }
  const int steps = static_cast<int>(std::lround(j - g));
  // Highest weight |j,j> is the normalized ground profile of A(j).
  ModeState st = ModeState::single(j, ground_profile(j, beta));
  for (int k = 0; k < steps; ++k) st = apply_Jminus(st);
  const AlgebraicFunction* f = st.at(-steps);
  if (f == nullptr) return AlgebraicFunction::zero(j, beta);
  return descent_coefficient(j, g, beta) * *f;
}

AlgebraicFunction representation_state(double j, double g, double beta) {
  AlgebraicFunction f = descended_representation_state(j, g, beta);
  if (inner_product_converges(f, f)) return f;
  // H(g) - H(1-g) = (1-2g) beta, so the square-integrable eigenfunction of H(g)
  // with eigenvalue beta (j^2 - g^2) is level j-(1-g) of H(1-g).
  const double reflected = 1.0 - g;
  return eigenfunction(static_cast<unsigned>(std::lround(j - reflected)), reflected, beta);
}

double gegenbauer_variable(double p, double beta) noexcept {
  return std::sqrt(beta) * p / std::sqrt(1.0 + beta * p * p);
}

double gegenbauer_match(unsigned n, double g, double beta, std::span<const double> samples) {
  if (samples.empty()) throw InvalidParameterError("gegenbauer_match: no sample points");
  const AlgebraicFunction psi = eigenfunction(n, g, beta);
  const double scale = psi.max_abs_coeff();

  auto ratio = [&](double p) {
    const double w = 1.0 + beta * p * p;
    const double c = gegenbauer(n, g, gegenbauer_variable(p, beta));
    const double num = psi.polynomial_at(p);
    // Both sides carry (1+beta p^2)^{-g/2}; compare P(p) (1+beta p^2)^{-n/2} with C_n^g(xi).
    const double lhs = num * std::pow(w, -0.5 * static_cast<double>(n));
    if (std::abs(c) < 1e-13 || std::abs(num) < 1e-13 * scale) {
      std::ostringstream os;
      os << "gegenbauer_match: sample p=" << p << " is at a zero of the comparison";
      throw DomainError(os.str());
    }
    return lhs / c;
  };

  const double r0 = ratio(samples.front());
  double defect = 0.0;
  for (double p : samples) defect = std::max(defect, std::abs(ratio(p) / r0 - 1.0));
  return defect;
}

double ladder_matrix_element(Realization realization, Ladder ladder, double j, double g, double beta) {
  const double target = ladder == Ladder::raising ? g + 1.0 : g - 1.0;
  const int shift = ladder == Ladder::raising ? +1 : -1;
  if (!validate_label(j, g) || !validate_label(j, target)) {
    std::ostringstream os;
    os << "ladder_matrix_element: labels (" << j << ", " << g << ") -> (" << j << ", " << target
       << ") are not both valid";
    throw DomainError(os.str());
  }
  const AlgebraicFunction ket = representation_state(j, g, beta);
  const AlgebraicFunction bra = representation_state(j, target, beta);

  AlgebraicFunction image = AlgebraicFunction::zero(ket.s(), beta);
  if (realization == Realization::theta_modes) {
    const ModeState st = ModeState::single(g, ket);
    const ModeState out = ladder == Ladder::raising ? apply_Jplus(st) : apply_Jminus(st);
    if (const auto* f = out.at(shift)) image = *f;
  } else {
    const SequenceState st = SequenceState::single(g, ket);
    const SequenceState out = ladder == Ladder::raising ? apply_Jplus(st) : apply_Jminus(st);
    if (const auto* f = out.at(shift)) image = *f;
  }
  return inner_product(bra, image);
}

}  // namespace gupsu2
