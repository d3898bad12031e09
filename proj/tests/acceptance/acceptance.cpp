// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gupsu2/eigenfunctions.hpp"
#include "gupsu2/operators.hpp"
#include "gupsu2/physical_models.hpp"
#include "gupsu2/random_family.hpp"
#include "gupsu2/representation.hpp"
#include "gupsu2/sturm_oracle.hpp"

using namespace gupsu2;

namespace {

constexpr std::uint64_t kSeed = 0x5eed1234;

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> details;
  bool passed = true;

  void require(bool ok, const std::string& what, double measured, double tolerance) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %.3g <= %.3g", what.c_str(), measured, tolerance);
    details.emplace_back(buf);
    passed = passed && ok;
  }
  void measure(const std::string& what, double measured, double tolerance) {
    require(!std::isnan(measured) && measured <= tolerance, what, measured, tolerance);
  }
};

class Worst {
 public:
  void update(double v) { v_ = std::isnan(v) || std::isnan(v_) ? NAN : std::max(v_, v); }
  [[nodiscard]] double value() const { return v_; }

 private:
  double v_ = 0.0;
};

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0.0 ? std::abs(a - b) / s : 0.0;
}

// f, f', f'' of P(p) (1 + beta p^2)^(-s/2) at p.
struct Jet {
  double f, d1, d2;
};

Jet jet(const AlgebraicFunction& fn, double p) {
  double P = 0.0, P1 = 0.0, P2 = 0.0;
  const auto& c = fn.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    P += c[k] * std::pow(p, static_cast<double>(k));
    if (k >= 1) P1 += k * c[k] * std::pow(p, k - 1.0);
    if (k >= 2) P2 += k * (k - 1.0) * c[k] * std::pow(p, k - 2.0);
  }
  const double b = fn.beta();
  const double s = fn.s();
  const double u = 1.0 + b * p * p;
  const double w = std::pow(u, -0.5 * s);
  const double w1 = -s * b * p * std::pow(u, -0.5 * s - 1.0);
  const double w2 = -s * b * std::pow(u, -0.5 * s - 1.0) + s * (s + 2.0) * b * b * p * p * std::pow(u, -0.5 * s - 2.0);
  return {P * w, P1 * w + P * w1, P2 * w + 2.0 * P1 * w1 + P * w2};
}

// Pointwise (sign = +1) A(g) f or (sign = -1) Abar(g) f.
double ladder_at(double g, const AlgebraicFunction& f, double p, double sign) {
  const Jet j = jet(f, p);
  return sign * (1.0 + f.beta() * p * p) * j.d1 + g * f.beta() * p * j.f;
}

// Pointwise H(g) f = Abar(g) A(g) f.
double h_at(double g, const AlgebraicFunction& f, double p) {
  const double b = f.beta();
  const double u = 1.0 + b * p * p;
  const Jet j = jet(f, p);
  const double a = u * j.d1 + g * b * p * j.f;
  const double a1 = 2.0 * b * p * j.d1 + u * j.d2 + g * b * j.f + g * b * p * j.d1;
  return -u * a1 + g * b * p * a;
}

template <class F>
double integrate_weighted(F f, double beta) {
  struct Ctx {
    F* f;
    double beta;
  } ctx{&f, beta};
  gsl_function fn;
  fn.function = [](double p, void* data) {
    auto* c = static_cast<Ctx*>(data);
    return (*c->f)(p) / (1.0 + c->beta * p * p);
  };
  fn.params = &ctx;
  gsl_integration_workspace* ws = gsl_integration_workspace_alloc(4000);
  double result = 0.0, err = 0.0;
  gsl_integration_qagi(&fn, 1e-15, 1e-13, 4000, ws, &result, &err);
  gsl_integration_workspace_free(ws);
  return result;
}

double gegenbauer_sum(unsigned n, double a, double x) {
  double sum = 0.0;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const double t = std::exp(std::lgamma(n - k + a) - std::lgamma(a) - std::lgamma(k + 1.0) -
                              std::lgamma(n - 2.0 * k + 1.0)) *
                     std::pow(2.0 * x, static_cast<double>(n - 2 * k));
    sum += (k % 2 == 0 ? 1.0 : -1.0) * t;
  }
  return sum;
}

std::vector<double> valid_weights(double j) {
  std::vector<double> out;
  for (double g = j; g >= 1.0 - j - 1e-9; g -= 1.0) out.push_back(g);
  return out;
}

// 1. Shape invariance.
Criterion shape_invariance() {
  Criterion c{1, "shape invariance Htilde(g) = H(g+1) + (2g+1) beta"};
  RandomFamily rf(kSeed);
  Worst lib, pointwise;
  for (int i = 0; i < 100; ++i) {
    const AlgebraicFunction f = rf.function();
    const double g = rf.g();
    lib.update(shape_invariance_residual(g, f));
    const AlgebraicFunction a = apply_A(g, f);
    const AlgebraicFunction abar = apply_Abar(g, f);
    for (double p : {-1.7, -0.4, 0.0, 0.3, 1.1, 2.6}) {
      const double ra = ladder_at(g, f, p, 1.0);
      const double rb = ladder_at(g, f, p, -1.0);
      const double scale = std::max({1.0, std::abs(ra), std::abs(rb), std::abs(jet(f, p).f)});
      pointwise.update(std::abs(a(p) - ra) / scale);
      pointwise.update(std::abs(abar(p) - rb) / scale);
    }
  }
  c.measure("coefficient residual (100 random inputs)", lib.value(), 1e-12);
  c.measure("A, Abar vs pointwise differentiation", pointwise.value(), 1e-11);
  return c;
}

// 2. Commutators, number-variable products, realization agreement.
Criterion commutators() {
  Criterion c{2, "su(2) commutators, number-variable products, realization agreement"};
  RandomFamily rf(kSeed + 1);
  Worst comm, seq, agree;
  for (int i = 0; i < 100; ++i) {
    comm.update(commutator_residuals(rf.mode_state(rf.g(), {0})).max());
    seq.update(sequence_residuals(rf.sequence_state(0.0, {1, 2, 3})).max());
  }
  for (double beta : {0.5, 1.0, 2.0})
    for (int tj = 1; tj <= 8; ++tj) {
      const double j = 0.5 * tj;
      for (double g : valid_weights(j))
        for (Ladder l : {Ladder::raising, Ladder::lowering}) {
          if (!validate_label(j, l == Ladder::raising ? g + 1.0 : g - 1.0)) continue;
          const double a = ladder_matrix_element(Realization::number_sequence, l, j, g, beta);
          const double b = ladder_matrix_element(Realization::theta_modes, l, j, g, beta);
          agree.update(std::abs(a - b));
          // |<j,g+-1|J+-|j,g>| from the representation norms
          const double expected = l == Ladder::raising ? std::sqrt(beta * (j * j - g * g))
                                                       : std::sqrt(beta * (j * j - (g - 1.0) * (g - 1.0)));
          if (std::abs(b) > 1e-300) agree.update(std::abs(std::abs(b) - expected));
        }
    }
  c.measure("theta-mode commutators (100 random states)", comm.value(), 1e-12);
  c.measure("number-variable products and commutator (100 random states)", seq.value(), 1e-12);
  c.measure("matrix elements, j <= 4", agree.value(), 1e-12);
  return c;
}

// 3. Ladder norms by quadrature.
Criterion ladder_norms() {
  Criterion c{3, "ladder norms ||A(g) psi_{j,g}|| = sqrt(beta (j^2 - g^2)), j <= 4"};
  Worst exact, quad;
  int labels = 0;
  for (double beta : {0.5, 1.0, 2.0})
    for (int tj = 1; tj <= 8; ++tj) {
      const double j = 0.5 * tj;
      for (double g : valid_weights(j)) {
        ++labels;
        const AlgebraicFunction psi = representation_state(j, g, beta);
        const double expected = std::sqrt(beta * (j * j - g * g));
        const AlgebraicFunction up = apply_A(g, psi);
        exact.update(std::abs((up.is_zero() ? 0.0 : weighted_norm(up)) - expected));
        const double n2 = integrate_weighted([&](double p) { return up(p) * up(p); }, beta);
        quad.update(std::abs(std::sqrt(std::max(0.0, n2)) - expected));
        const double self = integrate_weighted([&](double p) { return psi(p) * psi(p); }, beta);
        quad.update(std::abs(self - 1.0));
      }
    }
  c.measure("exact inner product (" + std::to_string(labels) + " labels)", exact.value(), 1e-10);
  c.measure("adaptive quadrature", quad.value(), 1e-10);
  return c;
}

// 4. Spectrum: oracle vs closed form, dense cross-check, box formula.
Criterion spectrum() {
  Criterion c{4, "spectrum: Sturm oracle vs closed form, N = 4096"};
  Worst agreement, box, dense;
  for (double g : {1.0, 1.5, 2.0, 3.0})
    for (double beta : {0.5, 1.0, 2.0}) {
      const SpectralResult r = oracle_spectrum(g, beta, 4096, 5);
      for (const SpectralLine& l : r.lines) {
        const double gn = g + l.n;
        const double exact = beta * (gn * gn - g * g);
        agreement.update(std::abs(l.energy - exact) / ((l.n + 1.0) * (l.n + 1.0) * beta));
      }
    }
  for (double beta : {0.5, 1.0, 2.0}) {
    const TridiagonalOperator t = to_sturm(1.0, beta, 4096);
    const double h = std::numbers::pi / std::sqrt(beta) / 4097.0;
    const double norm = 4.0 / (h * h) + beta;
    const auto values = lowest_eigenvalues(t, 5);
    for (std::size_t k = 0; k < values.size(); ++k) {
      const double s = std::sin((k + 1.0) * h * std::sqrt(beta) / 2.0);
      box.update(std::abs(values[k] - (4.0 / (h * h) * s * s - beta)) / norm);
    }
  }
  for (double g : {1.5, 3.0}) {
    const TridiagonalOperator t = to_sturm(g, 1.0, 400);
    const auto n = static_cast<Eigen::Index>(t.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      m(i, i) = t.diag[static_cast<std::size_t>(i)];
      if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = t.offdiag[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly).eigenvalues();
    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    const auto values = lowest_eigenvalues(t, 5);
    for (std::size_t k = 0; k < values.size(); ++k) dense.update(std::abs(values[k] - ev(static_cast<Eigen::Index>(k))) / norm);
  }
  c.measure("max |E_oracle - E_n| / ((n+1)^2 beta), n <= 4", agreement.value(), 5e-3);
  c.measure("g = 1 vs discrete box formula, relative to ||T||", box.value(), 1e-10);
  c.measure("bisection vs dense eigensolver (N = 400), relative to ||T||", dense.value(), 1e-12);
  return c;
}

// 5. Eigenfunctions.
Criterion eigenfunctions() {
  Criterion c{5, "eigenfunctions: Gram matrix, H psi = E psi, Gegenbauer form"};
  Worst gram, gram_quad, coeff, pointwise, gegen;
  for (double g : {0.5, 1.0, 1.5, 2.3})
    for (double beta : {0.5, 1.0}) {
      std::vector<AlgebraicFunction> psi;
      for (unsigned n = 0; n <= 6; ++n) psi.push_back(eigenfunction(n, g, beta));
      for (unsigned m = 0; m <= 6; ++m)
        for (unsigned n = m; n <= 6; ++n) {
          gram.update(std::abs(inner_product(psi[m], psi[n]) - (m == n)));
          if (beta == 1.0 && g >= 1.0) {
            gram_quad.update(std::abs(
                integrate_weighted([&](double p) { return psi[m](p) * psi[n](p); }, beta) - (m == n)));
          }
        }
      for (unsigned n = 0; n <= 6; ++n) {
        const double gn = g + n;
        const double e = beta * (gn * gn - g * g);
        coeff.update(max_abs_coeff_difference(apply_H(g, psi[n]), e * psi[n]) / psi[n].max_abs_coeff());
        double peak = 0.0;
        for (double p = -4.0; p <= 4.0; p += 0.37) peak = std::max(peak, std::abs(psi[n](p)));
        for (double p = -4.0; p <= 4.0; p += 0.37) pointwise.update(std::abs(h_at(g, psi[n], p) - e * psi[n](p)) / (peak * std::max(1.0, e)));

        // psi_n is proportional to (1 + beta p^2)^(-g/2) C_n^g(xi), xi = sqrt(beta) p / sqrt(1 + beta p^2).
        double ratio0 = NAN;
        for (int i = 0; i < 50; ++i) {
          const double p = -5.0 + 10.0 * (i + 0.5) / 50.0;
          const double u = 1.0 + beta * p * p;
          const double xi = std::sqrt(beta) * p / std::sqrt(u);
          const double ref = std::pow(u, -0.5 * g) * gegenbauer_sum(n, g, xi);
          if (std::abs(ref) < 1e-3 * std::pow(u, -0.5 * g)) continue;
          const double ratio = psi[n](p) / ref;
          if (std::isnan(ratio0)) ratio0 = ratio;
          gegen.update(std::abs(ratio / ratio0 - 1.0));
        }
      }
    }
  c.measure("Gram matrix, n <= 6, exact inner product", gram.value(), 1e-10);
  c.measure("Gram matrix, quadrature spot check", gram_quad.value(), 1e-10);
  c.measure("H psi_n = E_n psi_n, coefficient level", coeff.value(), 1e-10);
  c.measure("H psi_n = E_n psi_n, pointwise", pointwise.value(), 1e-10);
  c.measure("Gegenbauer proportionality defect, n <= 6", gegen.value(), 1e-9);
  return c;
}

// 6. Harmonic oscillator.
Criterion harmonic() {
  Criterion c{6, "harmonic oscillator: closed form vs su(2) form, beta -> 0 limit"};
  std::mt19937_64 rng(kSeed + 6);
  std::uniform_real_distribution<double> lu(std::log(0.1), std::log(10.0));
  Worst forms, reference;
  for (int i = 0; i < 100; ++i) {
    const HarmonicGUP m{std::exp(lu(rng)), std::exp(lu(rng)), std::exp(lu(rng)), std::exp(lu(rng))};
    const double k = m.m * m.hbar * m.omega * m.beta;
    const double g = 0.5 + std::sqrt(0.25 + 1.0 / (k * k));
    for (unsigned n = 0; n <= 10; ++n) {
      const double closed = m.hbar * m.omega * (n + 0.5) * (0.5 * k + std::sqrt(1.0 + 0.25 * k * k)) +
                            0.5 * m.m * m.hbar * m.hbar * m.omega * m.omega * m.beta * n * n;
      const double su2 = 0.5 * m.m * m.hbar * m.hbar * m.omega * m.omega * ((n * n + 2.0 * n * g) * m.beta + g * m.beta);
      forms.update(rel(harmonic_energy(n, m), harmonic_energy_from_su2(n, m)));
      reference.update(rel(harmonic_energy(n, m), closed));
      reference.update(rel(harmonic_energy_from_su2(n, m), su2));
    }
  }
  Worst limit;
  for (unsigned n = 0; n <= 10; ++n) limit.update(rel(harmonic_energy(n, {1.0, 1.0, 1.0, 1e-8}), n + 0.5));
  c.measure("library forms agree (100 draws, n <= 10)", forms.value(), 1e-12);
  c.measure("library vs independent evaluation", reference.value(), 1e-12);
  c.measure("beta = 1e-8 relative deviation from hbar w (n + 1/2)", limit.value(), 1e-6);
  return c;
}

// 7. Dirac oscillator.
Criterion dirac() {
  Criterion c{7, "Dirac oscillator: coefficient match, inversion identity, oracle at g = 2"};
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_real_distribution<double> lu(std::log(0.1), std::log(10.0));
  Worst coefficient, inversion;
  for (int i = 0; i < 100; ++i) {
    const DiracGUP m{std::exp(lu(rng)), std::exp(lu(rng)), std::exp(lu(rng)), std::exp(lu(rng)), std::exp(lu(rng))};
    const long double k = static_cast<long double>(m.m) * m.hbar * m.omega;
    const long double g = dirac_g(m);
    const long double lhs = g * (g - 1.0L) * m.beta * m.beta;
    const long double rhs = (1.0L - k * m.beta) / (k * k);
    coefficient.update(static_cast<double>(std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0L / (k * k)})));
    for (unsigned n = 0; n <= 10; ++n) {
      const double lambda = (n * n + 2.0 * n * static_cast<double>(g)) * m.beta;
      for (Branch b : {Branch::positive, Branch::negative}) {
        const double e = dirac_energy(n, m, b);
        const double kd = static_cast<double>(k);
        const double mu = ((e * e - m.m * m.m * std::pow(m.c, 4)) / (m.c * m.c) + kd) / (kd * kd);
        inversion.update(rel(mu, lambda + static_cast<double>(g) * m.beta));
      }
    }
  }
  const DiracGUP half{1.0, 1.0, 1.0, 1.0, 0.5};
  const double g = dirac_g(half);
  Worst oracle;
  const auto values = lowest_eigenvalues(to_sturm(g, half.beta, 4096), 4);
  for (std::size_t n = 0; n < values.size(); ++n) {
    // E^2 = m^2 c^4 + c^2 (k^2 (lambda + g beta) - k), k = m hbar omega = 1
    const double e = std::sqrt(1.0 + (values[n] + g * half.beta) - 1.0);
    oracle.update(rel(e, dirac_energy(static_cast<unsigned>(n), half, Branch::positive)));
  }
  c.require(g == 2.0, "g at m hbar w beta = 1/2 equals 2; |g - 2| =", std::abs(g - 2.0), 0.0);
  c.measure("coefficient-match residual (100 draws)", coefficient.value(), 1e-14);
  c.measure("inversion identity, both branches, n <= 10", inversion.value(), 1e-12);
  c.measure("oracle pipeline, positive branch, n <= 3", oracle.value(), 5e-3);
  return c;
}

// 8. Normalization audit.
Criterion normalization() {
  Criterion c{8, "ground-state normalization and audit of the printed constant"};
  Worst unit, quad;
  std::vector<std::string> report;
  for (double G : {0.5, 1.0, 1.7, 6.0})
    for (double beta : {0.25, 1.0, 4.0}) {
      const AlgebraicFunction f = ground_profile(G, beta);
      unit.update(std::abs(inner_product(f, f) - 1.0));
      // N^2 sqrt(pi/beta) Gamma(G+1/2)/Gamma(G+1) = 1
      const double n = f.coeffs()[0];
      quad.update(std::abs(n * n * std::sqrt(std::numbers::pi / beta) *
                               std::exp(std::lgamma(G + 0.5) - std::lgamma(G + 1.0)) -
                           1.0));
      const NormalizationAudit a = normalization_audit(G, beta);
      char line[160];
      std::snprintf(line, sizeof line, "G=%-4g beta=%-5g implemented %.10f printed %.10f norm(printed) %.6f", G,
                    beta, a.implemented_constant, a.printed_constant, a.printed_norm);
      report.emplace_back(line);
    }
  c.measure("unit norm by exact inner product", unit.value(), 1e-12);
  c.measure("unit norm by Gamma-function integral", quad.value(), 1e-12);
  c.require(report.size() == 12, "audit rows missing:", 12.0 - static_cast<double>(report.size()), 0.0);
  for (const std::string& r : report) c.details.push_back("audit " + r);
  return c;
}

}  // namespace

int main() {
  gsl_set_error_handler_off();
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Criterion> results{shape_invariance(), commutators(), ladder_norms(), spectrum(),
                                       eigenfunctions(),   harmonic(),    dirac(),        normalization()};
  bool all = true;
  for (const Criterion& c : results) {
    std::printf("[%s] criterion %d: %s\n", c.passed ? "PASS" : "FAIL", c.id, c.title.c_str());
    for (const std::string& d : c.details) std::printf("         %s\n", d.c_str());
    all = all && c.passed;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s (%.1f s)\n", all ? "all acceptance criteria passed" : "acceptance FAILED", seconds);
  return all ? 0 : 1;
}
