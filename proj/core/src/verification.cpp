#include "gupsu2/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <sstream>

#include "gupsu2/eigenfunctions.hpp"
#include "gupsu2/error.hpp"
#include "gupsu2/operators.hpp"
#include "gupsu2/physical_models.hpp"
#include "gupsu2/random_family.hpp"
#include "gupsu2/representation.hpp"
#include "gupsu2/special_functions.hpp"
#include "gupsu2/sturm_oracle.hpp"

namespace gupsu2 {
namespace {

constexpr int kRandomDraws = 100;
constexpr std::size_t kOracleGrid = 4096;

// Tracks the worst value of one check.
class Worst {
 public:
  void update(double value) {
    if (std::isnan(value)) {
      nan_ = true;
    } else {
      value_ = std::max(value_, value);
    }
  }
  [[nodiscard]] double value() const noexcept { return nan_ ? std::nan("") : value_; }

 private:
  double value_ = 0.0;
  bool nan_ = false;
};

CheckResult make_check(std::string name, double measured, double tolerance, std::string note = {}) {
  const bool ok = !std::isnan(measured) && measured <= tolerance;
  return {std::move(name), measured, tolerance, ok, std::move(note)};
}

// Runs a check body, turning an exception into a failed row.
CheckResult guarded(const std::string& name, double tolerance, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, std::nan(""), tolerance, false, std::string("exception: ") + e.what()};
  }
}

double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b)});
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

std::string format(const char* fmt, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c, d);
  return buf;
}

// --- algebra --------------------------------------------------------------------

SuiteReport algebra_suite(std::uint64_t seed) {
  SuiteReport rep{Suite::algebra, {}, {}};

  rep.checks.push_back(guarded("shape invariance Htilde(g) = H(g+1) + (2g+1) beta", 1e-12, [&] {
    RandomFamily rf(seed + 1);
    Worst w;
    for (int i = 0; i < kRandomDraws; ++i) {
      const double g = rf.g();
      w.update(shape_invariance_residual(g, rf.function()));
    }
    return make_check("shape invariance Htilde(g) = H(g+1) + (2g+1) beta", w.value(), 1e-12, "100 random inputs");
  }));

  rep.checks.push_back(guarded("su(2) commutators on theta modes", 1e-12, [&] {
    RandomFamily rf(seed + 2);
    Worst w;
    for (int i = 0; i < kRandomDraws; ++i) {
      const double base = rf.g();
      const ModeState st = i % 2 == 0 ? rf.mode_state(base, {0}) : rf.mode_state(base, {-1, 0, 2});
      w.update(commutator_residuals(st).max());
    }
    return make_check("su(2) commutators on theta modes", w.value(), 1e-12, "[J+,J-], [Jz,J+], [Jz,J-]");
  }));

  rep.checks.push_back(guarded("number-variable realization products and commutators", 1e-12, [&] {
    RandomFamily rf(seed + 3);
    Worst w;
    for (int i = 0; i < kRandomDraws; ++i) {
      const double base = i % 2 == 0 ? 0.0 : 0.5;
      w.update(sequence_residuals(rf.sequence_state(base, {1, 2, 3})).max());
    }
    return make_check("number-variable realization products and commutators", w.value(), 1e-12,
                      "support n in {1,2,3} (+1/2 for odd draws)");
  }));

  rep.checks.push_back(guarded("closure: same s, degree <= deg + 1", 0.0, [&] {
    RandomFamily rf(seed + 4);
    double violations = 0.0;
    for (int i = 0; i < kRandomDraws; ++i) {
      const AlgebraicFunction f = rf.function();
      const double g = rf.g();
      for (const AlgebraicFunction& out : {apply_A(g, f), apply_Abar(g, f)}) {
        if (out.s() != f.s() || out.degree() > f.degree() + 1) violations += 1.0;
      }
    }
    return make_check("closure: same s, degree <= deg + 1", violations, 0.0, "count of violations");
  }));

  rep.checks.push_back(guarded("hermitian conjugacy <f1, A f2> = <Abar f1, f2>", 1e-10, [&] {
    RandomFamily rf(seed + 5);
    Worst w;
    for (int i = 0; i < kRandomDraws; ++i) {
      const double beta = rf.beta();
      const int d1 = rf.integer(0, 4);
      const int d2 = rf.integer(0, 4);
      const AlgebraicFunction f1 = rf.function(d1 + rf.uniform(1.5, 4.0), beta, d1);
      const AlgebraicFunction f2 = rf.function(d2 + rf.uniform(1.5, 4.0), beta, d2);
      const double g = rf.g();
      const AlgebraicFunction af2 = apply_A(g, f2);
      const double lhs = inner_product(f1, af2);
      const double rhs = inner_product(apply_Abar(g, f1), f2);
      const double scale = weighted_norm(f1) * (af2.is_zero() ? 1.0 : weighted_norm(af2));
      w.update(std::abs(lhs - rhs) / scale);
    }
    return make_check("hermitian conjugacy <f1, A f2> = <Abar f1, f2>", w.value(), 1e-10,
                      "relative to ||f1|| ||A f2||");
  }));

  rep.checks.push_back(guarded("linearity of A, Abar, H", 1e-12, [&] {
    RandomFamily rf(seed + 6);
    Worst w;
    for (int i = 0; i < kRandomDraws; ++i) {
      const double s = rf.s();
      const double beta = rf.beta();
      const AlgebraicFunction f = rf.function(s, beta);
      const AlgebraicFunction h = rf.function(s, beta);
      const double a = rf.uniform(-2.0, 2.0);
      const double b = rf.uniform(-2.0, 2.0);
      const double g = rf.g();
      const AlgebraicFunction mix = a * f + b * h;
      const double scale = std::max(1.0, apply_H(g, mix).max_abs_coeff());
      w.update(max_abs_coeff_difference(apply_A(g, mix), a * apply_A(g, f) + b * apply_A(g, h)) / scale);
      w.update(max_abs_coeff_difference(apply_Abar(g, mix), a * apply_Abar(g, f) + b * apply_Abar(g, h)) / scale);
      w.update(max_abs_coeff_difference(apply_H(g, mix), a * apply_H(g, f) + b * apply_H(g, h)) / scale);
    }
    return make_check("linearity of A, Abar, H", w.value(), 1e-12);
  }));

  rep.checks.push_back(guarded("realizations agree on <j,g+-1|J+-|j,g>, j <= 4", 1e-12, [&] {
    Worst w;
    int elements = 0;
    for (double beta : {0.5, 1.0, 2.0}) {
      for (int twice_j = 1; twice_j <= 8; ++twice_j) {
        const double j = 0.5 * twice_j;
        for (double g = j; g >= 1.0 - j - 1e-9; g -= 1.0) {
          for (Ladder l : {Ladder::raising, Ladder::lowering}) {
            const double target = l == Ladder::raising ? g + 1.0 : g - 1.0;
            if (!validate_label(j, target)) continue;
            const double a = ladder_matrix_element(Realization::number_sequence, l, j, g, beta);
            const double b = ladder_matrix_element(Realization::theta_modes, l, j, g, beta);
            w.update(std::abs(a - b) / std::max(1.0, std::abs(b)));
            ++elements;
          }
        }
      }
    }
    return make_check("realizations agree on <j,g+-1|J+-|j,g>, j <= 4", w.value(), 1e-12,
                      std::to_string(elements) + " matrix elements");
  }));
  return rep;
}

// --- su(2) ----------------------------------------------------------------------

SuiteReport su2_suite(std::uint64_t) {
  SuiteReport rep{Suite::su2, {}, {}};

  rep.checks.push_back(guarded("descent coefficient x ladder norms = 1, j <= 6", 1e-12, [&] {
    Worst w;
    for (double beta : {0.25, 1.0, 4.0}) {
      for (int twice_j = 1; twice_j <= 12; ++twice_j) {
        const double j = 0.5 * twice_j;
        for (double g = j; g >= 1.0 - j - 1e-9; g -= 1.0) {
          double product = descent_coefficient(j, g, beta);
          for (double weight = j; weight > g + 0.5; weight -= 1.0) product *= ladder_norm_down(j, weight, beta);
          w.update(std::abs(product - 1.0));
        }
      }
    }
    return make_check("descent coefficient x ladder norms = 1, j <= 6", w.value(), 1e-12);
  }));

  rep.checks.push_back(guarded("ladder norm ||A(g) psi_{j,g}|| = sqrt(beta(j^2-g^2)), j <= 4", 1e-10, [&] {
    Worst w;
    int reflected = 0;
    for (double beta : {0.5, 1.0, 2.0}) {
      for (int twice_j = 1; twice_j <= 8; ++twice_j) {
        const double j = 0.5 * twice_j;
        for (double g = j; g >= 1.0 - j - 1e-9; g -= 1.0) {
          const AlgebraicFunction descended = descended_representation_state(j, g, beta);
          if (!inner_product_converges(descended, descended)) ++reflected;
          const AlgebraicFunction psi = representation_state(j, g, beta);
          const AlgebraicFunction up = apply_A(g, psi);
          const double norm = up.is_zero() ? 0.0 : weighted_norm(up);
          w.update(std::abs(norm - ladder_norm_up(j, g, beta)));
          w.update(std::abs(weighted_norm(psi) - 1.0));
        }
      }
    }
    return make_check("ladder norm ||A(g) psi_{j,g}|| = sqrt(beta(j^2-g^2)), j <= 4", w.value(), 1e-10,
                      std::to_string(reflected) + " labels use the reflected (square-integrable) form");
  }));

  rep.checks.push_back(guarded("energy = beta((g+n)^2 - g^2)", 1e-13, [&] {
    Worst w;
    for (double g : {0.5, 1.0, 1.5, 2.0, 2.3, 7.25}) {
      for (double beta : {0.25, 1.0, 4.0}) {
        for (unsigned n = 0; n <= 20; ++n) {
          const double gn = g + n;
          w.update(rel_diff(energy(n, g, beta), beta * (gn * gn - g * g)));
        }
      }
    }
    return make_check("energy = beta((g+n)^2 - g^2)", w.value(), 1e-13);
  }));

  rep.checks.push_back(guarded("states |g+n, g> exist for g in {1/2,1,3/2,2}", 0.0, [&] {
    double missing = 0.0;
    for (double g : {0.5, 1.0, 1.5, 2.0})
      for (unsigned n = 0; n <= 50; ++n)
        if (!validate_label(g + n, g)) missing += 1.0;
    return make_check("states |g+n, g> exist for g in {1/2,1,3/2,2}", missing, 0.0, "count of invalid labels");
  }));

  rep.checks.push_back(guarded("energies strictly increasing in n", 0.0, [&] {
    double violations = 0.0;
    for (double g : {0.1, 0.5, 1.0, 2.3, 10.0})
      for (unsigned n = 0; n < 40; ++n)
        if (!(energy(n + 1, g, 1.0) > energy(n, g, 1.0))) violations += 1.0;
    return make_check("energies strictly increasing in n", violations, 0.0, "count of violations");
  }));
  return rep;
}

// --- eigenfunctions -----------------------------------------------------------

constexpr std::array<double, 4> kEigenG = {0.5, 1.0, 1.5, 2.3};
constexpr std::array<double, 2> kEigenBeta = {0.5, 1.0};
constexpr unsigned kEigenMaxN = 6;

SuiteReport eigenfunction_suite(std::uint64_t) {
  SuiteReport rep{Suite::eigenfunctions, {}, {}};

  rep.checks.push_back(guarded("Gram matrix of psi_0..psi_6 is identity", 1e-10, [&] {
    Worst w;
    for (double g : kEigenG)
      for (double beta : kEigenBeta) {
        std::vector<AlgebraicFunction> psi;
        for (unsigned n = 0; n <= kEigenMaxN; ++n) psi.push_back(eigenfunction(n, g, beta));
        for (unsigned m = 0; m <= kEigenMaxN; ++m)
          for (unsigned n = 0; n <= kEigenMaxN; ++n) {
            // Different exponents: the inner product needs only s1 + s2.
            const double expected = m == n ? 1.0 : 0.0;
            w.update(std::abs(inner_product(psi[m], psi[n]) - expected));
          }
      }
    return make_check("Gram matrix of psi_0..psi_6 is identity", w.value(), 1e-10);
  }));

  rep.checks.push_back(guarded("H(g) psi_n = (n^2 + 2ng) beta psi_n", 1e-10, [&] {
    Worst w;
    for (double g : kEigenG)
      for (double beta : kEigenBeta)
        for (unsigned n = 0; n <= kEigenMaxN; ++n) {
          const AlgebraicFunction psi = eigenfunction(n, g, beta);
          const AlgebraicFunction lhs = apply_H(g, psi);
          const AlgebraicFunction rhs = energy(n, g, beta) * psi;
          w.update(max_abs_coeff_difference(lhs, rhs) / psi.max_abs_coeff());
        }
    return make_check("H(g) psi_n = (n^2 + 2ng) beta psi_n", w.value(), 1e-10, "relative to max coefficient of psi");
  }));

  rep.checks.push_back(guarded("Gegenbauer proportionality defect", 1e-9, [&] {
    Worst w;
    for (double g : kEigenG)
      for (double beta : kEigenBeta)
        for (unsigned n = 0; n <= kEigenMaxN; ++n) {
          const auto samples = gegenbauer_samples(n, g, beta, -5.0, 5.0, 50);
          w.update(gegenbauer_match(n, g, beta, samples));
        }
    return make_check("Gegenbauer proportionality defect", w.value(), 1e-9,
                      "xi = sqrt(beta) p / sqrt(1 + beta p^2)");
  }));

  rep.checks.push_back(guarded("parity (-1)^n of the polynomial part", 0.0, [&] {
    Worst w;
    for (double g : kEigenG)
      for (unsigned n = 0; n <= kEigenMaxN; ++n) {
        const AlgebraicFunction psi = eigenfunction(n, g, 1.0);
        for (std::size_t k = (n + 1) % 2; k < psi.coeffs().size(); k += 2) w.update(std::abs(psi.coeffs()[k]));
      }
    return make_check("parity (-1)^n of the polynomial part", w.value(), 0.0, "largest wrong-parity coefficient");
  }));

  rep.checks.push_back(guarded("||A(g) psi_n||^2 = E_n", 1e-10, [&] {
    Worst w;
    for (double g : kEigenG)
      for (double beta : kEigenBeta)
        for (unsigned n = 0; n <= kEigenMaxN; ++n) {
          const AlgebraicFunction a = apply_A(g, eigenfunction(n, g, beta));
          const double norm2 = a.is_zero() ? 0.0 : inner_product(a, a);
          w.update(std::abs(norm2 - energy(n, g, beta)) / std::max(1.0, energy(n, g, beta)));
        }
    return make_check("||A(g) psi_n||^2 = E_n", w.value(), 1e-10);
  }));

  rep.checks.push_back(guarded("descent normalization before rescaling", 1e-10, [&] {
    Worst w;
    for (double g : kEigenG)
      for (double beta : kEigenBeta)
        for (unsigned n = 0; n <= kEigenMaxN; ++n) w.update(std::abs(weighted_norm(descended_state(n, g, beta)) - 1.0));
    return make_check("descent normalization before rescaling", w.value(), 1e-10,
                      "descent coefficient alone yields unit norm");
  }));
  return rep;
}

// --- oracle -----------------------------------------------------------------------

double operator_norm(const TridiagonalOperator& t) {
  double norm = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    double row = std::abs(t.diag[i]);
    if (i > 0) row += std::abs(t.offdiag[i - 1]);
    if (i + 1 < t.size()) row += std::abs(t.offdiag[i]);
    norm = std::max(norm, row);
  }
  return norm;
}

SuiteReport oracle_suite(std::uint64_t) {
  SuiteReport rep{Suite::oracle, {}, {}};

  rep.checks.push_back(guarded("oracle vs closed form, N = 4096, n <= 4", 5e-3, [&] {
    Worst w;
    for (double g : {1.0, 1.5, 2.0, 3.0})
      for (double beta : {0.5, 1.0, 2.0}) {
        const SpectralResult r = oracle_spectrum(g, beta, kOracleGrid, 5);
        for (const SpectralLine& line : r.lines) {
          const double n1 = line.n + 1.0;
          w.update(std::abs(line.energy - energy(line.n, g, beta)) / (n1 * n1 * beta));
        }
      }
    return make_check("oracle vs closed form, N = 4096, n <= 4", w.value(), 5e-3, "normalized by (n+1)^2 beta");
  }));

  rep.checks.push_back(guarded("g = 1 discretization vs discrete box formula", 1e-10, [&] {
    Worst w;
    double absolute = 0.0;
    for (double beta : {0.5, 1.0, 2.0}) {
      const TridiagonalOperator t = to_sturm(1.0, beta, kOracleGrid);
      const auto values = lowest_eigenvalues(t, 5);
      const double norm = operator_norm(t);
      for (std::size_t k = 0; k < values.size(); ++k) {
        const double diff = std::abs(values[k] - discrete_box_eigenvalue(k + 1, kOracleGrid, beta));
        absolute = std::max(absolute, diff);
        w.update(diff / norm);
      }
    }
    return make_check("g = 1 discretization vs discrete box formula", w.value(), 1e-10,
                      format("relative to ||T||_inf; max absolute %.3g", absolute));
  }));

  rep.checks.push_back(guarded("O(h^2) convergence: err(4096)/err(2048)", 0.0, [&] {
    double outside = 0.0;
    double lo = 1.0;
    double hi = 0.0;
    for (double g : {1.0, 2.0, 3.0})
      for (double beta : {0.5, 1.0, 2.0}) {
        const SpectralResult coarse = oracle_spectrum(g, beta, 2048, 4);
        const SpectralResult fine = oracle_spectrum(g, beta, 4096, 4);
        for (unsigned n = 0; n < 4; ++n) {
          const double exact = energy(n, g, beta);
          const double e_fine = std::abs(fine.lines[n].energy - exact);
          const double e_coarse = std::abs(coarse.lines[n].energy - exact);
          if (e_fine < 1e-9) continue;
          const double ratio = e_fine / e_coarse;
          lo = std::min(lo, ratio);
          hi = std::max(hi, ratio);
          if (ratio < 0.2 || ratio > 0.35) outside += 1.0;
        }
      }
    return make_check("O(h^2) convergence: err(4096)/err(2048)", outside, 0.0,
                      format("ratios in [%.4f, %.4f]; count outside [0.2, 0.35]", lo, hi));
  }));

  rep.checks.push_back(guarded("ground eigenvalue above min potential", 0.0, [&] {
    double violations = 0.0;
    for (double g : {1.0, 1.5, 2.0, 3.0}) {
      const TridiagonalOperator t = to_sturm(g, 1.0, 1024);
      double min_v = std::numeric_limits<double>::infinity();
      for (std::size_t i = 1; i <= t.size(); ++i)
        min_v = std::min(min_v, poschl_teller_potential(sturm_node(i, t.size(), 1.0), g, 1.0));
      if (!(lowest_eigenvalues(t, 1)[0] >= min_v)) violations += 1.0;
    }
    return make_check("ground eigenvalue above min potential", violations, 0.0, "count of violations");
  }));
  return rep;
}

// --- physical models -----------------------------------------------------------

double log_uniform(RandomFamily& rf, double lo, double hi) {
  return std::exp(rf.uniform(std::log(lo), std::log(hi)));
}

SuiteReport models_suite(std::uint64_t seed) {
  SuiteReport rep{Suite::models, {}, {}};

  rep.checks.push_back(guarded("harmonic: closed form = (m hbar^2 w^2/2)[(n^2+2ng)b + g b]", 1e-12, [&] {
    RandomFamily rf(seed + 11);
    Worst w;
    for (int i = 0; i < kRandomDraws; ++i) {
      const HarmonicGUP model{log_uniform(rf, 0.1, 10.0), log_uniform(rf, 0.1, 10.0), log_uniform(rf, 0.1, 10.0),
                              log_uniform(rf, 1e-3, 10.0)};
      for (unsigned n = 0; n <= 10; ++n) w.update(rel_diff(harmonic_energy(n, model), harmonic_energy_from_su2(n, model)));
    }
    return make_check("harmonic: closed form = (m hbar^2 w^2/2)[(n^2+2ng)b + g b]", w.value(), 1e-12,
                      "100 random parameter draws, n <= 10");
  }));

  rep.checks.push_back(guarded("harmonic: beta = 1e-8 recovers hbar w (n + 1/2)", 1e-6, [&] {
    Worst w;
    const HarmonicGUP model{1.0, 1.0, 1.0, 1e-8};
    for (unsigned n = 0; n <= 10; ++n) w.update(rel_diff(harmonic_energy(n, model), n + 0.5));
    return make_check("harmonic: beta = 1e-8 recovers hbar w (n + 1/2)", w.value(), 1e-6);
  }));

  rep.checks.push_back(guarded("harmonic: oracle pipeline vs closed form", 5e-3, [&] {
    Worst w;
    for (double beta : {0.5, 1.0, 2.0}) {
      const HarmonicGUP model{1.0, 1.0, 1.0, beta};
      const double g = harmonic_g(model);
      const SpectralResult r = oracle_spectrum(g, beta, kOracleGrid, 5);
      for (const SpectralLine& line : r.lines)
        w.update(rel_diff(harmonic_energy_from_eigenvalue(line.energy, model), harmonic_energy(line.n, model)));
    }
    return make_check("harmonic: oracle pipeline vs closed form", w.value(), 5e-3);
  }));

  rep.checks.push_back(guarded("Dirac: g(g-1) beta^2 = (1 - m hbar w beta)/(m hbar w)^2", 1e-14, [&] {
    RandomFamily rf(seed + 12);
    Worst w;
    for (int i = 0; i < kRandomDraws; ++i) {
      const DiracGUP model{log_uniform(rf, 0.1, 10.0), log_uniform(rf, 0.1, 10.0), log_uniform(rf, 0.1, 10.0),
                           log_uniform(rf, 0.1, 10.0), log_uniform(rf, 1e-2, 10.0)};
      const DiracUpperProblem p = dirac_upper_problem(model);
      w.update(std::abs(p.coefficient_residual()));
      w.update(rel_diff(p.g, dirac_g(model)));
    }
    return make_check("Dirac: g(g-1) beta^2 = (1 - m hbar w beta)/(m hbar w)^2", w.value(), 1e-14,
                      "relative to max(|lhs|, |rhs|, 1/(m hbar w)^2)");
  }));

  rep.checks.push_back(guarded("Dirac: squared-equation eigenvalue matches closed-form energies", 1e-12, [&] {
    RandomFamily rf(seed + 13);
    Worst w;
    for (int i = 0; i < kRandomDraws; ++i) {
      const DiracGUP model{log_uniform(rf, 0.1, 10.0), log_uniform(rf, 0.1, 10.0), log_uniform(rf, 0.1, 10.0),
                           log_uniform(rf, 0.1, 10.0), log_uniform(rf, 1e-2, 10.0)};
      const DiracUpperProblem p = dirac_upper_problem(model);
      for (unsigned n = 0; n <= 10; ++n) {
        const double target = energy(n, p.g, model.beta) + p.g * model.beta;
        w.update(rel_diff(p.reduced_eigenvalue(dirac_energy(n, model, Branch::positive)), target));
        w.update(rel_diff(p.reduced_eigenvalue(dirac_energy(n, model, Branch::negative)), target));
      }
    }
    return make_check("Dirac: squared-equation eigenvalue matches closed-form energies", w.value(), 1e-12);
  }));

  rep.checks.push_back(guarded("Dirac: oracle pipeline (g = 2) reproduces E_n, n <= 3", 5e-3, [&] {
    Worst w;
    const DiracGUP model{1.0, 1.0, 1.0, 1.0, 0.5};
    const DiracUpperProblem p = dirac_upper_problem(model);
    const SpectralResult r = oracle_spectrum(p.g, model.beta, kOracleGrid, 4);
    for (const SpectralLine& line : r.lines)
      w.update(rel_diff(p.energy_from_h_eigenvalue(line.energy, Branch::positive),
                        dirac_energy(line.n, model, Branch::positive)));
    return make_check("Dirac: oracle pipeline (g = 2) reproduces E_n, n <= 3", w.value(), 5e-3);
  }));

  rep.checks.push_back(guarded("Dirac spinor: joint norm, partner equation, Dirac rows", 1e-10, [&] {
    Worst w;
    for (double beta : {0.25, 0.5, 1.0}) {
      const DiracGUP model{1.0, 1.0, 1.0, 1.0, beta};
      for (unsigned n = 0; n <= 4; ++n) {
        const SpinorProfile sp = dirac_spinor(n, model);
        const double norm = inner_product(sp.f1, sp.f1) +
                            (sp.lower_imaginary.is_zero() ? 0.0 : inner_product(sp.lower_imaginary, sp.lower_imaginary));
        w.update(std::abs(norm - 1.0));
        w.update(dirac_lower_residual(n, model));
        w.update(dirac_equation_residual(sp, model));
      }
    }
    return make_check("Dirac spinor: joint norm, partner equation, Dirac rows", w.value(), 1e-10);
  }));

  rep.checks.push_back(guarded("minimal length: min Delta x = hbar sqrt(beta)", 1e-12, [&] {
    Worst w;
    for (double beta : {1e-4, 0.25, 1.0, 9.0})
      for (double hbar : {0.5, 1.0}) {
        const double dp = optimal_momentum_spread(0.0, beta);
        w.update(rel_diff(uncertainty_bound(dp, 0.0, beta, hbar) / dp, hbar * std::sqrt(beta)));
        w.update(rel_diff(minimal_position_uncertainty(0.0, beta, hbar), hbar * std::sqrt(beta)));
      }
    return make_check("minimal length: min Delta x = hbar sqrt(beta)", w.value(), 1e-12);
  }));
  return rep;
}

// --- normalization ------------------------------------------------------------

SuiteReport normalization_suite(std::uint64_t) {
  SuiteReport rep{Suite::normalization, {}, {}};

  rep.checks.push_back(guarded("ground profile has unit weighted norm", 1e-12, [&] {
    Worst w;
    for (double G : {0.5, 1.0, 1.7, 6.0})
      for (double beta : {0.25, 1.0, 4.0}) {
        const AlgebraicFunction f = ground_profile(G, beta);
        w.update(std::abs(inner_product(f, f) - 1.0));
        w.update(apply_A(G, f).max_abs_coeff());
      }
    return make_check("ground profile has unit weighted norm", w.value(), 1e-12, "also A(G) psi = 0");
  }));

  rep.notes.push_back("ground-profile constant: implemented vs printed (beta/pi)^(1/4) sqrt(Gamma((G+2)/2)/Gamma((G+1)/2))");
  rep.notes.push_back("      G    beta   implemented       printed   ratio   norm(printed)");
  for (double G : {0.5, 1.0, 1.7, 6.0})
    for (double beta : {0.25, 1.0, 4.0}) {
      const NormalizationAudit a = normalization_audit(G, beta);
      char line[160];
      std::snprintf(line, sizeof line, "%7.2f %7.2f %13.10f %13.10f %7.4f %13.10f", G, beta, a.implemented_constant,
                    a.printed_constant, a.printed_constant / a.implemented_constant, a.printed_norm);
      rep.notes.emplace_back(line);
    }
  return rep;
}

}  // namespace

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::algebra: return "algebra";
    case Suite::su2: return "su2";
    case Suite::eigenfunctions: return "eigenfunctions";
    case Suite::oracle: return "oracle";
    case Suite::models: return "models";
    case Suite::normalization: return "normalization";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  for (Suite s : kAllSuites)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

bool SuiteReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SuiteReport run_suite(Suite suite, std::uint64_t seed) {
  switch (suite) {
    case Suite::algebra: return algebra_suite(seed);
    case Suite::su2: return su2_suite(seed);
    case Suite::eigenfunctions: return eigenfunction_suite(seed);
    case Suite::oracle: return oracle_suite(seed);
    case Suite::models: return models_suite(seed);
    case Suite::normalization: return normalization_suite(seed);
  }
  throw InvalidParameterError("run_suite: unknown suite");
}

std::vector<SuiteReport> run_suites(std::span<const Suite> suites, bool concurrent, std::uint64_t seed) {
  std::vector<SuiteReport> out;
  out.reserve(suites.size());
  if (!concurrent) {
    for (Suite s : suites) out.push_back(run_suite(s, seed));
    return out;
  }
  std::vector<std::future<SuiteReport>> jobs;
  jobs.reserve(suites.size());
  for (Suite s : suites) jobs.push_back(std::async(std::launch::async, [s, seed] { return run_suite(s, seed); }));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::vector<double> gegenbauer_samples(unsigned n, double g, double beta, double lo, double hi, std::size_t count) {
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid.push_back(lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(count));
  }
  double peak = 0.0;
  for (double p : grid) peak = std::max(peak, std::abs(gegenbauer(n, g, gegenbauer_variable(p, beta))));
  std::vector<double> out;
  for (double p : grid) {
    if (p != 0.0 && std::abs(gegenbauer(n, g, gegenbauer_variable(p, beta))) >= 1e-2 * peak) out.push_back(p);
  }
  return out;
}

}  // namespace gupsu2
