#pragma once

#include <map>
#include <utility>

#include "gupsu2/algebraic_function.hpp"

namespace gupsu2 {

// ---------------------------------------------------------------------------
// First-order ladder operators and the factorized Hamiltonians.
//
//   A(g)    = +(1 + beta p^2) d/dp + g beta p
//   Abar(g) = -(1 + beta p^2) d/dp + g beta p
//   H(g)      = Abar(g) A(g)
//   Htilde(g) = A(g) Abar(g)
//
// On P(p)(1+beta p^2)^(-s/2) they act as
//   A(g)    f = [ (1+beta p^2) P' + (g - s) beta p P ] (1+beta p^2)^(-s/2)
//   Abar(g) f = [-(1+beta p^2) P' + (g + s) beta p P ] (1+beta p^2)^(-s/2)
// so the exponent is preserved and the degree grows by at most one.
//
// Every operator is a template over the coefficient scalar and is instantiated
// for double and long double.
// ---------------------------------------------------------------------------

template <class S>
[[nodiscard]] BasicAlgebraicFunction<S> apply_A(double g, const BasicAlgebraicFunction<S>& f);
template <class S>
[[nodiscard]] BasicAlgebraicFunction<S> apply_Abar(double g, const BasicAlgebraicFunction<S>& f);
template <class S>
[[nodiscard]] BasicAlgebraicFunction<S> apply_H(double g, const BasicAlgebraicFunction<S>& f);
template <class S>
[[nodiscard]] BasicAlgebraicFunction<S> apply_Htilde(double g, const BasicAlgebraicFunction<S>& f);

/// Relative max-coefficient residual of Htilde(g) f - H(g+1) f - (2(g+1)-1) beta f,
/// divided by the largest coefficient of f and evaluated in long double.
/// Zero for the zero function.
[[nodiscard]] double shape_invariance_residual(double g, const AlgebraicFunction& f);

// ---------------------------------------------------------------------------
// Lattice states: finite maps from an integer lattice offset (plus a real base)
// to functions. Weights in one state differ by integers, the structure the
// raising and lowering generators preserve; integer keys keep shifts exact.
// ---------------------------------------------------------------------------

template <class Tag, class S = double>
class LatticeState {
 public:
  using Function = BasicAlgebraicFunction<S>;
  using Components = std::map<int, Function>;

  LatticeState() = default;
  explicit LatticeState(double base) : base_(base) {}
  LatticeState(double base, Components components) : base_(base), components_(std::move(components)) {
    std::erase_if(components_, [](const auto& kv) { return kv.second.is_zero(); });
  }

  /// Single-component state at weight base + offset.
  static LatticeState single(double base, Function f, int offset = 0) {
    LatticeState st(base);
    st.accumulate(offset, f);
    return st;
  }

  [[nodiscard]] double base() const noexcept { return base_; }
  [[nodiscard]] const Components& components() const noexcept { return components_; }
  [[nodiscard]] bool is_zero() const noexcept { return components_.empty(); }
  [[nodiscard]] double weight(int offset) const noexcept { return base_ + offset; }

  /// Component at a lattice offset, or nullptr.
  [[nodiscard]] const Function* at(int offset) const {
    auto it = components_.find(offset);
    return it == components_.end() ? nullptr : &it->second;
  }

  [[nodiscard]] double max_abs_coeff() const noexcept {
    double m = 0.0;
    for (const auto& kv : components_) m = std::max(m, kv.second.max_abs_coeff());
    return m;
  }

  /// Adds f into the component at offset.
  void accumulate(int offset, const Function& f) {
    if (f.is_zero()) return;
    auto it = components_.find(offset);
    if (it == components_.end()) {
      components_.emplace(offset, f);
    } else {
      it->second += f;
      if (it->second.is_zero()) components_.erase(it);
    }
  }

  /// Same state with long double coefficients.
  [[nodiscard]] LatticeState<Tag, long double> widened() const {
    LatticeState<Tag, long double> out(base_);
    for (const auto& [k, f] : components_) {
      out.accumulate(k, BasicAlgebraicFunction<long double>(
                            std::vector<long double>(f.coeffs().begin(), f.coeffs().end()), f.s(), f.beta()));
    }
    return out;
  }

 private:
  double base_ = 0.0;
  Components components_;
};

struct ThetaModeTag {};
struct NumberIndexTag {};

/// theta-Fourier decomposition: offset k carries e^{i (base+k) theta}.
using ModeState = LatticeState<ThetaModeTag>;
/// Number-variable realization: offset k is the value n = base + k.
using SequenceState = LatticeState<NumberIndexTag>;

/// Max coefficient difference across all lattice components.
template <class Tag, class S>
[[nodiscard]] double max_abs_coeff_difference(const LatticeState<Tag, S>& a, const LatticeState<Tag, S>& b);

/// a + c * b, componentwise.
template <class Tag, class S>
[[nodiscard]] LatticeState<Tag, S> combine(const LatticeState<Tag, S>& a, double c, const LatticeState<Tag, S>& b);

// ---------------------------------------------------------------------------
// Realization on ModeState (auxiliary angle theta):
//   J_z = -i d/dtheta,  J_+ = e^{+i theta} A(J_z),  J_- = Abar(J_z) e^{-i theta}.
// Component (g, f) goes to (g+1, A(g) f) under J_+ and to (g-1, Abar(g-1) f)
// under J_-.
// ---------------------------------------------------------------------------

/// Multiplication by e^{i k theta}: every weight moves by k.
template <class S>
[[nodiscard]] LatticeState<ThetaModeTag, S> multiply_phase(const LatticeState<ThetaModeTag, S>& st, int k);
template <class S>
[[nodiscard]] LatticeState<ThetaModeTag, S> apply_Jz(const LatticeState<ThetaModeTag, S>& st);
template <class S>
[[nodiscard]] LatticeState<ThetaModeTag, S> apply_Jplus(const LatticeState<ThetaModeTag, S>& st);
template <class S>
[[nodiscard]] LatticeState<ThetaModeTag, S> apply_Jminus(const LatticeState<ThetaModeTag, S>& st);

struct CommutatorResiduals {
  double plus_minus = 0.0;  ///< [J+, J-] - 2 beta (J_z - 1/2)
  double z_plus = 0.0;      ///< [J_z, J+] - J+
  double z_minus = 0.0;     ///< [J_z, J-] + J-
  [[nodiscard]] double max() const noexcept;
};

/// Residuals relative to the largest input coefficient, evaluated in long double.
/// Zero for the zero state.
[[nodiscard]] CommutatorResiduals commutator_residuals(const ModeState& st);

// ---------------------------------------------------------------------------
// Realization on SequenceState (number variable n, theta_hat = i d/dn):
//   J_z = n,  J_+ = e^{-d/dn} A(n),  J_- = Abar(n) e^{+d/dn}.
// (e^{-d/dn} F)(n) = F(n-1), so a component at n moves to n+1 under J_+.
// ---------------------------------------------------------------------------

/// The translation e^{-k d/dn}: (e^{-k d/dn} F)(n) = F(n - k).
template <class S>
[[nodiscard]] LatticeState<NumberIndexTag, S> translate(const LatticeState<NumberIndexTag, S>& st, int k);
template <class S>
[[nodiscard]] LatticeState<NumberIndexTag, S> apply_n_hat(const LatticeState<NumberIndexTag, S>& st);
/// Pointwise A(n + shift) resp. Abar(n + shift) on each component.
template <class S>
[[nodiscard]] LatticeState<NumberIndexTag, S> apply_A_pointwise(const LatticeState<NumberIndexTag, S>& st,
                                                               double shift = 0.0);
template <class S>
[[nodiscard]] LatticeState<NumberIndexTag, S> apply_Abar_pointwise(const LatticeState<NumberIndexTag, S>& st,
                                                                  double shift = 0.0);
template <class S>
[[nodiscard]] LatticeState<NumberIndexTag, S> apply_Jplus(const LatticeState<NumberIndexTag, S>& st);
template <class S>
[[nodiscard]] LatticeState<NumberIndexTag, S> apply_Jminus(const LatticeState<NumberIndexTag, S>& st);

struct SequenceResiduals {
  double lowering_raising = 0.0;  ///< J-J+ - Abar(n)A(n)
  double raising_lowering = 0.0;  ///< J+J- - A(n-1)Abar(n-1)
  double commutator = 0.0;        ///< [J+, J-] - 2 beta (n - 1/2)
  double z_commutator = 0.0;      ///< max of [J_z, J+] - J+ and [J_z, J-] + J-
  [[nodiscard]] double max() const noexcept;
};

/// Residuals relative to the largest input coefficient, evaluated in long double.
[[nodiscard]] SequenceResiduals sequence_residuals(const SequenceState& st);

}  // namespace gupsu2
