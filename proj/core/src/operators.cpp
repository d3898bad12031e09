#include "gupsu2/operators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gupsu2 {
namespace {

// sign * (1+beta p^2) P' + coupling * beta p P, same exponent.
template <class S>
BasicAlgebraicFunction<S> first_order(S sign, S coupling, const BasicAlgebraicFunction<S>& f) {
  if (f.is_zero()) return BasicAlgebraicFunction<S>::zero(f.s(), f.beta());
  const auto c = f.coeffs();
  const S beta = f.beta();
  const std::size_t d = c.size() - 1;
  std::vector<S> out(d + 2, S(0));
  for (std::size_t k = 1; k <= d; ++k) {
    const S dk = static_cast<S>(k) * c[k];
    out[k - 1] += sign * dk;
    out[k + 1] += sign * beta * dk;
  }
  for (std::size_t k = 0; k <= d; ++k) out[k + 1] += coupling * beta * c[k];
  return {std::move(out), f.s(), f.beta()};
}

double relative(double residual, double scale) { return scale > 0.0 ? residual / scale : residual; }

template <class Tag, class S, class Op>
LatticeState<Tag, S> pointwise(const LatticeState<Tag, S>& st, Op op) {
  LatticeState<Tag, S> out(st.base());
  for (const auto& [offset, f] : st.components()) out.accumulate(offset, op(st.weight(offset), f));
  return out;
}

template <class Tag, class S>
LatticeState<Tag, S> shifted(const LatticeState<Tag, S>& st, int k) {
  LatticeState<Tag, S> out(st.base());
  for (const auto& [offset, f] : st.components()) out.accumulate(offset + k, f);
  return out;
}

// 2 beta (weight - 1/2) st, beta taken per component.
template <class Tag, class S>
LatticeState<Tag, S> central_term(const LatticeState<Tag, S>& st) {
  return pointwise(st, [](double w, const BasicAlgebraicFunction<S>& f) {
    return (S(2) * S(f.beta()) * (S(w) - S(0.5))) * f;
  });
}

}  // namespace

template <class S>
BasicAlgebraicFunction<S> apply_A(double g, const BasicAlgebraicFunction<S>& f) {
  return first_order(S(1), S(g) - S(f.s()), f);
}

template <class S>
BasicAlgebraicFunction<S> apply_Abar(double g, const BasicAlgebraicFunction<S>& f) {
  return first_order(S(-1), S(g) + S(f.s()), f);
}

template <class S>
BasicAlgebraicFunction<S> apply_H(double g, const BasicAlgebraicFunction<S>& f) {
  return apply_Abar(g, apply_A(g, f));
}

template <class S>
BasicAlgebraicFunction<S> apply_Htilde(double g, const BasicAlgebraicFunction<S>& f) {
  return apply_A(g, apply_Abar(g, f));
}

double shape_invariance_residual(double g, const AlgebraicFunction& f) {
  if (f.is_zero()) return 0.0;
  const ExtendedAlgebraicFunction x = widen(f);
  const long double shift = (2.0L * (static_cast<long double>(g) + 1.0L) - 1.0L) * f.beta();
  const ExtendedAlgebraicFunction lhs = apply_Htilde(g, x);
  const ExtendedAlgebraicFunction rhs = apply_H(g + 1.0, x) + shift * x;
  return relative(max_abs_coeff_difference(lhs, rhs), f.max_abs_coeff());
}

template <class Tag, class S>
double max_abs_coeff_difference(const LatticeState<Tag, S>& a, const LatticeState<Tag, S>& b) {
  double m = 0.0;
  for (const auto& [k, fa] : a.components()) {
    const auto* fb = b.at(k);
    m = std::max(m, fb ? max_abs_coeff_difference(fa, *fb) : fa.max_abs_coeff());
  }
  for (const auto& [k, fb] : b.components()) {
    if (!a.at(k)) m = std::max(m, fb.max_abs_coeff());
  }
  return m;
}

template <class Tag, class S>
LatticeState<Tag, S> combine(const LatticeState<Tag, S>& a, double c, const LatticeState<Tag, S>& b) {
  LatticeState<Tag, S> out = a;
  for (const auto& [k, f] : b.components()) out.accumulate(k, S(c) * f);
  return out;
}

// --- theta-mode realization ---------------------------------------------------

template <class S>
LatticeState<ThetaModeTag, S> multiply_phase(const LatticeState<ThetaModeTag, S>& st, int k) {
  return shifted(st, k);
}

template <class S>
LatticeState<ThetaModeTag, S> apply_Jz(const LatticeState<ThetaModeTag, S>& st) {
  return pointwise(st, [](double g, const BasicAlgebraicFunction<S>& f) { return S(g) * f; });
}

template <class S>
LatticeState<ThetaModeTag, S> apply_Jplus(const LatticeState<ThetaModeTag, S>& st) {
  // e^{+i theta} A(J_z): A at the current weight, then the phase raises it.
  auto a = pointwise(st, [](double g, const BasicAlgebraicFunction<S>& f) { return apply_A(g, f); });
  return multiply_phase(a, +1);
}

template <class S>
LatticeState<ThetaModeTag, S> apply_Jminus(const LatticeState<ThetaModeTag, S>& st) {
  // Abar(J_z) e^{-i theta}: lower first, then Abar at the new weight.
  return pointwise(multiply_phase(st, -1),
                   [](double g, const BasicAlgebraicFunction<S>& f) { return apply_Abar(g, f); });
}

double CommutatorResiduals::max() const noexcept { return std::max({plus_minus, z_plus, z_minus}); }

CommutatorResiduals commutator_residuals(const ModeState& input) {
  using X = LatticeState<ThetaModeTag, long double>;
  CommutatorResiduals r;
  if (input.is_zero()) return r;
  const double scale = input.max_abs_coeff();
  const X st = input.widened();

  const X pm = combine(apply_Jplus(apply_Jminus(st)), -1.0, apply_Jminus(apply_Jplus(st)));
  r.plus_minus = relative(max_abs_coeff_difference(pm, central_term(st)), scale);

  const X jp = apply_Jplus(st);
  const X zp = combine(apply_Jz(jp), -1.0, apply_Jplus(apply_Jz(st)));
  r.z_plus = relative(max_abs_coeff_difference(zp, jp), scale);

  const X jm = apply_Jminus(st);
  const X zm = combine(apply_Jz(jm), -1.0, apply_Jminus(apply_Jz(st)));
  r.z_minus = relative(max_abs_coeff_difference(combine(zm, 1.0, jm), X(st.base())), scale);
  return r;
}

// --- number-variable realization -----------------------------------------------

template <class S>
LatticeState<NumberIndexTag, S> translate(const LatticeState<NumberIndexTag, S>& st, int k) {
  return shifted(st, k);
}

template <class S>
LatticeState<NumberIndexTag, S> apply_n_hat(const LatticeState<NumberIndexTag, S>& st) {
  return pointwise(st, [](double n, const BasicAlgebraicFunction<S>& f) { return S(n) * f; });
}

template <class S>
LatticeState<NumberIndexTag, S> apply_A_pointwise(const LatticeState<NumberIndexTag, S>& st, double shift) {
  return pointwise(st, [shift](double n, const BasicAlgebraicFunction<S>& f) { return apply_A(n + shift, f); });
}

template <class S>
LatticeState<NumberIndexTag, S> apply_Abar_pointwise(const LatticeState<NumberIndexTag, S>& st, double shift) {
  return pointwise(st,
                   [shift](double n, const BasicAlgebraicFunction<S>& f) { return apply_Abar(n + shift, f); });
}

template <class S>
LatticeState<NumberIndexTag, S> apply_Jplus(const LatticeState<NumberIndexTag, S>& st) {
  return translate(apply_A_pointwise(st), +1);
}

template <class S>
LatticeState<NumberIndexTag, S> apply_Jminus(const LatticeState<NumberIndexTag, S>& st) {
  return apply_Abar_pointwise(translate(st, -1));
}

double SequenceResiduals::max() const noexcept {
  return std::max({lowering_raising, raising_lowering, commutator, z_commutator});
}

SequenceResiduals sequence_residuals(const SequenceState& input) {
  using X = LatticeState<NumberIndexTag, long double>;
  SequenceResiduals r;
  if (input.is_zero()) return r;
  const double scale = input.max_abs_coeff();
  const X st = input.widened();

  const X jmjp = apply_Jminus(apply_Jplus(st));
  const X jpjm = apply_Jplus(apply_Jminus(st));

  // Abar(n)A(n) and A(n-1)Abar(n-1), both diagonal in n.
  const X h = apply_Abar_pointwise(apply_A_pointwise(st));
  const X htilde = apply_A_pointwise(apply_Abar_pointwise(st, -1.0), -1.0);
  r.lowering_raising = relative(max_abs_coeff_difference(jmjp, h), scale);
  r.raising_lowering = relative(max_abs_coeff_difference(jpjm, htilde), scale);
  r.commutator = relative(max_abs_coeff_difference(combine(jpjm, -1.0, jmjp), central_term(st)), scale);

  const X jp = apply_Jplus(st);
  const X zp = combine(apply_n_hat(jp), -1.0, apply_Jplus(apply_n_hat(st)));
  const X jm = apply_Jminus(st);
  const X zm = combine(apply_n_hat(jm), -1.0, apply_Jminus(apply_n_hat(st)));
  r.z_commutator = relative(
      std::max(max_abs_coeff_difference(zp, jp), max_abs_coeff_difference(combine(zm, 1.0, jm), X(st.base()))),
      scale);
  return r;
}

// --- explicit instantiations ---------------------------------------------------

#define GUPSU2_INSTANTIATE(S)                                                                                \
  template BasicAlgebraicFunction<S> apply_A(double, const BasicAlgebraicFunction<S>&);                      \
  template BasicAlgebraicFunction<S> apply_Abar(double, const BasicAlgebraicFunction<S>&);                   \
  template BasicAlgebraicFunction<S> apply_H(double, const BasicAlgebraicFunction<S>&);                      \
  template BasicAlgebraicFunction<S> apply_Htilde(double, const BasicAlgebraicFunction<S>&);                 \
  template double max_abs_coeff_difference(const LatticeState<ThetaModeTag, S>&,                             \
                                           const LatticeState<ThetaModeTag, S>&);                            \
  template double max_abs_coeff_difference(const LatticeState<NumberIndexTag, S>&,                          \
                                           const LatticeState<NumberIndexTag, S>&);                          \
  template LatticeState<ThetaModeTag, S> combine(const LatticeState<ThetaModeTag, S>&, double,               \
                                                 const LatticeState<ThetaModeTag, S>&);                      \
  template LatticeState<NumberIndexTag, S> combine(const LatticeState<NumberIndexTag, S>&, double,           \
                                                   const LatticeState<NumberIndexTag, S>&);                  \
  template LatticeState<ThetaModeTag, S> multiply_phase(const LatticeState<ThetaModeTag, S>&, int);         \
  template LatticeState<ThetaModeTag, S> apply_Jz(const LatticeState<ThetaModeTag, S>&);                     \
  template LatticeState<ThetaModeTag, S> apply_Jplus(const LatticeState<ThetaModeTag, S>&);                  \
  template LatticeState<ThetaModeTag, S> apply_Jminus(const LatticeState<ThetaModeTag, S>&);                 \
  template LatticeState<NumberIndexTag, S> translate(const LatticeState<NumberIndexTag, S>&, int);           \
  template LatticeState<NumberIndexTag, S> apply_n_hat(const LatticeState<NumberIndexTag, S>&);              \
  template LatticeState<NumberIndexTag, S> apply_A_pointwise(const LatticeState<NumberIndexTag, S>&, double); \
  template LatticeState<NumberIndexTag, S> apply_Abar_pointwise(const LatticeState<NumberIndexTag, S>&,      \
                                                                double);                                     \
  template LatticeState<NumberIndexTag, S> apply_Jplus(const LatticeState<NumberIndexTag, S>&);              \
  template LatticeState<NumberIndexTag, S> apply_Jminus(const LatticeState<NumberIndexTag, S>&);

GUPSU2_INSTANTIATE(double)
GUPSU2_INSTANTIATE(long double)

#undef GUPSU2_INSTANTIATE

}  // namespace gupsu2
