#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gupsu2 {

/// A function of momentum of the form P(p) * (1 + beta p^2)^(-s/2).
///
/// P is stored by its coefficients in ascending degree. This family is closed
/// under the first-order ladder operators, so every operator identity of the
/// model can be checked coefficient by coefficient instead of on a grid.
///
/// The value is kept canonical: trailing coefficients with magnitude below
/// kCanonicalCutoff are dropped, so the zero function has no coefficients.
///
/// The public type uses double coefficients; the long double instantiation
/// exists so identity residuals can be evaluated below double rounding.
template <class Scalar>
class BasicAlgebraicFunction {
 public:
  using scalar_type = Scalar;
  static constexpr double kCanonicalCutoff = 1e-300;

  /// Throws InvalidParameterError unless beta > 0 and s is finite.
  BasicAlgebraicFunction(std::vector<Scalar> coeffs, double s, double beta);

  static BasicAlgebraicFunction zero(double s, double beta);
  static BasicAlgebraicFunction monomial(std::size_t degree, Scalar coefficient, double s, double beta);

  [[nodiscard]] std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] double s() const noexcept { return s_; }
  [[nodiscard]] double beta() const noexcept { return beta_; }

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of P; -1 for the zero function.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of p^k, zero past the degree.
  [[nodiscard]] Scalar coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : Scalar(0);
  }
  /// Largest coefficient magnitude; zero for the zero function.
  [[nodiscard]] double max_abs_coeff() const noexcept;

  [[nodiscard]] double polynomial_at(double p) const noexcept;
  [[nodiscard]] double operator()(double p) const noexcept;

  BasicAlgebraicFunction& operator+=(const BasicAlgebraicFunction& rhs);
  BasicAlgebraicFunction& operator-=(const BasicAlgebraicFunction& rhs);
  BasicAlgebraicFunction& operator*=(Scalar factor);

  friend BasicAlgebraicFunction operator+(BasicAlgebraicFunction lhs, const BasicAlgebraicFunction& rhs) {
    return lhs += rhs;
  }
  friend BasicAlgebraicFunction operator-(BasicAlgebraicFunction lhs, const BasicAlgebraicFunction& rhs) {
    return lhs -= rhs;
  }
  friend BasicAlgebraicFunction operator*(Scalar factor, BasicAlgebraicFunction f) { return f *= factor; }
  friend BasicAlgebraicFunction operator*(BasicAlgebraicFunction f, Scalar factor) { return f *= factor; }

  friend bool operator==(const BasicAlgebraicFunction&, const BasicAlgebraicFunction&) = default;

 private:
  void canonicalize() noexcept;
  void require_compatible(const BasicAlgebraicFunction& rhs) const;

  std::vector<Scalar> coeffs_;
  double s_;
  double beta_;
};

using AlgebraicFunction = BasicAlgebraicFunction<double>;
using ExtendedAlgebraicFunction = BasicAlgebraicFunction<long double>;

extern template class BasicAlgebraicFunction<double>;
extern template class BasicAlgebraicFunction<long double>;

[[nodiscard]] ExtendedAlgebraicFunction widen(const AlgebraicFunction& f);

/// Throws BetaMismatchError when the two deformation parameters differ.
template <class S>
void require_same_beta(const BasicAlgebraicFunction<S>& a, const BasicAlgebraicFunction<S>& b);

/// max |coeff(a - b)|.
template <class S>
[[nodiscard]] double max_abs_coeff_difference(const BasicAlgebraicFunction<S>& a,
                                              const BasicAlgebraicFunction<S>& b);

}  // namespace gupsu2
