#include "gupsu2/algebraic_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gupsu2/error.hpp"

namespace gupsu2 {

template <class S>
BasicAlgebraicFunction<S>::BasicAlgebraicFunction(std::vector<S> coeffs, double s, double beta)
    : coeffs_(std::move(coeffs)), s_(s), beta_(beta) {
  if (!(beta_ > 0.0) || !std::isfinite(beta_)) {
    throw InvalidParameterError("AlgebraicFunction: beta must be finite and positive");
  }
  if (!std::isfinite(s_)) {
    throw InvalidParameterError("AlgebraicFunction: exponent s must be finite");
  }
  canonicalize();
}

template <class S>
BasicAlgebraicFunction<S> BasicAlgebraicFunction<S>::zero(double s, double beta) {
  return {{}, s, beta};
}

template <class S>
BasicAlgebraicFunction<S> BasicAlgebraicFunction<S>::monomial(std::size_t degree, S coefficient, double s,
                                                              double beta) {
  std::vector<S> c(degree + 1, S(0));
  c[degree] = coefficient;
  return {std::move(c), s, beta};
}

template <class S>
void BasicAlgebraicFunction<S>::canonicalize() noexcept {
  while (!coeffs_.empty() && std::abs(coeffs_.back()) < S(kCanonicalCutoff)) coeffs_.pop_back();
}

template <class S>
double BasicAlgebraicFunction<S>::max_abs_coeff() const noexcept {
  S m = 0;
  for (S c : coeffs_) m = std::max(m, std::abs(c));
  return static_cast<double>(m);
}

template <class S>
double BasicAlgebraicFunction<S>::polynomial_at(double p) const noexcept {
  S acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * S(p) + *it;
  return static_cast<double>(acc);
}

template <class S>
double BasicAlgebraicFunction<S>::operator()(double p) const noexcept {
  return polynomial_at(p) * std::pow(1.0 + beta_ * p * p, -0.5 * s_);
}

template <class S>
void require_same_beta(const BasicAlgebraicFunction<S>& a, const BasicAlgebraicFunction<S>& b) {
  if (a.beta() != b.beta()) {
    std::ostringstream os;
    os << "beta mismatch: " << a.beta() << " vs " << b.beta();
    throw BetaMismatchError(os.str());
  }
}

template <class S>
void BasicAlgebraicFunction<S>::require_compatible(const BasicAlgebraicFunction& rhs) const {
  require_same_beta(*this, rhs);
  if (s_ != rhs.s_ && !(is_zero() || rhs.is_zero())) {
    std::ostringstream os;
    os << "cannot add functions with exponents s=" << s_ << " and s=" << rhs.s_;
    throw DomainError(os.str());
  }
}

template <class S>
BasicAlgebraicFunction<S>& BasicAlgebraicFunction<S>::operator+=(const BasicAlgebraicFunction& rhs) {
  require_compatible(rhs);
  if (is_zero()) s_ = rhs.s_;
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), S(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  canonicalize();
  return *this;
}

template <class S>
BasicAlgebraicFunction<S>& BasicAlgebraicFunction<S>::operator-=(const BasicAlgebraicFunction& rhs) {
  require_compatible(rhs);
  if (is_zero()) s_ = rhs.s_;
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), S(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  canonicalize();
  return *this;
}

template <class S>
BasicAlgebraicFunction<S>& BasicAlgebraicFunction<S>::operator*=(S factor) {
  for (S& c : coeffs_) c *= factor;
  canonicalize();
  return *this;
}

template <class S>
double max_abs_coeff_difference(const BasicAlgebraicFunction<S>& a, const BasicAlgebraicFunction<S>& b) {
  require_same_beta(a, b);
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  S m = 0;
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
  return static_cast<double>(m);
}

ExtendedAlgebraicFunction widen(const AlgebraicFunction& f) {
  std::vector<long double> c(f.coeffs().begin(), f.coeffs().end());
  return {std::move(c), f.s(), f.beta()};
}

template class BasicAlgebraicFunction<double>;
template class BasicAlgebraicFunction<long double>;
template void require_same_beta(const AlgebraicFunction&, const AlgebraicFunction&);
template void require_same_beta(const ExtendedAlgebraicFunction&, const ExtendedAlgebraicFunction&);
template double max_abs_coeff_difference(const AlgebraicFunction&, const AlgebraicFunction&);
template double max_abs_coeff_difference(const ExtendedAlgebraicFunction&, const ExtendedAlgebraicFunction&);

}  // namespace gupsu2
