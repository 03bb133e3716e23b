#pragma once

#include <cmath>
#include <stdexcept>

#include "gstein/exact.hpp"

namespace gstein {

/// Parameters of X ~ N(mu, sigma2). Degenerate laws (sigma2 <= 0) are
/// rejected; sigma only ever enters through sigma2.
class GaussianLaw {
 public:
  GaussianLaw(double mu, double sigma2) : mu_(mu), sigma2_(sigma2) {
    if (!std::isfinite(mu)) throw std::invalid_argument("GaussianLaw: mean must be finite");
    if (!std::isfinite(sigma2) || !(sigma2 > 0.0))
      throw std::invalid_argument("GaussianLaw: variance must be finite and > 0");
  }

  static GaussianLaw standard() { return {0.0, 1.0}; }

  double mu() const { return mu_; }
  double sigma2() const { return sigma2_; }
  double sigma() const { return std::sqrt(sigma2_); }
  bool zero_mean() const { return mu_ == 0.0; }

 private:
  double mu_;
  double sigma2_;
};

/// The same law with exact rational parameters, for the exact evaluation paths.
class ExactGaussianLaw {
 public:
  ExactGaussianLaw(Rational mu, Rational sigma2) : mu_(std::move(mu)), sigma2_(std::move(sigma2)) {
    if (sigma2_ <= 0) throw std::invalid_argument("ExactGaussianLaw: variance must be > 0");
  }

  /// Exact image of a floating-point law (every finite double is a dyadic rational).
  explicit ExactGaussianLaw(const GaussianLaw& law)
      : ExactGaussianLaw(exact_from_double(law.mu()), exact_from_double(law.sigma2())) {}

  const Rational& mu() const { return mu_; }
  const Rational& sigma2() const { return sigma2_; }

  GaussianLaw to_real() const { return {to_double(mu_), to_double(sigma2_)}; }

 private:
  Rational mu_;
  Rational sigma2_;
};

}  // namespace gstein
