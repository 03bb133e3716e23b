#pragma once

// Test functions g: exact rational polynomials and a small analytic catalog
// (scaled exponentials, sines and cosines) that is closed under
// differentiation and has closed-form Gaussian expectations.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gstein/exact.hpp"
#include "gstein/gaussian_law.hpp"

namespace gstein {

class RationalPolynomial {
 public:
  /// The zero polynomial.
  RationalPolynomial() = default;

  /// coeffs[i] multiplies x^i; trailing zeros are stripped.
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(unsigned power, const Rational& c = 1);

  /// Comma-separated rational coefficients, lowest power first, e.g. "1,0,-2/3".
  static RationalPolynomial parse(std::string_view csv);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;

  Rational coeff(unsigned power) const;

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  RationalPolynomial derivative(unsigned order = 1) const;

  /// p(x) * x^n
  RationalPolynomial times_power(unsigned n) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Inverse of parse; "0" for the zero polynomial.
  std::string to_csv() const;

 private:
  std::vector<Rational> coeffs_;
  std::vector<double> approx_;  // coeffs_ rounded, for fast evaluation
};

RationalPolynomial poly_derivative(const RationalPolynomial& p, unsigned order);

struct ExpKernel {
  double rate;
  friend bool operator==(const ExpKernel&, const ExpKernel&) = default;
};
struct SinKernel {
  double rate;
  friend bool operator==(const SinKernel&, const SinKernel&) = default;
};
struct CosKernel {
  double rate;
  friend bool operator==(const CosKernel&, const CosKernel&) = default;
};

/// scale * kernel(x), kernel one of p(x), exp(a x), sin(a x), cos(a x).
/// Polynomials always carry scale 1.
class AnalyticFunction {
 public:
  using Kernel = std::variant<RationalPolynomial, ExpKernel, SinKernel, CosKernel>;

  static AnalyticFunction polynomial(RationalPolynomial p);
  static AnalyticFunction exp(double rate, double scale = 1.0);
  static AnalyticFunction sin(double rate, double scale = 1.0);
  static AnalyticFunction cos(double rate, double scale = 1.0);

  /// "poly:<csv>", "exp:<a>", "sin:<a>" or "cos:<a>".
  static AnalyticFunction parse(std::string_view spec);

  const Kernel& kernel() const { return kernel_; }
  double scale() const { return scale_; }

  /// Non-null iff the function is a polynomial.
  const RationalPolynomial* as_polynomial() const { return std::get_if<RationalPolynomial>(&kernel_); }

  double operator()(double x) const;

  /// Closed-form derivative within the catalog, taken one order at a time so
  /// that derivative(f, j + k) == derivative(derivative(f, j), k) bit for bit.
  AnalyticFunction derivative(unsigned order = 1) const;

  std::string describe() const;

  friend bool operator==(const AnalyticFunction&, const AnalyticFunction&) = default;

 private:
  AnalyticFunction(Kernel kernel, double scale);
  Kernel kernel_;
  double scale_ = 1.0;
};

AnalyticFunction derivative(const AnalyticFunction& f, unsigned order);

/// E[p(X)] from the raw moments of the Gaussian law.
Rational exact_expectation(const RationalPolynomial& p, const ExactGaussianLaw& law);

/// Closed-form E[f(X)]:
///   E[exp(aX)] = exp(a mu + a^2 s2 / 2)
///   E[sin(aX)] = exp(-a^2 s2 / 2) sin(a mu)
///   E[cos(aX)] = exp(-a^2 s2 / 2) cos(a mu)
/// Polynomials are evaluated exactly and rounded once.
double exact_expectation(const AnalyticFunction& f, const GaussianLaw& law);

/// E[p(X) X^n] by expanding q = p x^n in raw moments
/// E[X^j] = sum_i C(j,i) mu^(j-i) (i-1)!! s2^(i/2) (i even). Independent of
/// the Stein reduction engine.
Rational poly_expectation_product(const RationalPolynomial& p, unsigned n,
                                  const ExactGaussianLaw& law);

/// P_n with d^n/du^n exp(mu u + s2 u^2 / 2) = P_n(u) exp(mu u + s2 u^2 / 2),
/// built by symbolic differentiation: P_0 = 1, P_{k+1} = P_k' + (mu + s2 u) P_k.
RationalPolynomial mgf_derivative_factor(unsigned n, const Rational& mu, const Rational& sigma2);

/// E[X^n exp(aX)] as the n-th derivative of the moment-generating function at a.
double mgf_product_oracle(unsigned n, double a, const GaussianLaw& law);

/// E[f^(l)(X)] for l = 0 .. max_order.
std::map<unsigned, double> derivative_averages(const AnalyticFunction& f, const GaussianLaw& law,
                                               unsigned max_order);
std::map<unsigned, Rational> derivative_averages(const RationalPolynomial& p,
                                                 const ExactGaussianLaw& law, unsigned max_order);

/// E[f(X) X^n] through the extended Stein reduction fed with closed-form
/// derivative averages. Uses the zero-mean reduction when mu == 0.
double stein_product_expectation(const AnalyticFunction& f, unsigned n, const GaussianLaw& law);
Rational stein_product_expectation(const RationalPolynomial& p, unsigned n,
                                   const ExactGaussianLaw& law);

}  // namespace gstein
