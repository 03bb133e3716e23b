#pragma once

// Numerical ground truth for E[g(X) X^n]: Gauss-Hermite quadrature and a
// seeded Monte Carlo estimator.

#include <cstdint>
#include <functional>
#include <vector>

#include "gstein/gaussian_law.hpp"

namespace gstein {

using RealFunction = std::function<double(double)>;

/// Gauss-Hermite rule for the physicists' weight exp(-t^2): nodes ascending,
/// symmetric about 0, weights positive and summing to sqrt(pi).
struct QuadratureRule {
  unsigned order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

constexpr unsigned kMaxQuadratureOrder = 256;

/// Nodes by Newton iteration on the orthonormal Hermite three-term
/// recurrence from asymptotic initial guesses. Throws std::invalid_argument
/// unless 1 <= order <= 256.
QuadratureRule gauss_hermite_rule(unsigned order);

/// (1/sqrt(pi)) sum_i w_i g(x_i) x_i^n with x_i = mu + sqrt(2 s2) t_i. Mirror
/// nodes are summed in pairs so odd integrands cancel exactly at mu = 0.
/// Throws std::domain_error if the integrand is not finite at a node.
double quadrature_expectation(const QuadratureRule& rule, const RealFunction& g, unsigned n,
                              const GaussianLaw& law);
double quadrature_expectation(const RealFunction& g, unsigned n, const GaussianLaw& law,
                              unsigned order = 64);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Sample mean of g(X_i) X_i^n over X_i = mu + sigma Z_i with Z_i drawn from
/// NormalStream(seed); std_error is the sample standard deviation over
/// sqrt(samples). Bit-reproducible for a fixed (seed, samples). Throws
/// std::invalid_argument for samples < 2, std::domain_error on a non-finite
/// sample.
McEstimate monte_carlo_expectation(const RealFunction& g, unsigned n, const GaussianLaw& law,
                                   std::uint64_t samples, std::uint64_t seed);

}  // namespace gstein
