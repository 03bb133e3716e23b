#include "gstein/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gstein/exact.hpp"
#include "gstein/random.hpp"

namespace gstein {

namespace {

struct HermiteEval {
  double value;       // psi_N(z)
  double derivative;  // sqrt(2N) psi_{N-1}(z), the polynomial derivative times e^{-z^2/2}
};

// Hermite functions psi_j = p_j e^{-z^2/2} with p_j orthonormal:
// psi_0 = pi^{-1/4} e^{-z^2/2}, psi_{-1} = 0,
// psi_{j+1} = z sqrt(2/(j+1)) psi_j - sqrt(j/(j+1)) psi_{j-1}.
// Carrying the Gaussian factor keeps the recurrence bounded; the bare
// polynomials overflow near the outer nodes once N passes about 200.
HermiteEval eval_orthonormal(unsigned order, double z) {
  double p_prev = 0.0;
  double p = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * z * z);
  for (unsigned j = 0; j < order; ++j) {
    const double next = z * std::sqrt(2.0 / (j + 1)) * p - std::sqrt(double(j) / (j + 1)) * p_prev;
    p_prev = p;
    p = next;
  }
  return {p, std::sqrt(2.0 * order) * p_prev};
}

}  // namespace

QuadratureRule gauss_hermite_rule(unsigned order) {
  if (order < 1 || order > kMaxQuadratureOrder)
    throw std::invalid_argument("Gauss-Hermite order must be in [1, " +
                                std::to_string(kMaxQuadratureOrder) + "], got " +
                                std::to_string(order));
  const unsigned n = order;
  QuadratureRule rule{n, std::vector<double>(n), std::vector<double>(n)};

  // Number of roots of H_n below x, from the Sturm sequence of the Jacobi
  // matrix (zero diagonal, off-diagonal sqrt(j/2)).
  auto roots_below = [n](double x) {
    unsigned count = 0;
    double q = -x;
    for (unsigned j = 1;; ++j) {
      if (q == 0.0) q = -1e-300;
      if (q < 0.0) ++count;
      if (j == n) break;
      q = -x - 0.5 * j / q;
    }
    return count;
  };

  // Each positive root is bracketed by bisection on the Sturm count, then
  // polished by Newton on the three-term recurrence.
  const double upper = std::sqrt(2.0 * n + 1.0) + 1.0;
  for (unsigned i = 0; i < (n + 1) / 2; ++i) {
    const unsigned rank = n - 1 - i;  // ascending index of the root
    double z = 0.0;
    if (!(n % 2 == 1 && i == n / 2)) {
      double lo = 0.0;
      double hi = upper;
      for (int iter = 0; iter < 200 && hi - lo > 1e-10 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (roots_below(mid) > rank ? hi : lo) = mid;
      }
      z = 0.5 * (lo + hi);
      for (int iter = 0; iter < 20; ++iter) {
        const HermiteEval e = eval_orthonormal(n, z);
        const double step = e.value / e.derivative;
        z -= step;
        if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(z))) break;
      }
    }
    const HermiteEval e = eval_orthonormal(n, z);
    // w = 2 / p_N'(z)^2 for the orthonormal polynomial; the Gaussian factor
    // carried by the Hermite functions is removed with exp(-z^2).
    const double w = 2.0 * std::exp(-z * z) / (e.derivative * e.derivative);
    rule.nodes[n - 1 - i] = z;
    rule.nodes[i] = -z;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  return rule;
}

double quadrature_expectation(const QuadratureRule& rule, const RealFunction& g, unsigned n,
                              const GaussianLaw& law) {
  const double scale = std::sqrt(2.0 * law.sigma2());
  auto integrand = [&](unsigned i) {
    const double x = law.mu() + scale * rule.nodes[i];
    const double v = g(x) * ipow(x, n);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "integrand is not finite at quadrature node " << i << " (x = " << x << ")";
      throw std::domain_error(msg.str());
    }
    return v;
  };
  const unsigned count = rule.order;
  double sum = 0.0;
  for (unsigned i = 0; i < count / 2; ++i) {
    const unsigned j = count - 1 - i;
    sum += rule.weights[i] * (integrand(i) + integrand(j));
  }
  if (count % 2 == 1) sum += rule.weights[count / 2] * integrand(count / 2);
  return sum / std::sqrt(std::numbers::pi);
}

double quadrature_expectation(const RealFunction& g, unsigned n, const GaussianLaw& law,
                              unsigned order) {
  return quadrature_expectation(gauss_hermite_rule(order), g, n, law);
}

McEstimate monte_carlo_expectation(const RealFunction& g, unsigned n, const GaussianLaw& law,
                                   std::uint64_t samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("Monte Carlo needs at least 2 samples");
  NormalStream normals(seed);
  const double sigma = law.sigma();
  // Welford running mean and sum of squared deviations.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t k = 1; k <= samples; ++k) {
    const double x = law.mu() + sigma * normals.next();
    const double v = g(x) * ipow(x, n);
    if (!std::isfinite(v))
      throw std::domain_error("non-finite Monte Carlo sample at draw " + std::to_string(k));
    const double delta = v - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (v - mean);
  }
  const double variance = m2 / static_cast<double>(samples - 1);
  return {mean, std::sqrt(variance / static_cast<double>(samples)), samples, seed};
}

}  // namespace gstein
