#include "gstein/ibd.hpp"

#include <cmath>
#include <stdexcept>

#include "gstein/combinatorics.hpp"

namespace gstein {

void AveragedShiftConfig::validate() const {
  if (max_terms == 0) throw std::invalid_argument("max_terms must be >= 1");
  if (!(rel_tolerance > 0.0)) throw std::invalid_argument("rel_tolerance must be > 0");
  if (consecutive_small == 0) throw std::invalid_argument("consecutive_small must be >= 1");
}

namespace {

double falling(double x, unsigned n) {
  double r = 1.0;
  for (unsigned i = 0; i < n; ++i) r *= x - i;
  return r;
}

SeriesEvaluation exact_polynomial_series(const RationalPolynomial& p, unsigned n,
                                         const GaussianLaw& law, const AveragedShiftConfig& cfg) {
  const ExactGaussianLaw exact(law);
  SeriesEvaluation out;
  if (p.is_zero()) {
    out.terms_used = 1;
    out.converged = true;
    out.terms = {0.0};
    out.partial_sums = {0.0};
    return out;
  }
  const unsigned last = (*p.degree() + n + 1) / 2;
  const unsigned stop = std::min(last + 1, cfg.max_terms);

  // Piece j of x^n = sum_j C(n,j) mu^(n-j) (x - mu)^j; only j = n at mu = 0.
  std::vector<Rational> piece_weight(n + 1);
  for (unsigned j = 0; j <= n; ++j)
    piece_weight[j] = Rational(binomial(n, j)) * ipow(exact.mu(), n - j);

  std::vector<Rational> deriv_at_mu;  // p^(r)(mu)
  RationalPolynomial d = p;
  for (unsigned r = 0; r <= *p.degree(); ++r) {
    deriv_at_mu.push_back(d(exact.mu()));
    d = d.derivative(1);
  }
  auto deriv = [&](long r) { return r < long(deriv_at_mu.size()) ? deriv_at_mu[r] : Rational(0); };

  Rational shift_weight = 1;  // s2^m / (2^m m!)
  Rational sum = 0;
  Rational term = 0;
  for (unsigned m = 0; m < stop; ++m) {
    if (m > 0) shift_weight *= exact.sigma2() / Rational(2 * m);
    term = 0;
    for (unsigned j = 0; j <= n && j <= 2 * m; ++j) {
      if (piece_weight[j] == 0) continue;
      term += piece_weight[j] * Rational(falling_factorial(Integer(2 * m), j)) * shift_weight *
              deriv(long(2 * m) - long(j));
    }
    sum += term;
    out.terms.push_back(to_double(term));
    out.partial_sums.push_back(to_double(sum));
  }
  out.value = to_double(sum);
  out.terms_used = stop;
  out.converged = stop == last + 1;
  out.last_term_magnitude = std::abs(to_double(term));
  return out;
}

SeriesEvaluation floating_series(const AnalyticFunction& f, unsigned n, const GaussianLaw& law,
                                 const AveragedShiftConfig& cfg) {
  const double mu = law.mu();
  const bool centred = law.zero_mean();

  std::vector<double> piece_weight(n + 1, 0.0);
  if (centred) {
    piece_weight[n] = 1.0;
  } else {
    for (unsigned j = 0; j <= n; ++j)
      piece_weight[j] = binomial(n, j).convert_to<double>() * ipow(mu, n - j);
  }

  std::vector<double> deriv_at_mu;  // f^(r)(mu), extended on demand
  AnalyticFunction d = f;
  auto deriv = [&](unsigned r) {
    while (deriv_at_mu.size() <= r) {
      deriv_at_mu.push_back(d(mu));
      d = d.derivative(1);
    }
    return deriv_at_mu[r];
  };

  // Below ceil(n/2) every term vanishes at mu = 0; those must not count
  // toward convergence.
  const unsigned first_live = centred ? (n + 1) / 2 : 0;

  SeriesEvaluation out;
  double shift_weight = 1.0;
  double sum = 0.0;
  unsigned small_run = 0;
  for (unsigned m = 0; m < cfg.max_terms; ++m) {
    if (m > 0) shift_weight *= law.sigma2() / (2.0 * m);
    double term = 0.0;
    for (unsigned j = 0; j <= n && j <= 2 * m; ++j) {
      if (piece_weight[j] == 0.0) continue;
      term += piece_weight[j] * falling(2.0 * m, j) * shift_weight * deriv(2 * m - j);
    }
    out.terms_used = m + 1;
    out.last_term_magnitude = std::abs(term);
    if (!std::isfinite(term) || !std::isfinite(sum + term)) {
      out.value = sum;
      out.converged = false;
      return out;
    }
    sum += term;
    out.terms.push_back(term);
    out.partial_sums.push_back(sum);
    if (m >= first_live) {
      small_run = (term == 0.0 || std::abs(term) < cfg.rel_tolerance * std::abs(sum)) ? small_run + 1 : 0;
      if (small_run >= cfg.consecutive_small) {
        out.value = sum;
        out.converged = true;
        return out;
      }
    }
  }
  out.value = sum;
  out.converged = false;
  return out;
}

}  // namespace

SeriesEvaluation averaged_shift_expectation(const AnalyticFunction& f, const GaussianLaw& law,
                                            const AveragedShiftConfig& cfg) {
  return ibd_product_expectation(f, 0, law, cfg);
}

SeriesEvaluation ibd_product_expectation(const AnalyticFunction& f, unsigned n,
                                         const GaussianLaw& law, const AveragedShiftConfig& cfg) {
  cfg.validate();
  if (const auto* p = f.as_polynomial()) return exact_polynomial_series(*p, n, law, cfg);
  return floating_series(f, n, law, cfg);
}

}  // namespace gstein
