#pragma once

// Integration by differentiation: Gaussian expectations as truncated actions
// of the averaged shift operator exp((s2/2) d^2/dx^2) at x = mu,
//
//   E[f(X)] = sum_m s2^m / (2^m m!) f^(2m)(mu).
//
// For E[f(X) X^n] at mu = 0 the derivatives of f(x) x^n at 0 collapse to
// (2m)!/(2m-n)! f^(2m-n)(0), so term m is
//
//   (2m)^(n falling) s2^m / (2^m m!) f^(2m-n)(0),   zero for m < n/2.
//
// For mu != 0, x^n is expanded as sum_j C(n,j) mu^(n-j) (x - mu)^j and every
// piece is the same series centred at mu.

#include <vector>

#include "gstein/function_model.hpp"
#include "gstein/gaussian_law.hpp"

namespace gstein {

struct AveragedShiftConfig {
  unsigned max_terms = 200;
  double rel_tolerance = 1e-13;
  /// Converged once this many successive terms satisfy |term| < tol |sum|.
  unsigned consecutive_small = 3;

  /// Throws std::invalid_argument on max_terms == 0, tolerance <= 0 or
  /// consecutive_small == 0.
  void validate() const;
};

struct SeriesEvaluation {
  double value = 0.0;
  unsigned terms_used = 0;
  bool converged = false;
  double last_term_magnitude = 0.0;
  std::vector<double> terms;
  std::vector<double> partial_sums;
};

/// Polynomials are summed in exact rational arithmetic and stop at index
/// m = ceil(degree / 2), after which every derivative f^(2m) vanishes. Other
/// catalog functions use the convergence rule in the config; a non-finite
/// term ends the evaluation with converged == false. Never silently
/// truncated: running out of max_terms also reports converged == false.
SeriesEvaluation averaged_shift_expectation(const AnalyticFunction& f, const GaussianLaw& law,
                                            const AveragedShiftConfig& cfg = {});

/// E[f(X) X^n] by the same series; polynomial f stops at m = ceil((deg + n) / 2).
SeriesEvaluation ibd_product_expectation(const AnalyticFunction& f, unsigned n,
                                         const GaussianLaw& law,
                                         const AveragedShiftConfig& cfg = {});

}  // namespace gstein
