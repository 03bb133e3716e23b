#pragma once

// Symbolic reduction of E[g(X) X^n] for Gaussian X into weighted averages of
// derivatives of g:
//
//   zero mean:    E[g X^n] = sum_k H(n,k) s2^(n-k) E[g^(n-2k)]
//   general mean: E[g X^n] = sum_l C(n,l) mu^(n-l) sum_k H(l,k) s2^(l-k) E[g^(l-2k)]
//
// The closed forms are produced directly; recursive_stein_rewriter reaches the
// same term lists by applying E[h(X)(X - mu)] = s2 E[h'(X)] one factor at a
// time, and serves as an independent symbolic oracle.
//
// The caller is responsible for g being smooth enough and every average
// involved existing.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "gstein/exact.hpp"
#include "gstein/gaussian_law.hpp"

namespace gstein {

enum class LawKind { zero_mean, general_mean };

const char* to_string(LawKind kind);

/// coeff * mu^mu_power * s2^sigma2_power * E[g^(derivative_order)(X)]
struct ReductionTerm {
  unsigned derivative_order = 0;
  Integer coeff;
  unsigned mu_power = 0;
  unsigned sigma2_power = 0;

  friend bool operator==(const ReductionTerm&, const ReductionTerm&) = default;
};

struct Reduction {
  unsigned n = 0;
  LawKind law_kind = LawKind::zero_mean;
  /// Canonical: sorted by (derivative_order, mu_power, sigma2_power), merged,
  /// no zero coefficients.
  std::vector<ReductionTerm> terms;

  friend bool operator==(const Reduction&, const Reduction&) = default;
};

/// Sorts and merges terms with identical (derivative_order, mu_power,
/// sigma2_power); drops zero coefficients.
std::vector<ReductionTerm> canonicalize(std::vector<ReductionTerm> terms);

Reduction reduce_zero_mean(unsigned n);

/// The raw double sum over (l, k) before merging, in (l, k) order.
std::vector<ReductionTerm> general_mean_addends(unsigned n);

Reduction reduce_general_mean(unsigned n);

Reduction reduce(unsigned n, LawKind kind);

/// coeff * mu^mu_power * s2^sigma2_power
struct Monomial {
  Integer coeff;
  unsigned mu_power = 0;
  unsigned sigma2_power = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

using MomentPolynomial = std::vector<Monomial>;

/// E[(X - mu)^n]: zero for odd n, (n-1)!! s2^(n/2) for even n.
Monomial central_moment(unsigned n);

/// E[X^n] as a polynomial in mu and s2, obtained from the general-mean
/// reduction with g = 1.
MomentPolynomial raw_moment(unsigned n);

Rational evaluate(const MomentPolynomial& poly, const ExactGaussianLaw& law);
double evaluate(const MomentPolynomial& poly, const GaussianLaw& law);

struct ReductionStats {
  std::size_t final_term_count = 0;
  std::size_t peak_intermediate_term_count = 0;
  std::size_t rewrite_steps = 0;

  friend bool operator==(const ReductionStats&, const ReductionStats&) = default;
};

struct RewriteResult {
  Reduction reduction;
  ReductionStats stats;
};

/// Largest n accepted by the recursive rewriter; the unmerged expansion grows
/// exponentially (Fibonacci-like for zero mean, ~2.414^n otherwise).
unsigned max_rewrite_order(LawKind kind);

/// Expands E[g X^n] by repeated classical Stein steps with the product rule,
/// keeping every intermediate addend separate, then merges. Throws
/// std::invalid_argument when n > max_rewrite_order(kind).
RewriteResult rewrite_with_stats(unsigned n, LawKind kind);

Reduction recursive_stein_rewriter(unsigned n, LawKind kind);

enum class ReductionMethod { closed_form, recursive };

const char* to_string(ReductionMethod method);

/// Closed form always reports rewrite_steps = 0 and peak = final.
ReductionStats reduction_stats(unsigned n, ReductionMethod method,
                               LawKind kind = LawKind::zero_mean);

class MissingAverageError : public std::out_of_range {
 public:
  explicit MissingAverageError(unsigned order);
  unsigned order() const { return order_; }

 private:
  unsigned order_;
};

/// sum coeff * mu^a * s2^b * averages[order] in floating point. Throws
/// MissingAverageError for an absent order, std::domain_error for a
/// non-finite average, std::invalid_argument for a zero-mean reduction under
/// a law with mu != 0.
double evaluate_reduction(const Reduction& reduction, const GaussianLaw& law,
                          const std::map<unsigned, double>& derivative_averages);

/// Exact counterpart of evaluate_reduction.
Rational evaluate_reduction(const Reduction& reduction, const ExactGaussianLaw& law,
                            const std::map<unsigned, Rational>& derivative_averages);

}  // namespace gstein
