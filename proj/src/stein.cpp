#include "gstein/stein.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <tuple>

#include "gstein/combinatorics.hpp"

namespace gstein {

const char* to_string(LawKind kind) {
  return kind == LawKind::zero_mean ? "zero_mean" : "general_mean";
}

const char* to_string(ReductionMethod method) {
  return method == ReductionMethod::closed_form ? "closed_form" : "recursive";
}

std::vector<ReductionTerm> canonicalize(std::vector<ReductionTerm> terms) {
  auto key = [](const ReductionTerm& t) {
    return std::tie(t.derivative_order, t.mu_power, t.sigma2_power);
  };
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const ReductionTerm& a, const ReductionTerm& b) { return key(a) < key(b); });
  std::vector<ReductionTerm> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && key(merged.back()) == key(t))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const ReductionTerm& t) { return t.coeff == 0; });
  return merged;
}

Reduction reduce_zero_mean(unsigned n) {
  Reduction red{n, LawKind::zero_mean, {}};
  red.terms.reserve(n / 2 + 1);
  // Ascending derivative order means descending k.
  for (unsigned k = n / 2 + 1; k-- > 0;)
    red.terms.push_back({n - 2 * k, hermite_coeff(n, k), 0, n - k});
  return red;
}

std::vector<ReductionTerm> general_mean_addends(unsigned n) {
  std::vector<ReductionTerm> addends;
  for (unsigned l = 0; l <= n; ++l) {
    Integer outer = binomial(n, l);
    for (unsigned k = 0; 2 * k <= l; ++k)
      addends.push_back({l - 2 * k, outer * hermite_coeff(l, k), n - l, l - k});
  }
  return addends;
}

Reduction reduce_general_mean(unsigned n) {
  return {n, LawKind::general_mean, canonicalize(general_mean_addends(n))};
}

Reduction reduce(unsigned n, LawKind kind) {
  return kind == LawKind::zero_mean ? reduce_zero_mean(n) : reduce_general_mean(n);
}

// --- moments ----------------------------------------------------------------

Monomial central_moment(unsigned n) {
  // g = 1: every derivative average vanishes except E[g] = 1.
  for (const auto& t : reduce_zero_mean(n).terms)
    if (t.derivative_order == 0) return {t.coeff, 0, t.sigma2_power};
  return {Integer(0), 0, 0};
}

MomentPolynomial raw_moment(unsigned n) {
  MomentPolynomial poly;
  for (const auto& t : reduce_general_mean(n).terms)
    if (t.derivative_order == 0) poly.push_back({t.coeff, t.mu_power, t.sigma2_power});
  return poly;
}

Rational evaluate(const MomentPolynomial& poly, const ExactGaussianLaw& law) {
  Rational sum = 0;
  for (const auto& m : poly)
    sum += Rational(m.coeff) * ipow(law.mu(), m.mu_power) * ipow(law.sigma2(), m.sigma2_power);
  return sum;
}

double evaluate(const MomentPolynomial& poly, const GaussianLaw& law) {
  double sum = 0.0;
  for (const auto& m : poly)
    sum += m.coeff.convert_to<double>() * ipow(law.mu(), m.mu_power) *
           ipow(law.sigma2(), m.sigma2_power);
  return sum;
}

// --- recursive rewriter -----------------------------------------------------

namespace {

// coeff * mu^mu_power * s2^sigma2_power * E[g^(order)(X) * X^x_power]
struct PendingTerm {
  std::uint64_t coeff;
  std::uint16_t order;
  std::uint16_t x_power;
  std::uint16_t mu_power;
  std::uint16_t sigma2_power;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("recursive Stein rewriter: coefficient overflow");
  return out;
}

}  // namespace

unsigned max_rewrite_order(LawKind kind) { return kind == LawKind::zero_mean ? 32 : 16; }

RewriteResult rewrite_with_stats(unsigned n, LawKind kind) {
  if (n > max_rewrite_order(kind))
    throw std::invalid_argument("recursive Stein rewriter supports n <= " +
                                std::to_string(max_rewrite_order(kind)) + " for " +
                                to_string(kind) + ", got " + std::to_string(n));
  const bool with_mean = kind == LawKind::general_mean;

  std::vector<PendingTerm> pending{{1, 0, static_cast<std::uint16_t>(n), 0, 0}};
  std::vector<PendingTerm> done;
  std::vector<PendingTerm> next;
  ReductionStats stats;
  stats.peak_intermediate_term_count = 1;

  // One pass applies a single Stein step to every addend still carrying a
  // power of X. With X = mu + Xc and E[h Xc] = s2 E[h'], peeling one factor of
  // X from h = g^(j) X^(p-1) gives
  //   E[g^(j) X^p] = mu E[g^(j) X^(p-1)] + s2 E[g^(j+1) X^(p-1)]
  //                  + (p-1) s2 E[g^(j) X^(p-2)].
  while (!pending.empty()) {
    next.clear();
    for (const auto& t : pending) {
      if (t.x_power == 0) {
        done.push_back(t);
        continue;
      }
      ++stats.rewrite_steps;
      const auto p = t.x_power;
      if (with_mean) {
        next.push_back({t.coeff, t.order, static_cast<std::uint16_t>(p - 1),
                        static_cast<std::uint16_t>(t.mu_power + 1), t.sigma2_power});
      }
      next.push_back({t.coeff, static_cast<std::uint16_t>(t.order + 1),
                      static_cast<std::uint16_t>(p - 1), t.mu_power,
                      static_cast<std::uint16_t>(t.sigma2_power + 1)});
      if (p >= 2) {
        next.push_back({checked_mul(t.coeff, p - 1u), t.order, static_cast<std::uint16_t>(p - 2),
                        t.mu_power, static_cast<std::uint16_t>(t.sigma2_power + 1)});
      }
    }
    pending.swap(next);
    stats.peak_intermediate_term_count =
        std::max(stats.peak_intermediate_term_count, done.size() + pending.size());
  }

  std::vector<ReductionTerm> terms;
  terms.reserve(done.size());
  for (const auto& t : done) terms.push_back({t.order, Integer(t.coeff), t.mu_power, t.sigma2_power});
  Reduction red{n, kind, canonicalize(std::move(terms))};
  stats.final_term_count = red.terms.size();
  return {std::move(red), stats};
}

Reduction recursive_stein_rewriter(unsigned n, LawKind kind) {
  return rewrite_with_stats(n, kind).reduction;
}

ReductionStats reduction_stats(unsigned n, ReductionMethod method, LawKind kind) {
  if (method == ReductionMethod::recursive) return rewrite_with_stats(n, kind).stats;
  auto count = reduce(n, kind).terms.size();
  return {count, count, 0};
}

// --- numeric evaluation -----------------------------------------------------

MissingAverageError::MissingAverageError(unsigned order)
    : std::out_of_range("missing average of derivative order " + std::to_string(order)),
      order_(order) {}

double evaluate_reduction(const Reduction& reduction, const GaussianLaw& law,
                          const std::map<unsigned, double>& derivative_averages) {
  if (reduction.law_kind == LawKind::zero_mean && !law.zero_mean())
    throw std::invalid_argument("zero-mean reduction evaluated under a law with mu != 0");
  double sum = 0.0;
  for (const auto& t : reduction.terms) {
    auto it = derivative_averages.find(t.derivative_order);
    if (it == derivative_averages.end()) throw MissingAverageError(t.derivative_order);
    if (!std::isfinite(it->second))
      throw std::domain_error("non-finite average for derivative order " +
                              std::to_string(t.derivative_order));
    sum += t.coeff.convert_to<double>() * ipow(law.mu(), t.mu_power) *
           ipow(law.sigma2(), t.sigma2_power) * it->second;
  }
  return sum;
}

Rational evaluate_reduction(const Reduction& reduction, const ExactGaussianLaw& law,
                            const std::map<unsigned, Rational>& derivative_averages) {
  if (reduction.law_kind == LawKind::zero_mean && law.mu() != 0)
    throw std::invalid_argument("zero-mean reduction evaluated under a law with mu != 0");
  Rational sum = 0;
  for (const auto& t : reduction.terms) {
    auto it = derivative_averages.find(t.derivative_order);
    if (it == derivative_averages.end()) throw MissingAverageError(t.derivative_order);
    sum += Rational(t.coeff) * ipow(law.mu(), t.mu_power) * ipow(law.sigma2(), t.sigma2_power) *
           it->second;
  }
  return sum;
}

}  // namespace gstein
