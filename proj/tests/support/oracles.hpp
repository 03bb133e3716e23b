#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the gstein algorithms; only the big-number typedefs are shared.

#include <cmath>
#include <cstdint>
#include <vector>

#include "gstein/exact.hpp"

namespace oracle_ref {

using gstein::Integer;
using gstein::Rational;

/// Pascal's triangle up to row max_n.
inline std::vector<std::vector<Integer>> pascal(unsigned max_n) {
  std::vector<std::vector<Integer>> t(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    t[n].assign(n + 1, Integer(1));
    for (unsigned k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

/// Dense coefficients (index = power) of He_n from He_{n+1} = x He_n - n He_{n-1}.
inline std::vector<std::vector<Integer>> hermite_he(unsigned max_n) {
  std::vector<std::vector<Integer>> he(max_n + 1);
  he[0] = {Integer(1)};
  if (max_n >= 1) he[1] = {Integer(0), Integer(1)};
  for (unsigned n = 1; n < max_n; ++n) {
    std::vector<Integer> next(n + 2, Integer(0));
    for (unsigned p = 0; p <= n; ++p) next[p + 1] += he[n][p];
    for (unsigned p = 0; p + 1 <= n; ++p) next[p] -= Integer(n) * he[n - 1][p];
    he[n + 1] = std::move(next);
  }
  return he;
}

/// |coefficient of x^{n-2k}| in He_n.
inline Integer hermite_abs(const std::vector<std::vector<Integer>>& he, unsigned n, unsigned k) {
  if (2 * k > n) return 0;
  return abs(he[n][n - 2 * k]);
}

inline Integer falling(Integer x, unsigned n) {
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x - i;
  return r;
}

/// Coefficients of (2m)^{(n)} in the basis m^{(l)}, via Newton forward
/// differences: coefficient l equals Delta^l f(0) / l!.
inline std::vector<Integer> falling_basis_row(unsigned n) {
  std::vector<Integer> values(n + 1);
  for (unsigned m = 0; m <= n; ++m) values[m] = falling(Integer(2 * m), n);
  std::vector<Integer> out(n + 1);
  Integer lfact = 1;
  for (unsigned l = 0; l <= n; ++l) {
    if (l > 0) lfact *= l;
    out[l] = values[0] / lfact;
    for (unsigned i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return out;
}

/// S(n,k) by the inclusion-exclusion formula.
inline Integer stirling2_explicit(unsigned n, unsigned k) {
  const auto bin = pascal(k);
  Integer sum = 0;
  for (unsigned j = 0; j <= k; ++j) {
    Integer term = bin[k][j];
    Integer p = 1;
    for (unsigned i = 0; i < n; ++i) p *= Integer(k - j);
    term *= p;
    sum += (j % 2 == 0) ? term : Integer(-term);
  }
  Integer kf = 1;
  for (unsigned i = 2; i <= k; ++i) kf *= i;
  return sum / kf;
}

/// Signed s(n,k): coefficient of x^k in x(x-1)...(x-n+1).
inline std::vector<Integer> stirling1_row(unsigned n) {
  std::vector<Integer> poly{Integer(1)};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Integer> next(poly.size() + 1, Integer(0));
    for (std::size_t p = 0; p < poly.size(); ++p) {
      next[p + 1] += poly[p];
      next[p] -= Integer(i) * poly[p];
    }
    poly = std::move(next);
  }
  return poly;
}

/// E[Z^j] for Z ~ N(0, s2), exact.
inline Rational central(unsigned j, const Rational& s2) {
  if (j % 2) return 0;
  Rational r = 1;
  for (unsigned i = 1; i < j; i += 2) r *= Rational(i) * s2;
  return r;
}

/// E[X^n] for X ~ N(mu, s2), exact, by expanding (mu + Z)^n.
inline Rational raw(unsigned n, const Rational& mu, const Rational& s2) {
  const auto bin = pascal(n);
  Rational sum = 0;
  Rational mu_pow = 1;
  // walk j from n down so mu_pow = mu^{n-j}
  for (unsigned i = 0; i <= n; ++i) {
    const unsigned j = n - i;
    sum += Rational(bin[n][j]) * mu_pow * central(j, s2);
    mu_pow *= mu;
  }
  return sum;
}

/// E[p(X) X^n] from the raw moments of X.
inline Rational poly_product(const std::vector<Rational>& p, unsigned n, const Rational& mu,
                             const Rational& s2) {
  Rational sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) sum += p[i] * raw(static_cast<unsigned>(i) + n, mu, s2);
  return sum;
}

/// E[X^n e^{aX}] by exponential tilting: e^{a mu + a^2 s2 / 2} times the n-th
/// raw moment of N(mu + a s2, s2), in long double.
inline double exp_product_tilt(unsigned n, double a, double mu, double s2) {
  const long double m = mu + a * s2;
  long double moment = 0.0L;
  long double bin = 1.0L;
  for (unsigned j = 0; j <= n; ++j) {
    if (j > 0) bin = bin * (n - j + 1) / j;
    if (j % 2) continue;
    long double c = 1.0L;
    for (unsigned i = 1; i < j; i += 2) c *= i * static_cast<long double>(s2);
    moment += bin * std::pow(m, static_cast<long double>(n - j)) * c;
  }
  return static_cast<double>(moment * std::exp(static_cast<long double>(a * mu + a * a * s2 / 2)));
}

inline double rel_err(double got, double want) {
  const double scale = std::max(std::abs(got), std::abs(want));
  return scale == 0.0 ? 0.0 : std::abs(got - want) / scale;
}

}  // namespace oracle_ref
