#include <doctest.h>

#include <cmath>

#include "gstein/ibd.hpp"
#include "gstein/oracle.hpp"
#include "gstein/stein.hpp"
#include "support/oracles.hpp"

using namespace gstein;

TEST_CASE("config validation") {
  AveragedShiftConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.max_terms = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.rel_tolerance = 0.0;
  CHECK_THROWS_AS(averaged_shift_expectation(AnalyticFunction::exp(1), GaussianLaw::standard(), cfg),
                  std::invalid_argument);
  cfg = {};
  cfg.consecutive_small = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("averaged shift on polynomials") {
  const auto one = averaged_shift_expectation(AnalyticFunction::parse("poly:1"), GaussianLaw::standard());
  CHECK(one.value == 1.0);
  CHECK(one.terms_used == 1);
  CHECK(one.converged);

  const auto sq = averaged_shift_expectation(AnalyticFunction::parse("poly:0,0,1"), GaussianLaw(0.0, 0.3));
  CHECK(sq.value == 0.3);
  CHECK(sq.terms_used == 2);
  CHECK(sq.terms == std::vector<double>{0.0, 0.3});

  const auto zero = averaged_shift_expectation(AnalyticFunction::parse("poly:0"), GaussianLaw::standard());
  CHECK(zero.value == 0.0);
  CHECK(zero.converged);

  // terminates at m = ceil(deg/2) and matches the exact value
  for (unsigned deg = 0; deg <= 12; ++deg) {
    std::vector<Rational> c(deg + 1);
    for (unsigned i = 0; i <= deg; ++i) c[i] = Rational(int(i % 3) - 1, int(i) + 2);
    c[deg] = 1;
    for (const auto& [mu, s2] : std::vector<std::pair<Rational, Rational>>{{0, 1}, {Rational(-1, 4), Rational(9, 4)}}) {
      const ExactGaussianLaw law(mu, s2);
      const auto r = averaged_shift_expectation(AnalyticFunction::polynomial(RationalPolynomial(c)), law.to_real());
      CHECK(r.converged);
      CHECK(r.terms_used == (deg + 1) / 2 + 1);
      CHECK(r.value == to_double(oracle_ref::poly_product(c, 0, mu, s2)));
      CHECK(r.partial_sums.size() == r.terms_used);
    }
  }
}

TEST_CASE("averaged shift on Exp(1/2) reaches e^{1/8}") {
  AveragedShiftConfig cfg;
  cfg.max_terms = 30;
  const auto r = averaged_shift_expectation(AnalyticFunction::exp(0.5), GaussianLaw::standard(), cfg);
  CHECK(r.converged);
  CHECK(r.terms_used <= 30);
  CHECK(oracle_ref::rel_err(r.value, std::exp(0.125)) < 1e-12);
  for (std::size_t i = 1; i < r.terms.size(); ++i) CHECK(std::abs(r.terms[i]) < std::abs(r.terms[i - 1]));
}

TEST_CASE("ibd product expectation examples") {
  const auto law = GaussianLaw::standard();
  CHECK(ibd_product_expectation(AnalyticFunction::parse("poly:1"), 2, law).value == 1.0);
  CHECK(ibd_product_expectation(AnalyticFunction::parse("poly:1"), 4, law).value == 3.0);
  const auto r = ibd_product_expectation(AnalyticFunction::exp(1.0), 2, law);
  CHECK(r.converged);
  CHECK(oracle_ref::rel_err(r.value, 2 * std::exp(0.5)) < 1e-10);
}

TEST_CASE("vanishing low terms at mu = 0") {
  for (unsigned n = 0; n <= 9; ++n)
    for (const auto& f : {AnalyticFunction::exp(0.7), AnalyticFunction::cos(1.2), AnalyticFunction::sin(-0.4)}) {
      const auto r = ibd_product_expectation(f, n, GaussianLaw(0.0, 0.8));
      for (unsigned m = 0; m < (n + 1) / 2 && m < r.terms.size(); ++m) CHECK(r.terms[m] == 0.0);
    }
}

TEST_CASE("term magnitudes eventually decrease for mild exponentials") {
  for (double a : {0.5, -1.0, 1.2})
    for (double s2 : {0.25, 1.0}) {
      REQUIRE(a * a * s2 / 2 < 1.0);
      const auto r = averaged_shift_expectation(AnalyticFunction::exp(a), GaussianLaw(0.0, s2));
      std::size_t start = 1;
      while (start < r.terms.size() && std::abs(r.terms[start]) >= std::abs(r.terms[start - 1])) ++start;
      for (std::size_t i = start; i < r.terms.size(); ++i)
        if (r.terms[i] != 0.0) CHECK(std::abs(r.terms[i]) < std::abs(r.terms[i - 1]));
    }
}

TEST_CASE("series agrees with the closed-form reduction") {
  const std::vector<AnalyticFunction> catalog{AnalyticFunction::exp(1.0), AnalyticFunction::exp(-0.5),
                                              AnalyticFunction::sin(1.0), AnalyticFunction::cos(2.0),
                                              AnalyticFunction::parse("poly:1,-2,0,1/3")};
  for (const auto& f : catalog)
    for (double s2 : {0.25, 1.0})
      for (double mu : {0.0, 0.5})
        for (unsigned n = 0; n <= 8; ++n) {
          const GaussianLaw law(mu, s2);
          const auto r = ibd_product_expectation(f, n, law);
          REQUIRE(r.converged);
          const double reduced = stein_product_expectation(f, n, law);
          CAPTURE(f.describe());
          CAPTURE(n);
          // E|g(X) X^n| guards the one grid point where the value cancels to 0
          const double magnitude =
              quadrature_expectation([&](double x) { return std::abs(f(x) * std::pow(x, n)); }, 0, law);
          CHECK(std::abs(r.value - reduced) <= 1e-9 * std::max(std::abs(reduced), magnitude));
        }
}

TEST_CASE("non-convergence is reported") {
  AveragedShiftConfig cfg;
  cfg.max_terms = 4;
  const auto r = ibd_product_expectation(AnalyticFunction::exp(3.0), 6, GaussianLaw(0.0, 4.0), cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.terms_used == 4);

  const auto capped = averaged_shift_expectation(AnalyticFunction::parse("poly:0,0,0,0,0,0,1"),
                                                 GaussianLaw::standard(), cfg);
  CHECK(capped.converged);
  cfg.max_terms = 3;
  const auto cut = averaged_shift_expectation(AnalyticFunction::parse("poly:0,0,0,0,0,0,1"),
                                              GaussianLaw::standard(), cfg);
  CHECK_FALSE(cut.converged);
  CHECK(cut.terms_used == 3);

  // overflow aborts instead of returning inf
  cfg = {};
  const auto big = averaged_shift_expectation(AnalyticFunction::exp(40.0), GaussianLaw(0.0, 4.0), cfg);
  CHECK_FALSE(big.converged);
  CHECK(std::isfinite(big.value));
}
