#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "gstein/function_model.hpp"
#include "gstein/oracle.hpp"
#include "gstein/random.hpp"
#include "support/oracles.hpp"

using namespace gstein;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

std::uint64_t bits(double x) {
  std::uint64_t b;
  std::memcpy(&b, &x, sizeof b);
  return b;
}

}  // namespace

TEST_CASE("gauss-hermite small rules") {
  const auto r1 = gauss_hermite_rule(1);
  CHECK(r1.nodes == std::vector<double>{0.0});
  CHECK(r1.weights[0] == doctest::Approx(kSqrtPi).epsilon(1e-15));

  const auto r2 = gauss_hermite_rule(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(kSqrtPi / 2).epsilon(1e-15));
  CHECK(r2.weights[1] == doctest::Approx(kSqrtPi / 2).epsilon(1e-15));

  CHECK_THROWS_AS(gauss_hermite_rule(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_hermite_rule(kMaxQuadratureOrder + 1), std::invalid_argument);
}

TEST_CASE("gauss-hermite structure") {
  for (unsigned n : {3u, 7u, 16u, 32u, 64u, 101u, 128u, 256u}) {
    const auto r = gauss_hermite_rule(n);
    REQUIRE(r.nodes.size() == n);
    double wsum = 0.0;
    for (unsigned i = 0; i < n; ++i) {
      CHECK(r.weights[i] > 0.0);
      CHECK(r.nodes[i] == -r.nodes[n - 1 - i]);
      if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
      wsum += r.weights[i];
    }
    CHECK(std::abs(wsum - kSqrtPi) < 1e-12);
  }
}

TEST_CASE("gauss-hermite degree exactness") {
  // int t^{2k} e^{-t^2} dt = sqrt(pi) (2k-1)!! / 2^k
  for (unsigned n : {1u, 2u, 5u, 10u, 32u, 64u}) {
    const auto r = gauss_hermite_rule(n);
    for (unsigned k = 0; 2 * k <= 2 * n - 1; ++k) {
      const double exact = to_double(oracle_ref::central(2 * k, Rational(1, 2)));
      long double sum = 0.0L;
      for (unsigned i = 0; i < n; ++i) sum += r.weights[i] * std::pow((long double)r.nodes[i], 2 * k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(oracle_ref::rel_err(double(sum / kSqrtPi), exact) < 1e-12);
    }
  }
}

TEST_CASE("quadrature expectation examples") {
  const auto one = [](double) { return 1.0; };
  const auto law = GaussianLaw::standard();
  CHECK(std::abs(quadrature_expectation(one, 2, law, 32) - 1.0) < 1e-13);
  CHECK(std::abs(quadrature_expectation(one, 4, law, 32) - 3.0) < 1e-12);
  CHECK(oracle_ref::rel_err(quadrature_expectation(AnalyticFunction::exp(1.0), 1, law, 64), std::exp(0.5)) < 1e-12);
  CHECK(quadrature_expectation(one, 7, law) == 0.0);

  // polynomials of degree <= 2N-1 under shifted laws
  const Rational mu(-3, 4), s2(5, 2);
  for (unsigned n = 0; n <= 20; ++n) {
    const double q = quadrature_expectation(one, n, ExactGaussianLaw(mu, s2).to_real(), 16);
    CHECK(oracle_ref::rel_err(q, to_double(oracle_ref::raw(n, mu, s2))) < 1e-12);
  }

  CHECK_THROWS_AS(quadrature_expectation([](double x) { return 1.0 / x; }, 0, law, 3), std::domain_error);
}

TEST_CASE("splitmix64 reference value") {
  SplitMix64 sm(0);
  CHECK(sm.next() == 0xe220a8397b1dcdafULL);
}

TEST_CASE("xoshiro256** basics") {
  Xoshiro256StarStar a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    CHECK(x == b());
    differs |= x != c();
  }
  CHECK(differs);
  Xoshiro256StarStar j(42);
  j.jump();
  CHECK(j() != Xoshiro256StarStar(42)());

  Xoshiro256StarStar u(7);
  double mean = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double v = u.uniform();
    REQUIRE(v >= 0.0);
    REQUIRE(v < 1.0);
    mean += v;
  }
  CHECK(std::abs(mean / 100000 - 0.5) < 0.005);
}

TEST_CASE("normal stream moments") {
  NormalStream s(2024);
  double m1 = 0.0, m2 = 0.0, m4 = 0.0;
  const int count = 400000;
  for (int i = 0; i < count; ++i) {
    const double z = s.next();
    m1 += z;
    m2 += z * z;
    m4 += z * z * z * z;
  }
  CHECK(std::abs(m1 / count) < 0.01);
  CHECK(std::abs(m2 / count - 1.0) < 0.01);
  CHECK(std::abs(m4 / count - 3.0) < 0.06);
}

TEST_CASE("monte carlo") {
  const auto one = [](double) { return 1.0; };
  const auto law = GaussianLaw::standard();
  const auto unit = monte_carlo_expectation(one, 0, law, 1000, 5);
  CHECK(unit.estimate == 1.0);
  CHECK(unit.std_error == 0.0);
  CHECK(unit.samples == 1000);
  CHECK(unit.seed == 5);

  const auto x2 = monte_carlo_expectation(one, 2, law, 1000000, 11);
  CHECK(std::abs(x2.estimate - 1.0) <= 4 * x2.std_error);
  const auto ex = monte_carlo_expectation(AnalyticFunction::exp(1.0), 1, law, 1000000, 11);
  CHECK(std::abs(ex.estimate - std::exp(0.5)) <= 4 * ex.std_error);

  const auto again = monte_carlo_expectation(AnalyticFunction::exp(1.0), 1, law, 1000000, 11);
  CHECK(bits(again.estimate) == bits(ex.estimate));
  CHECK(bits(again.std_error) == bits(ex.std_error));

  CHECK_THROWS_AS(monte_carlo_expectation(one, 0, law, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(monte_carlo_expectation([](double) { return NAN; }, 0, law, 10, 1), std::domain_error);
}
