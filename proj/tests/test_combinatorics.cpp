#include <doctest.h>

#include "gstein/combinatorics.hpp"
#include "support/oracles.hpp"

using namespace gstein;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  Integer p = 1;
  for (unsigned i = 2; i <= 25; ++i) p *= i;
  CHECK(factorial(25) == p);
  CHECK(factorial(25) > Integer(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("double factorial") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(9) == 945);
  CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
  // n! = n!! (n-1)!!
  for (int n = 1; n <= 40; ++n) CHECK(factorial(n) == double_factorial(n) * double_factorial(n - 1));
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(3, 5) == 0);
  CHECK(falling_factorial(6, 1) == 6);
  CHECK(falling_factorial(6, 3) == 120);
  CHECK(falling_factorial(17, 0) == 1);
  CHECK(falling_factorial(-2, 3) == -24);
}

TEST_CASE("binomial against Pascal") {
  const auto t = oracle_ref::pascal(40);
  for (unsigned n = 0; n <= 40; ++n) {
    CHECK(binomial(n, -1) == 0);
    CHECK(binomial(n, long(n) + 1) == 0);
    for (unsigned k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == t[n][k]);
  }
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(4, 2) == 6);
}

TEST_CASE("hermite coefficients") {
  CHECK(hermite_coeff(1, 0) == 1);
  CHECK(hermite_coeff(4, 2) == 3);
  CHECK(hermite_coeff(3, 2) == 0);
  CHECK(hermite_coeff(5, -1) == 0);
  for (unsigned n = 0; n <= 30; ++n) CHECK(hermite_coeff(n, 0) == 1);

  const auto he = oracle_ref::hermite_he(60);
  for (unsigned n = 0; n <= 60; ++n)
    for (unsigned k = 0; k <= n / 2 + 1; ++k) REQUIRE(hermite_coeff(n, k) == oracle_ref::hermite_abs(he, n, k));
}

TEST_CASE("hermite table from recurrence equals formula") {
  const auto rec = HermiteCoeffTable::from_recurrence(60);
  const auto formula = HermiteCoeffTable::from_formula(60);
  CHECK(rec == formula);
  CHECK(hermite_coeff_table_via_recurrence(60) == formula);

  const auto small = hermite_coeff_table_via_recurrence(0);
  CHECK(small.max_n() == 0);
  CHECK(small.at(0, 0) == 1);

  CHECK(rec.row(4) == std::vector<Integer>{1, 6, 3});
  CHECK(rec.at(4, 3) == 0);
  CHECK(rec.at(4, -1) == 0);
  CHECK_THROWS_AS(rec.at(61, 0), std::out_of_range);

  // odd boundary: H(2l+2, l+1) = H(2l+1, l) = (2l+1)!/(2^l l!)
  for (unsigned l = 0; l <= 20; ++l) {
    CHECK(rec.at(2 * l + 2, l + 1) == rec.at(2 * l + 1, l));
    CHECK(rec.at(2 * l + 1, l) * (Integer(1) << l) * factorial(l) == factorial(2 * l + 1));
  }
}

TEST_CASE("hermite polynomial") {
  CHECK(hermite_polynomial(0) == std::vector<Integer>{1});
  CHECK(hermite_polynomial(3) == std::vector<Integer>{0, -3, 0, 1});
  CHECK(hermite_polynomial(4) == std::vector<Integer>{3, 0, -6, 0, 1});
  const auto he = oracle_ref::hermite_he(25);
  for (unsigned n = 0; n <= 25; ++n) {
    const auto p = hermite_polynomial(n);
    REQUIRE(p == he[n]);
    for (unsigned i = 0; i < p.size(); ++i)
      if ((n - i) % 2) CHECK(p[i] == 0);
  }
}

TEST_CASE("stirling numbers") {
  CHECK(stirling_first(2, 1) == -1);
  CHECK(stirling_second(2, 1) == 1);
  CHECK(stirling_first(4, 2) == 11);
  CHECK(stirling_second(4, 2) == 7);
  CHECK(stirling_first(0, 0) == 1);
  CHECK(stirling_second(3, 5) == 0);
  const StirlingTables t(25);
  for (unsigned n = 0; n <= 25; ++n) {
    CHECK(t.first(n, n) == 1);
    CHECK(t.second(n, n) == 1);
    const auto s1 = oracle_ref::stirling1_row(n);
    for (unsigned k = 0; k <= n; ++k) {
      REQUIRE(t.first(n, k) == s1[k]);
      REQUIRE(t.second(n, k) == oracle_ref::stirling2_explicit(n, k));
    }
  }
}

TEST_CASE("generalized factorial table") {
  const auto c = gen_factorial_coeff_table(60);
  CHECK(c.at(0, 0) == 1);
  CHECK(c.at(3, 2) == 12);
  CHECK(c.at(3, 1) == 0);
  CHECK(c.row(3) == std::vector<Integer>{0, 0, 12, 8});
  CHECK(c.at(3, 4) == 0);
  CHECK_THROWS_AS(c.at(61, 0), std::out_of_range);
  for (unsigned n = 0; n <= 60; ++n) {
    CHECK(c.at(n, n) == (Integer(1) << n));
    if (n > 0) CHECK(c.at(n, 0) == 0);
    for (unsigned l = 0; 2 * l < n; ++l) CHECK(c.at(n, l) == 0);
  }
  for (unsigned n = 0; n <= 25; ++n) REQUIRE(c.row(n) == oracle_ref::falling_basis_row(n));
}

TEST_CASE("2^(n-k) H(n,k) = C(n,n-k;2) and divisibility") {
  const auto c = gen_factorial_coeff_table(60);
  for (unsigned n = 0; n <= 60; ++n) {
    for (unsigned k = 0; k <= n / 2; ++k) {
      const Integer pow2 = Integer(1) << (n - k);
      REQUIRE(pow2 * hermite_coeff(n, k) == c.at(n, n - k));
      REQUIRE(c.at(n, n - k) % pow2 == 0);
    }
  }
}

TEST_CASE("stirling representation uses 2^k") {
  CHECK(gen_factorial_via_stirling(2, 1) == 2);
  CHECK(gen_factorial_via_stirling(4, 2) == 12);
  const StirlingTables st(30);
  const auto c = gen_factorial_coeff_table(30);
  for (unsigned n = 0; n <= 30; ++n) {
    CHECK(gen_factorial_via_stirling(st, n, n) == (Integer(1) << n));
    for (unsigned l = 0; l <= n; ++l) REQUIRE(gen_factorial_via_stirling(st, n, l) == c.at(n, l));
  }
  CHECK_THROWS_AS(gen_factorial_via_stirling(2, 3), std::invalid_argument);

  // the 2^l reading disagrees at (2, 1)
  Integer alt = 0;
  for (unsigned k = 1; k <= 2; ++k) alt += Integer(2) * st.first(2, k) * st.second(k, 1);
  CHECK(alt == 0);
}

TEST_CASE("falling factorial identity") {
  CHECK(verify_falling_identity(2, 5));
  CHECK(oracle_ref::falling(10, 2) == 4 * oracle_ref::falling(5, 2) + 2 * 5);
  for (unsigned m = 0; m <= 10; ++m) CHECK(verify_falling_identity(0, m));
  const auto c = gen_factorial_coeff_table(20);
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned m = 0; m <= 40; ++m) REQUIRE(verify_falling_identity(c, n, m));
}
