#include "gstein/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace gstein {

namespace {

void require_row(std::size_t rows, unsigned n, const char* table) {
  if (n >= rows)
    throw std::out_of_range(std::string(table) + " table computed up to n = " +
                            std::to_string(rows - 1) + ", requested n = " + std::to_string(n));
}

}  // namespace

Integer factorial(unsigned n) {
  Integer result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Integer double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("double_factorial requires n >= -1");
  Integer result = 1;
  for (int i = n; i > 1; i -= 2) result *= i;
  return result;
}

Integer falling_factorial(const Integer& x, unsigned n) {
  Integer result = 1;
  for (unsigned i = 0; i < n; ++i) {
    Integer factor = x - i;
    if (factor == 0) return 0;
    result *= factor;
  }
  return result;
}

Integer binomial(unsigned n, long l) {
  if (l < 0 || l > static_cast<long>(n)) return 0;
  auto k = static_cast<unsigned>(l);
  if (k > n - k) k = n - k;
  Integer result = 1;
  // Each partial product is itself a binomial coefficient, so the division is exact.
  for (unsigned i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

Integer hermite_coeff(unsigned n, long k) {
  if (k < 0 || 2 * k > static_cast<long>(n)) return 0;
  auto uk = static_cast<unsigned>(k);
  return factorial(n) / (ipow(Integer(2), uk) * factorial(uk) * factorial(n - 2 * uk));
}

std::vector<Integer> hermite_polynomial(unsigned n) {
  std::vector<Integer> coeffs(n + 1, Integer(0));
  for (unsigned k = 0; 2 * k <= n; ++k) {
    Integer h = hermite_coeff(n, k);
    coeffs[n - 2 * k] = (k % 2 == 0) ? h : Integer(-h);
  }
  return coeffs;
}

Integer stirling_first(unsigned n, unsigned k) {
  if (k > n) return 0;
  return StirlingTables(n).first(n, k);
}

Integer stirling_second(unsigned n, unsigned k) {
  if (k > n) return 0;
  return StirlingTables(n).second(n, k);
}

// --- HermiteCoeffTable ------------------------------------------------------

HermiteCoeffTable HermiteCoeffTable::from_formula(unsigned max_n) {
  std::vector<std::vector<Integer>> rows(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    rows[n].reserve(n / 2 + 1);
    for (unsigned k = 0; 2 * k <= n; ++k) rows[n].push_back(hermite_coeff(n, k));
  }
  return HermiteCoeffTable(std::move(rows));
}

HermiteCoeffTable HermiteCoeffTable::from_recurrence(unsigned max_n) {
  std::vector<std::vector<Integer>> rows(max_n + 1);
  rows[0] = {Integer(1)};
  for (unsigned n = 0; n < max_n; ++n) {
    const auto& prev = rows[n];
    auto prev_at = [&](long k) -> Integer {
      return (k < 0 || k >= static_cast<long>(prev.size())) ? Integer(0) : prev[k];
    };
    auto& next = rows[n + 1];
    next.reserve((n + 1) / 2 + 1);
    for (long k = 0; 2 * k <= static_cast<long>(n) + 1; ++k)
      next.push_back((static_cast<long>(n) - 2 * k + 2) * prev_at(k - 1) + prev_at(k));
  }
  return HermiteCoeffTable(std::move(rows));
}

Integer HermiteCoeffTable::at(unsigned n, long k) const {
  require_row(rows_.size(), n, "Hermite coefficient");
  const auto& r = rows_[n];
  if (k < 0 || k >= static_cast<long>(r.size())) return 0;
  return r[static_cast<std::size_t>(k)];
}

const std::vector<Integer>& HermiteCoeffTable::row(unsigned n) const {
  require_row(rows_.size(), n, "Hermite coefficient");
  return rows_[n];
}

HermiteCoeffTable hermite_coeff_table_via_recurrence(unsigned max_n) {
  return HermiteCoeffTable::from_recurrence(max_n);
}

// --- StirlingTables ---------------------------------------------------------

StirlingTables::StirlingTables(unsigned max_n)
    : max_n_(max_n), first_(max_n + 1), second_(max_n + 1) {
  first_[0] = {Integer(1)};
  second_[0] = {Integer(1)};
  for (unsigned n = 0; n < max_n; ++n) {
    auto& f = first_[n + 1];
    auto& s = second_[n + 1];
    f.assign(n + 2, Integer(0));
    s.assign(n + 2, Integer(0));
    for (unsigned k = 1; k <= n + 1; ++k) {
      Integer f_same = k <= n ? first_[n][k] : Integer(0);
      Integer s_same = k <= n ? second_[n][k] : Integer(0);
      f[k] = first_[n][k - 1] - n * f_same;
      s[k] = second_[n][k - 1] + k * s_same;
    }
  }
}

Integer StirlingTables::first(unsigned n, unsigned k) const {
  require_row(first_.size(), n, "Stirling");
  return k > n ? Integer(0) : first_[n][k];
}

Integer StirlingTables::second(unsigned n, unsigned k) const {
  require_row(second_.size(), n, "Stirling");
  return k > n ? Integer(0) : second_[n][k];
}

const std::vector<Integer>& StirlingTables::first_row(unsigned n) const {
  require_row(first_.size(), n, "Stirling");
  return first_[n];
}

const std::vector<Integer>& StirlingTables::second_row(unsigned n) const {
  require_row(second_.size(), n, "Stirling");
  return second_[n];
}

// --- GenFactorialTable ------------------------------------------------------

GenFactorialTable::GenFactorialTable(unsigned max_n) : rows_(max_n + 1) {
  rows_[0] = {Integer(1)};
  for (unsigned n = 0; n < max_n; ++n) {
    const auto& prev = rows_[n];
    auto& next = rows_[n + 1];
    next.assign(n + 2, Integer(0));
    for (unsigned l = 1; l <= n + 1; ++l) {
      Integer same = l <= n ? prev[l] : Integer(0);
      next[l] = (2 * static_cast<long>(l) - static_cast<long>(n)) * same + 2 * prev[l - 1];
    }
  }
}

Integer GenFactorialTable::at(unsigned n, long l) const {
  require_row(rows_.size(), n, "generalized factorial");
  if (l < 0 || l > static_cast<long>(n)) return 0;
  return rows_[n][static_cast<std::size_t>(l)];
}

const std::vector<Integer>& GenFactorialTable::row(unsigned n) const {
  require_row(rows_.size(), n, "generalized factorial");
  return rows_[n];
}

GenFactorialTable gen_factorial_coeff_table(unsigned max_n) { return GenFactorialTable(max_n); }

Integer gen_factorial_via_stirling(const StirlingTables& tables, unsigned n, unsigned l) {
  if (l > n) throw std::invalid_argument("gen_factorial_via_stirling requires l <= n");
  Integer sum = 0;
  for (unsigned k = l; k <= n; ++k)
    sum += ipow(Integer(2), k) * tables.first(n, k) * tables.second(k, l);
  return sum;
}

Integer gen_factorial_via_stirling(unsigned n, unsigned l) {
  return gen_factorial_via_stirling(StirlingTables(n), n, l);
}

bool verify_falling_identity(const GenFactorialTable& table, unsigned n, unsigned m) {
  Integer lhs = falling_factorial(Integer(2 * m), n);
  Integer rhs = 0;
  for (unsigned l = 0; l <= n; ++l) rhs += table.at(n, l) * falling_factorial(Integer(m), l);
  return lhs == rhs;
}

bool verify_falling_identity(unsigned n, unsigned m) {
  return verify_falling_identity(GenFactorialTable(n), n, m);
}

}  // namespace gstein
