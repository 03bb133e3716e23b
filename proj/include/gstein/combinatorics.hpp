#pragma once

// Exact coefficient families: factorials, binomials, signless Hermite
// coefficients H(n,k), probabilist's Hermite polynomials, Stirling numbers of
// both kinds and the generalized factorial coefficients C(n,l;2).
//
// Tables are built eagerly up to max_n and never change afterwards. Queries
// inside the computed range but in a region that is zero by convention return
// 0; queries with n > max_n throw std::out_of_range.

#include <cstddef>
#include <vector>

#include "gstein/exact.hpp"

namespace gstein {

Integer factorial(unsigned n);

/// n!! with the conventions (-1)!! = 0!! = 1. Throws std::invalid_argument
/// for n < -1.
Integer double_factorial(int n);

/// x (x-1) ... (x-n+1); 1 when n == 0.
Integer falling_factorial(const Integer& x, unsigned n);

/// n choose l; 0 when l < 0 or l > n.
Integer binomial(unsigned n, long l);

/// Signless Hermite coefficient n! / (2^k k! (n-2k)!), zero outside
/// 0 <= k <= floor(n/2).
Integer hermite_coeff(unsigned n, long k);

/// Coefficients of He_n indexed by power of x: entry n-2k is (-1)^k H(n,k),
/// every other entry is zero.
std::vector<Integer> hermite_polynomial(unsigned n);

/// Signed Stirling numbers of the first kind, s(n+1,k) = s(n,k-1) - n s(n,k).
Integer stirling_first(unsigned n, unsigned k);

/// Stirling numbers of the second kind, S(n+1,k) = S(n,k-1) + k S(n,k).
Integer stirling_second(unsigned n, unsigned k);

class HermiteCoeffTable {
 public:
  /// Rows filled from the closed form n! / (2^k k! (n-2k)!).
  static HermiteCoeffTable from_formula(unsigned max_n);

  /// Rows filled only from H(n+1,k) = (n-2k+2) H(n,k-1) + H(n,k), H(0,0) = 1.
  static HermiteCoeffTable from_recurrence(unsigned max_n);

  unsigned max_n() const { return static_cast<unsigned>(rows_.size() - 1); }

  /// H(n,k); 0 for k < 0 or k > n/2.
  Integer at(unsigned n, long k) const;

  /// Row n holds k = 0 .. floor(n/2).
  const std::vector<Integer>& row(unsigned n) const;

  friend bool operator==(const HermiteCoeffTable&, const HermiteCoeffTable&) = default;

 private:
  explicit HermiteCoeffTable(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {}
  std::vector<std::vector<Integer>> rows_;
};

HermiteCoeffTable hermite_coeff_table_via_recurrence(unsigned max_n);

class StirlingTables {
 public:
  explicit StirlingTables(unsigned max_n);

  unsigned max_n() const { return max_n_; }

  /// s(n,k); 0 for k > n.
  Integer first(unsigned n, unsigned k) const;
  /// S(n,k); 0 for k > n.
  Integer second(unsigned n, unsigned k) const;

  /// Row n of the requested kind, k = 0 .. n.
  const std::vector<Integer>& first_row(unsigned n) const;
  const std::vector<Integer>& second_row(unsigned n) const;

 private:
  unsigned max_n_;
  std::vector<std::vector<Integer>> first_;
  std::vector<std::vector<Integer>> second_;
};

/// Generalized factorial coefficients with parameter 2, defined by
/// (2m)^(n falling) = sum_l C(n,l;2) m^(l falling).
class GenFactorialTable {
 public:
  /// Built from C(n+1,l;2) = (2l-n) C(n,l;2) + 2 C(n,l-1;2) with C(0,0;2) = 1.
  explicit GenFactorialTable(unsigned max_n);

  unsigned max_n() const { return static_cast<unsigned>(rows_.size() - 1); }

  /// C(n,l;2); 0 for l < 0 or l > n.
  Integer at(unsigned n, long l) const;

  /// Row n holds l = 0 .. n.
  const std::vector<Integer>& row(unsigned n) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

GenFactorialTable gen_factorial_coeff_table(unsigned max_n);

/// C(n,l;2) as sum_{k=l}^{n} 2^k s(n,k) S(k,l). Requires l <= n and
/// tables.max_n() >= n.
Integer gen_factorial_via_stirling(const StirlingTables& tables, unsigned n, unsigned l);
Integer gen_factorial_via_stirling(unsigned n, unsigned l);

/// Exact check of (2m)^(n falling) == sum_l C(n,l;2) m^(l falling).
bool verify_falling_identity(const GenFactorialTable& table, unsigned n, unsigned m);
bool verify_falling_identity(unsigned n, unsigned m);

}  // namespace gstein
