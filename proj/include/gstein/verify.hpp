#pragma once

// Exhaustive exact identity checks behind `gstein verify`.

#include <cstddef>
#include <string>
#include <vector>

namespace gstein {

struct VerifyReport {
  std::string suite;
  std::size_t checks = 0;
  bool passed = true;
  /// First failing case, e.g. "n=5 k=2: lhs=... rhs=...". Empty when passed.
  std::string counterexample;
  /// Informational remarks such as a clamped range.
  std::string note;
};

/// H(n+1,k) = (n-2k+2) H(n,k-1) + H(n,k) for n <= max_n, and the
/// recurrence-built table equals the closed form.
VerifyReport verify_recurrence(unsigned max_n);

/// 2^(n-k) H(n,k) = C(n,n-k;2) for n <= max_n.
VerifyReport verify_lemma2(unsigned max_n);

/// (2m)^(n falling) = sum_l C(n,l;2) m^(l falling) for n <= max_n, m <= 2 max_n.
VerifyReport verify_falling(unsigned max_n);

/// Closed-form reductions equal the recursive rewriter for both law kinds.
/// n is clamped to 24 (zero mean) and 14 (general mean).
VerifyReport verify_stein_vs_recursive(unsigned max_n);

const std::vector<std::string>& verify_suite_names();

/// Runs one named suite, or every suite for "all".
std::vector<VerifyReport> run_verify_suite(const std::string& suite, unsigned max_n);

}  // namespace gstein
