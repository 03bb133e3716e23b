#include "gstein/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "gstein/combinatorics.hpp"
#include "gstein/stein.hpp"

namespace gstein {

namespace {

constexpr unsigned kZeroMeanRewriteCap = 24;
constexpr unsigned kGeneralMeanRewriteCap = 14;

void fail(VerifyReport& report, std::string what) {
  if (report.passed) report.counterexample = std::move(what);
  report.passed = false;
}

}  // namespace

VerifyReport verify_recurrence(unsigned max_n) {
  VerifyReport report;
  report.suite = "recurrence";
  const auto formula = HermiteCoeffTable::from_formula(max_n + 1);
  for (unsigned n = 0; n <= max_n && report.passed; ++n) {
    for (long k = -1; k <= long(n + 1) / 2 + 1; ++k) {
      ++report.checks;
      Integer lhs = formula.at(n + 1, k);
      Integer rhs = (long(n) - 2 * k + 2) * formula.at(n, k - 1) + formula.at(n, k);
      if (lhs != rhs) {
        fail(report, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": H(n+1,k)=" +
                         lhs.str() + " recurrence=" + rhs.str());
        break;
      }
    }
  }
  const auto built = HermiteCoeffTable::from_recurrence(max_n + 1);
  for (unsigned n = 0; n <= max_n + 1 && report.passed; ++n) {
    ++report.checks;
    if (built.row(n) != formula.row(n))
      fail(report, "row n=" + std::to_string(n) + " differs between recurrence and formula");
  }
  return report;
}

VerifyReport verify_lemma2(unsigned max_n) {
  VerifyReport report;
  report.suite = "lemma2";
  const GenFactorialTable gf(max_n);
  for (unsigned n = 0; n <= max_n && report.passed; ++n) {
    for (unsigned k = 0; 2 * k <= n; ++k) {
      ++report.checks;
      Integer lhs = ipow(Integer(2), n - k) * hermite_coeff(n, k);
      Integer rhs = gf.at(n, n - k);
      if (lhs != rhs) {
        fail(report, "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         ": 2^(n-k) H(n,k)=" + lhs.str() + " C(n,n-k;2)=" + rhs.str());
        break;
      }
    }
  }
  return report;
}

VerifyReport verify_falling(unsigned max_n) {
  VerifyReport report;
  report.suite = "falling";
  const GenFactorialTable gf(max_n);
  for (unsigned n = 0; n <= max_n && report.passed; ++n) {
    for (unsigned m = 0; m <= 2 * max_n; ++m) {
      ++report.checks;
      if (!verify_falling_identity(gf, n, m)) {
        Integer rhs = 0;
        for (unsigned l = 0; l <= n; ++l) rhs += gf.at(n, l) * falling_factorial(Integer(m), l);
        fail(report, "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": (2m)_n=" +
                         falling_factorial(Integer(2 * m), n).str() + " expansion=" + rhs.str());
        break;
      }
    }
  }
  return report;
}

VerifyReport verify_stein_vs_recursive(unsigned max_n) {
  VerifyReport report;
  report.suite = "stein-vs-recursive";
  const unsigned zero_cap = std::min(max_n, kZeroMeanRewriteCap);
  const unsigned general_cap = std::min(max_n, kGeneralMeanRewriteCap);
  if (zero_cap < max_n || general_cap < max_n)
    report.note = "recursive rewriter checked up to n=" + std::to_string(zero_cap) +
                  " (zero mean) and n=" + std::to_string(general_cap) + " (general mean)";
  for (auto [kind, cap] : {std::pair{LawKind::zero_mean, zero_cap},
                           std::pair{LawKind::general_mean, general_cap}}) {
    for (unsigned n = 0; n <= cap && report.passed; ++n) {
      ++report.checks;
      if (reduce(n, kind) != recursive_stein_rewriter(n, kind))
        fail(report, std::string(to_string(kind)) + " n=" + std::to_string(n) +
                         ": closed form and recursive rewriter differ");
    }
  }
  return report;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"recurrence", "lemma2", "falling",
                                              "stein-vs-recursive", "all"};
  return names;
}

std::vector<VerifyReport> run_verify_suite(const std::string& suite, unsigned max_n) {
  if (suite == "recurrence") return {verify_recurrence(max_n)};
  if (suite == "lemma2") return {verify_lemma2(max_n)};
  if (suite == "falling") return {verify_falling(max_n)};
  if (suite == "stein-vs-recursive") return {verify_stein_vs_recursive(max_n)};
  if (suite == "all")
    return {verify_recurrence(max_n), verify_lemma2(max_n), verify_falling(max_n),
            verify_stein_vs_recursive(max_n)};
  throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

}  // namespace gstein
