#include "gstein/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gstein/bench.hpp"
#include "gstein/combinatorics.hpp"
#include "gstein/function_model.hpp"
#include "gstein/ibd.hpp"
#include "gstein/oracle.hpp"
#include "gstein/serialize.hpp"
#include "gstein/stein.hpp"
#include "gstein/verify.hpp"

namespace gstein::cli {

namespace {

constexpr unsigned kMaxTableOrder = 200;
constexpr unsigned kMaxReduceOrder = 60;
constexpr unsigned kMaxVerifyOrder = 60;
constexpr double kMonteCarloBand = 4.0;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
  std::string format = "human";
  double tol = 1e-8;
  std::uint64_t seed = 20240607;
  std::uint64_t samples = 200000;
  unsigned max_terms = 200;
};

OutputFormat format_of(const GlobalOptions& g) { return parse_output_format(g.format); }

// --- coeff ------------------------------------------------------------------

IntegerTriangle build_triangle(const std::string& table, unsigned max_n) {
  IntegerTriangle rows;
  if (table == "hermite") {
    const auto t = HermiteCoeffTable::from_formula(max_n);
    for (unsigned n = 0; n <= max_n; ++n) rows.push_back(t.row(n));
  } else if (table == "genfact") {
    const GenFactorialTable t(max_n);
    for (unsigned n = 0; n <= max_n; ++n) rows.push_back(t.row(n));
  } else {
    const StirlingTables t(max_n);
    for (unsigned n = 0; n <= max_n; ++n)
      rows.push_back(table == "stirling1" ? t.first_row(n) : t.second_row(n));
  }
  return rows;
}

int cmd_coeff(const GlobalOptions& g, const std::string& table, unsigned max_n, std::ostream& out) {
  const auto rows = build_triangle(table, max_n);
  switch (format_of(g)) {
    case OutputFormat::json: out << triangle_to_json(table, rows).dump() << "\n"; break;
    case OutputFormat::csv: out << triangle_to_csv(rows); break;
    case OutputFormat::latex: out << triangle_to_latex(rows); break;
    case OutputFormat::human: out << triangle_to_human(table, rows); break;
  }
  return kSuccess;
}

// --- reduce -----------------------------------------------------------------

int cmd_reduce(const GlobalOptions& g, unsigned n, std::optional<double> mu,
               std::optional<double> sigma2, std::ostream& out) {
  if (sigma2 && !(*sigma2 > 0.0)) throw UsageError("--sigma2 must be > 0");
  if (mu && !std::isfinite(*mu)) throw UsageError("--mu must be finite");
  const Reduction red = mu ? reduce_general_mean(n) : reduce_zero_mean(n);
  std::optional<NumericLaw> law;
  if (mu || sigma2) law = NumericLaw{mu.value_or(0.0), sigma2.value_or(1.0)};
  switch (format_of(g)) {
    case OutputFormat::json: out << reduction_to_json(red, law).dump() << "\n"; break;
    case OutputFormat::csv: out << reduction_to_csv(red, law); break;
    case OutputFormat::latex: out << render_reduction_latex(red) << "\n"; break;
    case OutputFormat::human: {
      out << render_reduction_human(red) << "\n";
      if (law) {
        out << "numeric weights at mu = " << format_real(law->mu)
            << ", sigma2 = " << format_real(law->sigma2) << ":\n";
        for (const auto& t : red.terms) {
          const double w = t.coeff.convert_to<double>() * ipow(law->mu, t.mu_power) *
                           ipow(law->sigma2, t.sigma2_power);
          out << "  order " << t.derivative_order << ": " << format_real(w) << "\n";
        }
      }
      break;
    }
  }
  return kSuccess;
}

// --- eval -------------------------------------------------------------------

struct EvalResults {
  std::optional<double> stein;
  std::optional<SeriesEvaluation> ibd;
  std::optional<double> quad;
  std::optional<McEstimate> mc;
  std::optional<double> discrepancy;
  std::optional<double> mc_z;
};

// Gap between two engines relative to max(|a|, |b|, E|g(X) X^n|). The last
// term keeps values that cancel to an exact zero from reading as failures.
double relative_gap(double a, double b, double magnitude) {
  const double scale = std::max({std::abs(a), std::abs(b), magnitude});
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

int cmd_eval(const GlobalOptions& g, const std::string& g_spec, unsigned n, const std::string& mu_text,
             const std::string& sigma2_text, const std::string& method, unsigned quad_order,
             std::ostream& out, std::ostream& err) {
  std::optional<AnalyticFunction> f;
  std::optional<ExactGaussianLaw> exact;
  try {
    f = AnalyticFunction::parse(g_spec);
    exact.emplace(parse_rational(mu_text), parse_rational(sigma2_text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const GaussianLaw law = exact->to_real();
  const auto fmt = format_of(g);
  if (fmt == OutputFormat::latex) throw UsageError("eval supports human, json and csv output");

  const bool all = method == "all";
  EvalResults r;
  if (all || method == "stein") {
    if (const auto* p = f->as_polynomial())
      r.stein = to_double(stein_product_expectation(*p, n, *exact));
    else
      r.stein = stein_product_expectation(*f, n, law);
  }
  if (all || method == "ibd") {
    AveragedShiftConfig cfg;
    cfg.max_terms = g.max_terms;
    r.ibd = ibd_product_expectation(*f, n, law, cfg);
  }
  if (all || method == "quad") r.quad = quadrature_expectation(*f, n, law, quad_order);
  if (all || method == "mc") r.mc = monte_carlo_expectation(*f, n, law, g.samples, g.seed);

  if (all) {
    const std::vector<double> values{*r.stein, r.ibd->value, *r.quad};
    const double magnitude = quadrature_expectation(
        [&](double x) { return std::abs((*f)(x) * ipow(x, n)); }, 0, law, quad_order);
    double worst = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = i + 1; j < values.size(); ++j)
        worst = std::max(worst, relative_gap(values[i], values[j], magnitude));
    r.discrepancy = worst;
    const double diff = r.mc->estimate - *r.stein;
    r.mc_z = r.mc->std_error > 0.0 ? diff / r.mc->std_error
                                   : (diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff));
  }

  const bool ibd_failed = r.ibd && !r.ibd->converged;
  const bool gap_failed = r.discrepancy && *r.discrepancy > g.tol;
  const bool mc_failed = r.mc_z && std::abs(*r.mc_z) > kMonteCarloBand;
  const bool ok = !ibd_failed && !gap_failed && !mc_failed;

  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["g"] = g_spec;
    doc["n"] = n;
    doc["mu"] = law.mu();
    doc["sigma2"] = law.sigma2();
    nlohmann::ordered_json res;
    if (r.stein) res["stein"] = *r.stein;
    if (r.ibd)
      res["ibd"] = {{"value", r.ibd->value},
                    {"terms_used", r.ibd->terms_used},
                    {"converged", r.ibd->converged},
                    {"last_term_magnitude", r.ibd->last_term_magnitude}};
    if (r.quad) res["quad"] = {{"value", *r.quad}, {"order", quad_order}};
    if (r.mc)
      res["mc"] = {{"estimate", r.mc->estimate},
                   {"std_error", r.mc->std_error},
                   {"samples", r.mc->samples},
                   {"seed", r.mc->seed}};
    doc["results"] = std::move(res);
    if (r.discrepancy) {
      doc["max_rel_discrepancy"] = *r.discrepancy;
      doc["tol"] = g.tol;
      doc["mc_z"] = *r.mc_z;
    }
    doc["ok"] = ok;
    out << doc.dump() << "\n";
  } else if (fmt == OutputFormat::csv) {
    out << "method,value,std_error,terms_used,converged\n";
    if (r.stein) out << "stein," << format_real(*r.stein) << ",,,\n";
    if (r.ibd)
      out << "ibd," << format_real(r.ibd->value) << ",," << r.ibd->terms_used << ","
          << (r.ibd->converged ? "true" : "false") << "\n";
    if (r.quad) out << "quad," << format_real(*r.quad) << ",,,\n";
    if (r.mc) out << "mc," << format_real(r.mc->estimate) << "," << format_real(r.mc->std_error) << ",,\n";
  } else {
    out << "E[g(X) X^" << n << "] with g = " << f->describe() << ", mu = " << format_real(law.mu())
        << ", sigma2 = " << format_real(law.sigma2()) << "\n";
    if (r.stein) out << "  stein  " << format_real(*r.stein) << "\n";
    if (r.ibd)
      out << "  ibd    " << format_real(r.ibd->value) << "  (" << r.ibd->terms_used << " terms, "
          << (r.ibd->converged ? "converged" : "NOT converged") << ")\n";
    if (r.quad) out << "  quad   " << format_real(*r.quad) << "  (order " << quad_order << ")\n";
    out << std::setprecision(3);
    if (r.mc)
      out << "  mc     " << format_real(r.mc->estimate) << " +/- " << r.mc->std_error << "  ("
          << r.mc->samples << " samples, seed " << r.mc->seed << ")\n";
    if (r.discrepancy)
      out << "max relative discrepancy (stein, ibd, quad): " << *r.discrepancy << " (tol " << g.tol
          << ")\nmonte carlo z-score vs stein: " << *r.mc_z << " (band " << kMonteCarloBand << ")\n";
    out << (ok ? "ok" : "FAILED") << "\n";
  }
  if (ibd_failed) err << "ibd series did not converge within " << g.max_terms << " terms\n";
  if (gap_failed) err << "engines disagree beyond tolerance " << g.tol << "\n";
  if (mc_failed) err << "monte carlo estimate outside the " << kMonteCarloBand << "-sigma band\n";
  return ok ? kSuccess : kCheckFailed;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const GlobalOptions& g, const std::string& suite, unsigned max_n, std::ostream& out) {
  const auto fmt = format_of(g);
  if (fmt == OutputFormat::latex || fmt == OutputFormat::csv)
    throw UsageError("verify supports human and json output");
  const auto reports = run_verify_suite(suite, max_n);
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["max_n"] = max_n;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json j;
      j["suite"] = r.suite;
      j["checks"] = r.checks;
      j["passed"] = r.passed;
      if (!r.passed) j["counterexample"] = r.counterexample;
      if (!r.note.empty()) j["note"] = r.note;
      arr.push_back(std::move(j));
    }
    doc["suites"] = std::move(arr);
    doc["passed"] = passed;
    out << doc.dump() << "\n";
  } else {
    for (const auto& r : reports) {
      out << r.suite << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.checks << " checks)";
      if (!r.passed) out << " first counterexample: " << r.counterexample;
      out << "\n";
      if (!r.note.empty()) out << "  note: " << r.note << "\n";
    }
  }
  return passed ? kSuccess : kCheckFailed;
}

// --- bench ------------------------------------------------------------------

int cmd_bench(const GlobalOptions& g, unsigned n_max, unsigned repeats, std::ostream& out) {
  const auto fmt = format_of(g);
  if (fmt == OutputFormat::latex) throw UsageError("bench supports human, json and csv output");
  const auto records = run_bench(n_max, repeats);
  if (fmt == OutputFormat::csv) out << bench_to_csv(records);
  else if (fmt == OutputFormat::json) out << bench_to_json(records).dump() << "\n";
  else out << bench_to_human(records);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gstein: exact reductions of Gaussian expectations E[g(X) X^n]", "gstein"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv", "latex"}))
      ->capture_default_str();
  app.add_option("--tol", g.tol, "Relative tolerance for eval --method all")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--samples", g.samples, "Monte Carlo sample count")
      ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()))
      ->capture_default_str();
  app.add_option("--max-terms", g.max_terms, "Series term cap for the ibd engine")
      ->check(CLI::Range(1u, 100000u))
      ->capture_default_str();
  app.set_config("--config", "", "key=value configuration file")->envname("GSTEIN_CONFIG");

  std::string table;
  unsigned coeff_max_n = 10;
  auto* coeff = app.add_subcommand("coeff", "Print a coefficient triangle");
  coeff->add_option("table", table, "hermite | genfact | stirling1 | stirling2")
      ->required()
      ->check(CLI::IsMember({"hermite", "genfact", "stirling1", "stirling2"}));
  coeff->add_option("--max-n", coeff_max_n, "Last row")
      ->check(CLI::Range(0u, kMaxTableOrder))
      ->capture_default_str();

  unsigned reduce_n = 0;
  std::optional<double> reduce_mu;
  std::optional<double> reduce_sigma2;
  auto* reduce_cmd = app.add_subcommand("reduce", "Closed-form reduction of E[g(X) X^n]");
  reduce_cmd->add_option("n,--n", reduce_n, "Power of X")->required()->check(CLI::Range(0u, kMaxReduceOrder));
  reduce_cmd->add_option("--mu", reduce_mu, "Mean; selects the general-mean form");
  reduce_cmd->add_option("--sigma2", reduce_sigma2, "Variance, attaches numeric weights");

  std::string g_spec;
  unsigned eval_n = 0;
  std::string eval_mu = "0";
  std::string eval_sigma2 = "1";
  std::string method = "all";
  unsigned quad_order = 64;
  auto* eval = app.add_subcommand("eval", "Evaluate E[g(X) X^n] with one or all engines");
  eval->add_option("--g", g_spec, "poly:<c0,c1,...> | exp:<a> | sin:<a> | cos:<a>")->required();
  eval->add_option("n,--n", eval_n, "Power of X")->check(CLI::Range(0u, kMaxReduceOrder))->capture_default_str();
  eval->add_option("--mu", eval_mu, "Mean (integer, decimal or p/q)")->capture_default_str();
  eval->add_option("--sigma2", eval_sigma2, "Variance (integer, decimal or p/q)")->capture_default_str();
  eval->add_option("--method", method, "stein | ibd | quad | mc | all")
      ->check(CLI::IsMember({"stein", "ibd", "quad", "mc", "all"}))
      ->capture_default_str();
  eval->add_option("--quad-order", quad_order, "Gauss-Hermite order")
      ->check(CLI::Range(1u, kMaxQuadratureOrder))
      ->capture_default_str();

  std::string suite;
  unsigned verify_max_n = kMaxVerifyOrder;
  auto* verify = app.add_subcommand("verify", "Run the exact identity suites");
  verify->add_option("suite", suite, "recurrence | lemma2 | falling | stein-vs-recursive | all")
      ->required()
      ->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--max-n", verify_max_n, "Largest n checked")
      ->check(CLI::Range(0u, kMaxVerifyOrder))
      ->capture_default_str();

  unsigned bench_n_max = 20;
  unsigned repeats = 3;
  auto* bench = app.add_subcommand("bench", "Closed form versus recursive Stein rewriting");
  bench->add_option("--n-max", bench_n_max, "Largest n")
      ->check(CLI::Range(0u, kMaxBenchOrder))
      ->capture_default_str();
  bench->add_option("--repeats", repeats, "Timing repeats per record (fastest kept)")
      ->check(CLI::Range(1u, 1000000u))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (coeff->parsed()) return cmd_coeff(g, table, coeff_max_n, out);
    if (reduce_cmd->parsed()) return cmd_reduce(g, reduce_n, reduce_mu, reduce_sigma2, out);
    if (eval->parsed())
      return cmd_eval(g, g_spec, eval_n, eval_mu, eval_sigma2, method, quad_order, out, err);
    if (verify->parsed()) return cmd_verify(g, suite, verify_max_n, out);
    if (bench->parsed()) return cmd_bench(g, bench_n_max, repeats, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsageError;
}

}  // namespace gstein::cli
