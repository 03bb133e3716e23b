#pragma once

// Text renderings shared by the CLI and the golden-file tests. Exact integers
// always travel as decimal strings. Schemas are documented in docs/formats.md.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gstein/bench.hpp"
#include "gstein/exact.hpp"
#include "gstein/stein.hpp"

namespace gstein {

enum class OutputFormat { human, json, csv, latex };

/// Throws std::invalid_argument for anything but human/json/csv/latex.
OutputFormat parse_output_format(const std::string& name);

/// Numeric (mu, s2) attached to a rendered reduction so each term also
/// carries its weight coeff * mu^a * s2^b.
struct NumericLaw {
  double mu = 0.0;
  double sigma2 = 1.0;
};

/// "E[g(X) X^1] = σ² E[g⁽¹⁾(X)]"
std::string render_reduction_human(const Reduction& red);
/// "\mathbb{E}\left[g(X)X^{1}\right]=\sigma^{2}\mathbb{E}\left[g^{(1)}(X)\right]"
std::string render_reduction_latex(const Reduction& red);

nlohmann::ordered_json reduction_to_json(const Reduction& red,
                                         const std::optional<NumericLaw>& law = std::nullopt);
/// Inverse of reduction_to_json; extra keys such as "weight" are ignored.
/// Throws std::invalid_argument on a malformed document.
Reduction reduction_from_json(const nlohmann::json& doc);

/// Header "order,coeff,mupow,s2pow" (plus ",weight" when law is given).
std::string reduction_to_csv(const Reduction& red, const std::optional<NumericLaw>& law = std::nullopt);

using IntegerTriangle = std::vector<std::vector<Integer>>;

nlohmann::ordered_json triangle_to_json(const std::string& table, const IntegerTriangle& rows);
/// One line per row, entries comma-separated, no header.
std::string triangle_to_csv(const IntegerTriangle& rows);
std::string triangle_to_human(const std::string& table, const IntegerTriangle& rows);
std::string triangle_to_latex(const IntegerTriangle& rows);

inline constexpr const char* kBenchCsvHeader = "n,method,wall_time_ns,final_terms,peak_terms,steps";

std::string bench_to_csv(const std::vector<BenchRecord>& records);
nlohmann::ordered_json bench_to_json(const std::vector<BenchRecord>& records);
std::string bench_to_human(const std::vector<BenchRecord>& records);

}  // namespace gstein
