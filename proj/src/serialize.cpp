#include "gstein/serialize.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace gstein {

namespace {

std::string superscript(unsigned value) {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(value);
  std::string out;
  for (char c : s) out += digits[c - '0'];
  return out;
}

double term_weight(const ReductionTerm& t, const NumericLaw& law) {
  return t.coeff.convert_to<double>() * ipow(law.mu, t.mu_power) * ipow(law.sigma2, t.sigma2_power);
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "human") return OutputFormat::human;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "latex") return OutputFormat::latex;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

// --- reductions -------------------------------------------------------------

std::string render_reduction_human(const Reduction& red) {
  std::string out = "E[g(X) X^" + std::to_string(red.n) + "] = ";
  bool first = true;
  for (const auto& t : red.terms) {
    if (!first) out += " + ";
    first = false;
    std::vector<std::string> parts;
    if (t.coeff != 1) parts.push_back(t.coeff.str());
    if (t.mu_power == 1) parts.push_back("μ");
    else if (t.mu_power > 1) parts.push_back("μ" + superscript(t.mu_power));
    if (t.sigma2_power > 0) parts.push_back("σ" + superscript(2 * t.sigma2_power));
    parts.push_back(t.derivative_order == 0
                        ? std::string("E[g(X)]")
                        : "E[g⁽" + superscript(t.derivative_order) + "⁾(X)]");
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
  }
  return out;
}

std::string render_reduction_latex(const Reduction& red) {
  std::string out = "\\mathbb{E}\\left[g(X)X^{" + std::to_string(red.n) + "}\\right]=";
  bool first = true;
  for (const auto& t : red.terms) {
    if (!first) out += "+";
    first = false;
    if (t.coeff != 1) out += t.coeff.str();
    if (t.mu_power == 1) out += "\\mu";
    else if (t.mu_power > 1) out += "\\mu^{" + std::to_string(t.mu_power) + "}";
    if (t.sigma2_power > 0) out += "\\sigma^{" + std::to_string(2 * t.sigma2_power) + "}";
    out += t.derivative_order == 0
               ? std::string("\\mathbb{E}\\left[g(X)\\right]")
               : "\\mathbb{E}\\left[g^{(" + std::to_string(t.derivative_order) + ")}(X)\\right]";
  }
  return out;
}

nlohmann::ordered_json reduction_to_json(const Reduction& red, const std::optional<NumericLaw>& law) {
  nlohmann::ordered_json doc;
  doc["n"] = red.n;
  doc["law"] = to_string(red.law_kind);
  if (law) {
    doc["mu"] = law->mu;
    doc["sigma2"] = law->sigma2;
  }
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : red.terms) {
    nlohmann::ordered_json term;
    term["order"] = t.derivative_order;
    term["coeff"] = t.coeff.str();
    term["mupow"] = t.mu_power;
    term["s2pow"] = t.sigma2_power;
    if (law) term["weight"] = term_weight(t, *law);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

Reduction reduction_from_json(const nlohmann::json& doc) {
  try {
    Reduction red;
    red.n = doc.at("n").get<unsigned>();
    const auto law = doc.at("law").get<std::string>();
    if (law == "zero_mean") red.law_kind = LawKind::zero_mean;
    else if (law == "general_mean") red.law_kind = LawKind::general_mean;
    else throw std::invalid_argument("unknown law kind '" + law + "'");
    for (const auto& t : doc.at("terms")) {
      const auto coeff = t.at("coeff").get<std::string>();
      if (coeff.empty() || coeff.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("coefficient '" + coeff + "' is not a positive decimal integer");
      red.terms.push_back({t.at("order").get<unsigned>(), Integer(coeff),
                           t.at("mupow").get<unsigned>(), t.at("s2pow").get<unsigned>()});
    }
    return red;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed reduction JSON: ") + e.what());
  }
}

std::string reduction_to_csv(const Reduction& red, const std::optional<NumericLaw>& law) {
  std::string out = law ? "order,coeff,mupow,s2pow,weight\n" : "order,coeff,mupow,s2pow\n";
  for (const auto& t : red.terms) {
    out += std::to_string(t.derivative_order) + "," + t.coeff.str() + "," +
           std::to_string(t.mu_power) + "," + std::to_string(t.sigma2_power);
    if (law) out += "," + format_real(term_weight(t, *law));
    out += "\n";
  }
  return out;
}

// --- coefficient triangles --------------------------------------------------

nlohmann::ordered_json triangle_to_json(const std::string& table, const IntegerTriangle& rows) {
  nlohmann::ordered_json doc;
  doc["table"] = table;
  doc["max_n"] = rows.empty() ? 0 : rows.size() - 1;
  auto out = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& v : row) r.push_back(v.str());
    out.push_back(std::move(r));
  }
  doc["rows"] = std::move(out);
  return doc;
}

std::string triangle_to_csv(const IntegerTriangle& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i].str();
    out += "\n";
  }
  return out;
}

std::string triangle_to_human(const std::string& table, const IntegerTriangle& rows) {
  std::string out = table + "\n";
  for (std::size_t n = 0; n < rows.size(); ++n) {
    out += "n=" + std::to_string(n) + ":";
    for (const auto& v : rows[n]) out += " " + v.str();
    out += "\n";
  }
  return out;
}

std::string triangle_to_latex(const IntegerTriangle& rows) {
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.size());
  std::string out = "\\begin{array}{r|" + std::string(width, 'r') + "}\n";
  for (std::size_t n = 0; n < rows.size(); ++n) {
    out += std::to_string(n);
    for (const auto& v : rows[n]) out += " & " + v.str();
    out += " \\\\\n";
  }
  out += "\\end{array}\n";
  return out;
}

// --- bench ------------------------------------------------------------------

std::string bench_to_csv(const std::vector<BenchRecord>& records) {
  std::string out = std::string(kBenchCsvHeader) + "\n";
  for (const auto& r : records) {
    out += std::to_string(r.n) + "," + to_string(r.method) + "," + std::to_string(r.wall_time_ns) +
           "," + std::to_string(r.final_terms) + "," + std::to_string(r.peak_terms) + "," +
           std::to_string(r.steps) + "\n";
  }
  return out;
}

nlohmann::ordered_json bench_to_json(const std::vector<BenchRecord>& records) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json rec;
    rec["n"] = r.n;
    rec["method"] = to_string(r.method);
    rec["wall_time_ns"] = r.wall_time_ns;
    rec["final_terms"] = r.final_terms;
    rec["peak_terms"] = r.peak_terms;
    rec["steps"] = r.steps;
    arr.push_back(std::move(rec));
  }
  nlohmann::ordered_json doc;
  doc["records"] = std::move(arr);
  return doc;
}

std::string bench_to_human(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << std::setw(4) << "n" << "  " << std::left << std::setw(12) << "method" << std::right
      << std::setw(14) << "time[ns]" << std::setw(8) << "final" << std::setw(10) << "peak"
      << std::setw(10) << "steps" << "\n";
  for (const auto& r : records) {
    out << std::setw(4) << r.n << "  " << std::left << std::setw(12) << to_string(r.method)
        << std::right << std::setw(14) << r.wall_time_ns << std::setw(8) << r.final_terms
        << std::setw(10) << r.peak_terms << std::setw(10) << r.steps << "\n";
  }
  return out.str();
}

}  // namespace gstein
