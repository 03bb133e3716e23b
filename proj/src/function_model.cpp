#include "gstein/function_model.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "gstein/combinatorics.hpp"
#include "gstein/stein.hpp"

namespace gstein {

// --- RationalPolynomial -----------------------------------------------------

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  approx_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) approx_.push_back(to_double(c));
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(unsigned power, const Rational& c) {
  std::vector<Rational> coeffs(power + 1, Rational(0));
  coeffs[power] = c;
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial RationalPolynomial::parse(std::string_view csv) {
  std::vector<Rational> coeffs;
  while (true) {
    auto comma = csv.find(',');
    coeffs.push_back(parse_rational(csv.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return RationalPolynomial(std::move(coeffs));
}

std::optional<unsigned> RationalPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

Rational RationalPolynomial::coeff(unsigned power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative(unsigned order) const {
  if (order >= coeffs_.size()) return {};
  std::vector<Rational> out(coeffs_.size() - order);
  for (std::size_t i = order; i < coeffs_.size(); ++i)
    out[i - order] = coeffs_[i] * Rational(falling_factorial(Integer(i), order));
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::times_power(unsigned n) const {
  if (is_zero()) return {};
  std::vector<Rational> out(n, Rational(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_csv() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ',';
    out += to_string(coeffs_[i]);
  }
  return out;
}

RationalPolynomial poly_derivative(const RationalPolynomial& p, unsigned order) {
  return p.derivative(order);
}

// --- AnalyticFunction -------------------------------------------------------

namespace {

double checked_rate(double rate, const char* name) {
  if (!std::isfinite(rate) || rate == 0.0)
    throw std::invalid_argument(std::string(name) + " rate must be finite and nonzero");
  return rate;
}

double parse_real(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("cannot parse '" + std::string(text) + "' as a real number");
  return value;
}

}  // namespace

AnalyticFunction::AnalyticFunction(Kernel kernel, double scale)
    : kernel_(std::move(kernel)), scale_(scale) {}

AnalyticFunction AnalyticFunction::polynomial(RationalPolynomial p) { return {std::move(p), 1.0}; }

AnalyticFunction AnalyticFunction::exp(double rate, double scale) {
  return {ExpKernel{checked_rate(rate, "exp")}, scale};
}

AnalyticFunction AnalyticFunction::sin(double rate, double scale) {
  return {SinKernel{checked_rate(rate, "sin")}, scale};
}

AnalyticFunction AnalyticFunction::cos(double rate, double scale) {
  return {CosKernel{checked_rate(rate, "cos")}, scale};
}

AnalyticFunction AnalyticFunction::parse(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("function spec must look like 'kind:params', got '" +
                                std::string(spec) + "'");
  std::string_view kind = spec.substr(0, colon);
  std::string_view params = spec.substr(colon + 1);
  if (kind == "poly") return polynomial(RationalPolynomial::parse(params));
  if (kind == "exp") return exp(parse_real(params));
  if (kind == "sin") return sin(parse_real(params));
  if (kind == "cos") return cos(parse_real(params));
  throw std::invalid_argument("unknown function kind '" + std::string(kind) +
                              "' (expected poly, exp, sin or cos)");
}

double AnalyticFunction::operator()(double x) const {
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, RationalPolynomial>) return k(x);
        else if constexpr (std::is_same_v<K, ExpKernel>) return scale_ * std::exp(k.rate * x);
        else if constexpr (std::is_same_v<K, SinKernel>) return scale_ * std::sin(k.rate * x);
        else return scale_ * std::cos(k.rate * x);
      },
      kernel_);
}

AnalyticFunction AnalyticFunction::derivative(unsigned order) const {
  AnalyticFunction f = *this;
  for (unsigned i = 0; i < order; ++i) {
    f = std::visit(
        [&](const auto& k) -> AnalyticFunction {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, RationalPolynomial>) return {k.derivative(1), 1.0};
          else if constexpr (std::is_same_v<K, ExpKernel>) return {k, f.scale_ * k.rate};
          else if constexpr (std::is_same_v<K, SinKernel>)
            return {CosKernel{k.rate}, f.scale_ * k.rate};
          else return {SinKernel{k.rate}, -(f.scale_ * k.rate)};
        },
        f.kernel_);
  }
  return f;
}

std::string AnalyticFunction::describe() const {
  std::string body = std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, RationalPolynomial>) return "poly:" + k.to_csv();
        else if constexpr (std::is_same_v<K, ExpKernel>) return "exp:" + format_real(k.rate);
        else if constexpr (std::is_same_v<K, SinKernel>) return "sin:" + format_real(k.rate);
        else return "cos:" + format_real(k.rate);
      },
      kernel_);
  return scale_ == 1.0 ? body : format_real(scale_) + "*" + body;
}

AnalyticFunction derivative(const AnalyticFunction& f, unsigned order) { return f.derivative(order); }

// --- expectations -----------------------------------------------------------

Rational exact_expectation(const RationalPolynomial& p, const ExactGaussianLaw& law) {
  Rational sum = 0;
  const auto& c = p.coeffs();
  for (unsigned j = 0; j < c.size(); ++j)
    if (c[j] != 0) sum += c[j] * evaluate(raw_moment(j), law);
  return sum;
}

double exact_expectation(const AnalyticFunction& f, const GaussianLaw& law) {
  const double mu = law.mu();
  const double s2 = law.sigma2();
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, RationalPolynomial>) {
          return to_double(exact_expectation(k, ExactGaussianLaw(law)));
        } else if constexpr (std::is_same_v<K, ExpKernel>) {
          return f.scale() * std::exp(k.rate * mu + 0.5 * k.rate * k.rate * s2);
        } else if constexpr (std::is_same_v<K, SinKernel>) {
          return f.scale() * std::exp(-0.5 * k.rate * k.rate * s2) * std::sin(k.rate * mu);
        } else {
          return f.scale() * std::exp(-0.5 * k.rate * k.rate * s2) * std::cos(k.rate * mu);
        }
      },
      f.kernel());
}

Rational poly_expectation_product(const RationalPolynomial& p, unsigned n,
                                  const ExactGaussianLaw& law) {
  const RationalPolynomial q = p.times_power(n);
  const auto& c = q.coeffs();
  Rational sum = 0;
  for (unsigned j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    Rational moment = 0;
    for (unsigned i = 0; i <= j; i += 2)
      moment += Rational(binomial(j, i) * double_factorial(static_cast<int>(i) - 1)) *
                ipow(law.mu(), j - i) * ipow(law.sigma2(), i / 2);
    sum += c[j] * moment;
  }
  return sum;
}

RationalPolynomial mgf_derivative_factor(unsigned n, const Rational& mu, const Rational& sigma2) {
  const RationalPolynomial exponent_slope(std::vector<Rational>{mu, sigma2});
  RationalPolynomial factor = RationalPolynomial::constant(1);
  for (unsigned k = 0; k < n; ++k) factor = factor.derivative(1) + exponent_slope * factor;
  return factor;
}

double mgf_product_oracle(unsigned n, double a, const GaussianLaw& law) {
  const ExactGaussianLaw exact(law);
  const RationalPolynomial factor = mgf_derivative_factor(n, exact.mu(), exact.sigma2());
  const double prefactor = to_double(factor(exact_from_double(a)));
  return prefactor * std::exp(a * law.mu() + 0.5 * a * a * law.sigma2());
}

std::map<unsigned, double> derivative_averages(const AnalyticFunction& f, const GaussianLaw& law,
                                               unsigned max_order) {
  std::map<unsigned, double> out;
  AnalyticFunction d = f;
  for (unsigned order = 0; order <= max_order; ++order) {
    out[order] = exact_expectation(d, law);
    d = d.derivative(1);
  }
  return out;
}

std::map<unsigned, Rational> derivative_averages(const RationalPolynomial& p,
                                                 const ExactGaussianLaw& law, unsigned max_order) {
  std::map<unsigned, Rational> out;
  RationalPolynomial d = p;
  for (unsigned order = 0; order <= max_order; ++order) {
    out[order] = exact_expectation(d, law);
    d = d.derivative(1);
  }
  return out;
}

double stein_product_expectation(const AnalyticFunction& f, unsigned n, const GaussianLaw& law) {
  if (const auto* p = f.as_polynomial())
    return to_double(stein_product_expectation(*p, n, ExactGaussianLaw(law)));
  const Reduction red = law.zero_mean() ? reduce_zero_mean(n) : reduce_general_mean(n);
  return evaluate_reduction(red, law, derivative_averages(f, law, n));
}

Rational stein_product_expectation(const RationalPolynomial& p, unsigned n,
                                   const ExactGaussianLaw& law) {
  const Reduction red = law.mu() == 0 ? reduce_zero_mean(n) : reduce_general_mean(n);
  return evaluate_reduction(red, law, derivative_averages(p, law, n));
}

}  // namespace gstein
