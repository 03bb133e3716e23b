#pragma once

// Exact arithmetic used throughout gstein. Integers are arbitrary precision
// and rationals are kept in lowest terms with a positive denominator.

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gstein {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", a signed integer, or a finite decimal such as "-0.25" or
/// "1.5e-3" into an exact rational. Throws std::invalid_argument on anything
/// else (including q == 0).
Rational parse_rational(std::string_view text);

/// Nearest double to an exact rational.
double to_double(const Rational& value);

/// Exact rational equal to a finite double. Throws std::invalid_argument for
/// NaN or infinity.
Rational exact_from_double(double value);

Integer ipow(const Integer& base, unsigned exponent);
Rational ipow(const Rational& base, unsigned exponent);

/// Integer power of a double by repeated squaring; deterministic across
/// platforms, unlike std::pow with integer exponents.
double ipow(double base, unsigned exponent);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Shortest decimal that round-trips the double.
std::string format_real(double x);

}  // namespace gstein
