#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gmpxx.h>

namespace schreier {

using Rational = mpq_class;
using Decimal = boost::multiprecision::cpp_dec_float_50;

/// Parses "n", "-n", or "n/d" (d != 0) into reduced form.
Rational parse_rational(std::string_view text);
/// Reduced "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& q);
/// Exact k-th root of a non-negative rational, if it is rational.
std::optional<Rational> exact_root(const Rational& q, unsigned k);

Decimal to_decimal(const Rational& q);
std::string to_string(const Decimal& d);

}  // namespace schreier
