#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace homlts {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. The backend keeps every value reduced
/// (gcd(|num|, den) = 1) with a strictly positive denominator, so equality
/// is plain memberwise comparison and no tolerance appears anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// num/den with sign normalization. Throws MathError when den = 0.
Rational make_rational(const Int& num, const Int& den);

/// Parses "p", "p/q" or "-p/q" with q > 0. Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

} // namespace homlts
