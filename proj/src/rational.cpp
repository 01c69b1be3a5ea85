#include "homlts/rational.hpp"

#include "homlts/errors.hpp"

#include <cctype>

namespace homlts {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw MathError("rational with zero denominator");
    return Rational(num) / Rational(den);
}

Rational parse_rational(std::string_view text) {
    const std::string input(text);
    std::size_t pos = 0;
    bool negative = false;
    if (pos < input.size() && (input[pos] == '-' || input[pos] == '+')) {
        negative = input[pos] == '-';
        ++pos;
    }
    auto take_digits = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos])))
            ++pos;
        return input.substr(start, pos - start);
    };
    const std::string num_digits = take_digits();
    if (num_digits.empty())
        throw ParseError("invalid rational '" + input + "'");
    std::string den_digits = "1";
    if (pos < input.size()) {
        if (input[pos] != '/')
            throw ParseError("invalid rational '" + input + "'");
        ++pos;
        den_digits = take_digits();
        if (den_digits.empty() || pos != input.size())
            throw ParseError("invalid rational '" + input + "'");
    }
    const Int num(num_digits);
    const Int den(den_digits);
    if (den == 0)
        throw ParseError("zero denominator in '" + input + "'");
    Rational value = Rational(num) / Rational(den);
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

} // namespace homlts
