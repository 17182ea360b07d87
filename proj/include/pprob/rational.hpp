// Exact rational arithmetic used for every probability value in the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pprob {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(Integer(num), Integer(den));
}

/// "num/den", or just "num" when the value is an integer.
inline std::string to_string(const Rational& q) {
    const Integer& den = boost::multiprecision::denominator(q);
    const Integer& num = boost::multiprecision::numerator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Accepts "a", "-a", "a/b". Whitespace is not tolerated.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> Integer {
        if (s.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return Integer(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace pprob
