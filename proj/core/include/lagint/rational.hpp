#ifndef LAGINT_RATIONAL_HPP
#define LAGINT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lagint {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// binom(a, b) with integer a >= 0; zero outside the triangle.
inline Integer binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    Integer r = 1;
    for (int i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

inline double to_double(const Rational& q) {
    return static_cast<double>(q);
}

// Parses "p", "-p" or "p/q". Decimal notation is rejected: the exact
// engines require exact inputs.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty() || s.find('.') != std::string::npos ||
        s.find('e') != std::string::npos || s.find('E') != std::string::npos)
        throw std::invalid_argument("parse_rational: expected integer or p/q, got '" + s + "'");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    }
}

} // namespace lagint

#endif
