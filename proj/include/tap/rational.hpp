#ifndef TAP_RATIONAL_HPP
#define TAP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tap {

/// Exact arbitrary-precision scalars. Everything in the engine is computed
/// over these; no floating point is used anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
    return boost::multiprecision::lcm(a, b);
}

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

/// "p" for integers, "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

}  // namespace tap

#endif  // TAP_RATIONAL_HPP
