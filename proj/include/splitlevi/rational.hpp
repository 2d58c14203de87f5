#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace splitlevi {

/// Raised for inputs the tool declines to handle (Suzuki-Ree twists,
/// the exceptional E8 coset); distinct from invalid arguments.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    return Rational(Integer(num), Integer(den));
}

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Fractional part in [0,1).
inline Rational frac_mod1(const Rational& r) {
    Integer n = numerator(r), d = denominator(r);
    Integer m = n % d;
    if (m < 0) m += d;
    return Rational(m, d);
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace splitlevi
