#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pscvote {

// All quantities in this library (eating times, probabilities, quotas) are
// exact rationals. No floating point enters any axiom check.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_floor(const Rational& q) {
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    BigInt quo = num / den;
    if (num < 0 && quo * den != num) {
        --quo;
    }
    return quo;
}

inline long floor_to_long(const Rational& q) {
    return rational_floor(q).convert_to<long>();
}

inline BigInt rational_ceil(const Rational& q) {
    return -rational_floor(-q);
}

inline bool is_integral(const Rational& q) {
    return denominator(q) == 1;
}

// "2/5", or just "2" when the denominator is one.
inline std::string to_fraction_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/" + denominator(q).str();
    }
    return s;
}

}  // namespace pscvote
