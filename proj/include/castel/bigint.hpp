#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace castel {

using BigInteger = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInteger& v) { return v.str(); }

// lowest-terms rendering, "p/q" or plain "p" when integral
inline std::string to_decimal(const BigRational& v) {
    BigInteger num = boost::multiprecision::numerator(v);
    BigInteger den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// exact floor; denominator is positive in canonical form, so only the
// negative non-integral case needs the fixup after truncating division
inline BigInteger rational_floor(const BigRational& x) {
    BigInteger num = boost::multiprecision::numerator(x);
    BigInteger den = boost::multiprecision::denominator(x);
    BigInteger q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

inline BigInteger rational_ceiling(const BigRational& x) { return -rational_floor(-x); }

}  // namespace castel
