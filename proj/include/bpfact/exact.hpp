#pragma once

// Arbitrary-precision integers and exact rationals, plus decimal rendering.

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bpfact {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with a positive denominator.
using ExactRatio = boost::multiprecision::cpp_rational;

inline BigInt ipow(unsigned base, std::size_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1U) {
      r *= b;
    }
    exp >>= 1U;
    if (exp > 0) {
      b *= b;
    }
  }
  return r;
}

/// Renders q with exactly `digits` places after the decimal point, rounding
/// half to even.
inline std::string to_decimal(const ExactRatio& q, unsigned digits = 4) {
  BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const bool negative = num < 0;
  if (negative) {
    num = -num;
  }
  const BigInt scaled = num * ipow(10, digits);
  BigInt quot = scaled / den;
  const BigInt rem = scaled % den;
  const BigInt twice = 2 * rem;
  if (twice > den || (twice == den && (quot & 1) != 0)) {
    ++quot;
  }
  std::string s = quot.str();
  if (s.size() <= digits) {
    s.insert(0, digits + 1 - s.size(), '0');
  }
  if (digits > 0) {
    s.insert(s.size() - digits, ".");
  }
  if (negative && quot != 0) {
    s.insert(0, "-");
  }
  return s;
}

inline double to_double(const ExactRatio& q) { return q.convert_to<double>(); }

}  // namespace bpfact
