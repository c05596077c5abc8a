#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace ncrand {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

/// Smallest c >= 0 with 2^c >= r. Requires r > 0.
inline unsigned ceil_log2(const Rational& r) {
  if (r <= 0) throw std::invalid_argument("ceil_log2: argument must be positive");
  unsigned c = 0;
  Rational p = 1;
  while (p < r) {
    p *= 2;
    ++c;
  }
  return c;
}

/// Smallest L >= 0 with b * 2^L >= 1, i.e. 2^-L <= b. Requires b > 0.
inline unsigned ceil_log2_inverse(const Rational& b) {
  if (b <= 0) throw std::invalid_argument("ceil_log2_inverse: argument must be positive");
  unsigned l = 0;
  Rational p = b;
  while (p < 1) {
    p *= 2;
    ++l;
  }
  return l;
}

}  // namespace ncrand
