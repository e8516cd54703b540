#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace latpath {

// Arbitrary-precision signed integer; every count, multiplicity and dimension
// in the library is exact.
using SignedExact = boost::multiprecision::cpp_int;
using Int = SignedExact;

// Exact rational, used by the telescoping-certificate checks.
using Rat = boost::multiprecision::cpp_rational;

// Floor division for summation limits (built-in '/' truncates toward zero).
inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  long long r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// (-1)^p
inline int parity_sign(long long p) { return p % 2 != 0 ? -1 : 1; }

}  // namespace latpath
