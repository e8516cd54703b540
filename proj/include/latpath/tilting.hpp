#pragma once

#include <compare>
#include <map>
#include <vector>

#include "latpath/exact.hpp"

namespace latpath::tilting {

// Label of an indecomposable summand: the highest weight k, with its unique
// split k = l*k1 + k0, 0 <= k0 <= l-1. The special family l*k1 - 1
// corresponds to k0 = l - 1.
struct TiltingLabel {
  long long k = 0;

  long long k1(long long l) const { return k / l; }
  long long k0(long long l) const { return k % l; }
  auto operator<=>(const TiltingLabel&) const = default;
};

// Decomposition of the N-th tensor power of the two-dimensional module:
// highest weight -> exact multiplicity, sparse (only nonzero entries).
struct Decomposition {
  long long N = 0;
  std::map<long long, Int> mult;
};

// Exact dimensions per highest weight, used as a consistency functional.
struct DimTable {
  long long l = 3;
  std::map<long long, Int> dims;
};

// One application of the multiplicity recursion (tensoring once more with the
// two-dimensional module). Writing m' for power N+1 and m for power N:
//   m'(0)      = m(1)
//   m'(k)      = m(k-1) + m(k+1)                       for k0 in 1..l-3 or k0 = 0
//   m'(l k1-2) = m(l k1 - 3)
//   m'(l k1-1) = m(l k1 - 2) + 2 m(l k1) + m((k1+2) l - 2)
// Throws std::domain_error on a malformed input (support or parity).
Decomposition tensor_step(const Decomposition& dec, long long l);

// Iterated tensor_step from {0: 1}.
Decomposition decompose(long long N, long long l);

// Closed-form dimension: k+1 for k <= l-1; 2*l*k1 for k = l*k1 + k0 with
// k1 >= 1 and 0 <= k0 <= l-2; l*k1 for k = l*k1 - 1. This is the unique
// function with d(0) = 1, d(1) = 2 satisfying 2 d(x) = sum of weight*d(target)
// over the full model's step rules (see derive_dim_table).
Int tilting_dim(long long k, long long l);

// Dimension table derived purely from the step rules by propagating the
// doubling constraint left to right from d(0) = 1, d(1) = 2; oracle for
// tilting_dim.
DimTable derive_dim_table(long long l, long long x_max);

struct PathMismatch {
  long long N = 0;
  long long k = 0;
  Int from_recursion;
  Int from_paths;
};

// Cross-validates the recursion route against the path-count route: for every
// N <= n_max and every k, the decompose multiplicity must equal the weighted
// path count to (k, N) in the full model. Returns all mismatches (expected:
// none).
std::vector<PathMismatch> verify_against_paths(long long n_max, long long l);

}  // namespace latpath::tilting
