#pragma once

#include <stdexcept>
#include <string>

#include "latpath/exact.hpp"

namespace latpath::forms {

// Binomial coefficient with the combinatorial zero convention: 0 whenever
// r < 0, r > n or n < 0. Every formula below relies on this convention.
Int binom(long long n, long long r);

// Ballot number F_M^(N) = C(N, (N-M)/2) - C(N, (N-M)/2 - 1). Negative for
// reflected arguments (M sufficiently negative). Requires N - M even.
Int ballot_f(long long N, long long M);

// Paths with no restrictions: C(N, (N-M)/2).
Int unrestricted_count(long long M, long long N);

// Paths with a single left wall at a <= 0:
// C(N, (N-M)/2) - C(N, (N-M)/2 + a - 1).
Int wall_count(long long M, long long N, long long a = 0);

// Paths with a single filter of the given type at column d > 0 (no wall).
// M < d: C(N, h) - C(N, h + d); M > d: type * C(N, h), h = (N-M)/2.
// The target on the filter column itself (M == d) is not covered by the
// closed form and throws.
Int filter_count(long long M, long long N, long long d, long long type);

// Coefficient polynomials of the strip formula, defined for strips j >= 2:
//   P_j(k) = sum_i C(j-2, 2i)   C(k - i + j - 2, j - 2)
//   Q_j(k) = sum_i C(j-2, 2i+1) C(k - i + j - 2, j - 2)
Int poly_p(long long j, long long k);
Int poly_q(long long j, long long k);

// Closed form for the auxiliary model (wall + periodic filters, no long
// steps) in strip j = strip_index(M, l). Strips j >= 2 use the four-sum strip
// formula; strip 1 is served by the k = 0 case of uq_multiplicity (long steps
// never land in the first strip, so the two models agree there).
Int aux_strip_multiplicity(long long l, long long M, long long N);

// Main closed form for the full model (wall + periodic filters + all long
// steps), k = strip_index(M, l) - 1:
//   F^(N)_M + sum_{j=1}^{floor((N-lk+1)/(2l) + 1/2)} F^(N)_{-2lk+M-2jl}
//           + sum_{j=1}^{floor((N-lk+1)/(2l))}       F^(N)_{M+2jl}
Int uq_multiplicity(long long l, long long M, long long N);

// Third route to the same number, for M in strip k+1 with k >= 1: the
// coefficient-weighted sum of auxiliary multiplicities
//   sum_j F^(k-1+2j)_{k-1} * aux(M + 2jl, N).
// The coefficients at k = 1 are the Catalan numbers.
Int strip_sum_f1(long long l, long long k, long long M, long long N);

// Alternating-sum identities; each returns (sum - expected), i.e. 0 when the
// identity holds at (n, k).
//   onee: sum_j (-1)^j C(j+n+k-2, 2j+k-2) C(2j+k-1, j)   = 2(-1)^n  (n >= 1)
//   twoo: sum_j (-1)^j C(j+n+k-2, 2j+k-2) C(2j+k-1, j-1) = 2(-1)^n  (n >= 2)
//   q:    sum_j (-1)^j F^(k-1+2j)_{k-1} C(j+n+k-2, 2j+k-2) = 0      (n >= 2)
// The zero convention makes twoo and q fail at n = 1; callers exclude it.
Int identity_onee(long long n, long long k);
Int identity_twoo(long long n, long long k);
Int identity_q(long long n, long long k);

enum class WzIdentity { onee, twoo };

// Raised when a certificate denominator factor vanishes at the query point.
struct WzPoleError : std::domain_error {
  std::string factor;
  WzPoleError(const std::string& msg, std::string f)
      : std::domain_error(msg), factor(std::move(f)) {}
};

// Summand F(n, j) of the identity (with the 1/2 normalization that makes the
// pair telescope) and its certificate G(n, j). G(n, 0) = 0 for both
// identities; otherwise a vanishing denominator factor raises WzPoleError.
Rat wz_summand_f(WzIdentity which, long long n, long long j, long long k);
Rat wz_certificate_g(WzIdentity which, long long n, long long j, long long k);

// -F(n+1, j) + F(n, j) - G(n, j+1) + G(n, j), exactly. Zero everywhere the
// certificate is defined; the only poles on j in [0, n] sit at j = n, where
// G(n, n+1) hits its j - n - 1 factor.
Rat wz_certificate_check(WzIdentity which, long long n, long long j, long long k);

}  // namespace latpath::forms
