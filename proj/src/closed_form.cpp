#include "latpath/closed_form.hpp"

#include "latpath/lattice.hpp"

namespace latpath::forms {

Int binom(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Int acc = 1;
  for (long long i = 0; i < r; ++i) {
    acc *= n - i;
    acc /= i + 1;  // exact: acc is C(n, i+1) after each round
  }
  return acc;
}

namespace {

void require_parity(long long N, long long M, const char* what) {
  if ((N - M) % 2 != 0) throw std::domain_error(std::string(what) + ": N - M must be even");
}

}  // namespace

Int ballot_f(long long N, long long M) {
  require_parity(N, M, "ballot_f");
  const long long h = (N - M) / 2;
  return binom(N, h) - binom(N, h - 1);
}

Int unrestricted_count(long long M, long long N) {
  require_parity(N, M, "unrestricted_count");
  return binom(N, (N - M) / 2);
}

Int wall_count(long long M, long long N, long long a) {
  require_parity(N, M, "wall_count");
  if (a > 0) throw std::domain_error("wall_count: wall position must be <= 0");
  if (M < a) throw std::domain_error("wall_count: target lies left of the wall");
  const long long h = (N - M) / 2;
  return binom(N, h) - binom(N, h + a - 1);
}

Int filter_count(long long M, long long N, long long d, long long type) {
  require_parity(N, M, "filter_count");
  if (d <= 0) throw std::domain_error("filter_count: filter position must be > 0");
  if (type < 1) throw std::domain_error("filter_count: filter type must be >= 1");
  if (M == d)
    throw std::domain_error(
        "filter_count: the closed form does not cover a target on the filter column");
  const long long h = (N - M) / 2;
  if (M < d) return binom(N, h) - binom(N, h + d);
  return Int(type) * binom(N, h);
}

Int poly_p(long long j, long long k) {
  if (j < 2) throw std::domain_error("poly_p: defined for strips j >= 2 only");
  Int acc = 0;
  for (long long i = 0; i <= j / 2; ++i)
    acc += binom(j - 2, 2 * i) * binom(k - i + j - 2, j - 2);
  return acc;
}

Int poly_q(long long j, long long k) {
  if (j < 2) throw std::domain_error("poly_q: defined for strips j >= 2 only");
  Int acc = 0;
  for (long long i = 0; i <= j / 2; ++i)
    acc += binom(j - 2, 2 * i + 1) * binom(k - i + j - 2, j - 2);
  return acc;
}

Int aux_strip_multiplicity(long long l, long long M, long long N) {
  const long long j = lattice::strip_index(M, l);  // validates M >= 0, l >= 3
  require_parity(N, M, "aux_strip_multiplicity");
  // Long steps never land in the first strip, so the two models agree there
  // and the k = 0 main formula applies verbatim.
  if (j == 1) return uq_multiplicity(l, M, N);
  Int acc = 0;
  for (long long k = 0; k <= floor_div(N - (j - 1) * l + 1, 4 * l); ++k)
    acc += poly_p(j, k) * ballot_f(N, M + 4 * k * l);
  for (long long k = 0; k <= floor_div(N - j * l, 4 * l); ++k)
    acc += poly_p(j, k) * ballot_f(N, M - 4 * k * l - 2 * j * l);
  for (long long k = 0; k <= floor_div(N - (j + 1) * l + 1, 4 * l); ++k)
    acc -= poly_q(j, k) * ballot_f(N, M + 2 * l + 4 * k * l);
  for (long long k = 0; k <= floor_div(N - j * l - 2 * l, 4 * l); ++k)
    acc -= poly_q(j, k) * ballot_f(N, M - 4 * k * l - 2 * (j + 1) * l);
  return acc;
}

Int uq_multiplicity(long long l, long long M, long long N) {
  const long long k = lattice::strip_index(M, l) - 1;
  require_parity(N, M, "uq_multiplicity");
  Int acc = ballot_f(N, M);
  // floor(x/(2l) + 1/2) = floor((x + l) / (2l))
  for (long long j = 1; j <= floor_div(N - l * k + 1 + l, 2 * l); ++j)
    acc += ballot_f(N, -2 * l * k + M - 2 * j * l);
  for (long long j = 1; j <= floor_div(N - l * k + 1, 2 * l); ++j)
    acc += ballot_f(N, M + 2 * j * l);
  return acc;
}

Int strip_sum_f1(long long l, long long k, long long M, long long N) {
  if (k < 1) throw std::domain_error("strip_sum_f1: defined for k >= 1");
  if (lattice::strip_index(M, l) != k + 1)
    throw std::domain_error("strip_sum_f1: M does not lie in strip k + 1");
  require_parity(N, M, "strip_sum_f1");
  Int acc = 0;
  for (long long j = 0; j <= floor_div(N - l * k + 1, 2 * l); ++j)
    acc += ballot_f(k - 1 + 2 * j, k - 1) * aux_strip_multiplicity(l, M + 2 * j * l, N);
  return acc;
}

Int identity_onee(long long n, long long k) {
  Int s = 0;
  for (long long j = 0; j <= n; ++j)
    s += parity_sign(j) * binom(j + n + k - 2, 2 * j + k - 2) * binom(2 * j + k - 1, j);
  return s - 2 * parity_sign(n);
}

Int identity_twoo(long long n, long long k) {
  Int s = 0;
  for (long long j = 0; j <= n; ++j)
    s += parity_sign(j) * binom(j + n + k - 2, 2 * j + k - 2) * binom(2 * j + k - 1, j - 1);
  return s - 2 * parity_sign(n);
}

Int identity_q(long long n, long long k) {
  Int s = 0;
  for (long long j = 0; j <= n; ++j)
    s += parity_sign(j) * ballot_f(k - 1 + 2 * j, k - 1) * binom(j + n + k - 2, 2 * j + k - 2);
  return s;
}

Rat wz_summand_f(WzIdentity which, long long n, long long j, long long k) {
  const Int b1 = binom(j + n + k - 2, 2 * j + k - 2);
  const Int b2 = which == WzIdentity::onee ? binom(2 * j + k - 1, j) : binom(2 * j + k - 1, j - 1);
  return Rat(parity_sign(j + n) * b1 * b2, Int(2));
}

namespace {

struct Factor {
  const char* name;
  long long value;
};

void require_nonzero(const Factor* fs, int count, long long n, long long j) {
  for (int i = 0; i < count; ++i) {
    if (fs[i].value == 0)
      throw WzPoleError("certificate pole at G(" + std::to_string(n) + ", " + std::to_string(j) +
                            "): factor " + fs[i].name + " vanishes",
                        fs[i].name);
  }
}

// cpp_rational refuses a negative denominator, so normalise the sign first.
Rat make_rat(Int num, Int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

}  // namespace

Rat wz_certificate_g(WzIdentity which, long long n, long long j, long long k) {
  if (j == 0) return Rat(0);  // G(n, 0) = 0 for both certificates
  if (which == WzIdentity::onee) {
    const long long D = k * k + n * (n - 1) + k * (2 * n - 1);
    const Factor fs[] = {{"n", n},
                         {"n+1", n + 1},
                         {"j-n-1", j - n - 1},
                         {"k+2j-1", k + 2 * j - 1},
                         {"k^2+n(n-1)+k(2n-1)", D}};
    require_nonzero(fs, 5, n, j);
    const Int num = Int(parity_sign(j + n)) * j * (j + k - 1) * (k + 2 * n) *
                    (1 + k * k * n - 3 * n * n + k * (n * n - 3 * n - 1) +
                     j * (2 * n * n + 2 * k * n + k - 1));
    const Int den = Int(2) * n * (n + 1) * (j - n - 1) * (k + 2 * j - 1) * D;
    return make_rat(num * binom(j + n + k - 2, 2 * j + k - 2) * binom(2 * j + k - 1, j), den);
  }
  const long long D = k * k + n * (n + 1) + k * (2 * n + 1);
  const Factor fs[] = {{"n", n},
                       {"n-1", n - 1},
                       {"j-n-1", j - n - 1},
                       {"k+2j-1", k + 2 * j - 1},
                       {"k^2+n(n+1)+k(2n+1)", D}};
  require_nonzero(fs, 5, n, j);
  const Int num = Int(parity_sign(j + n)) * (j - 1) * (j + k) * (k + 2 * n) *
                  (1 + k * k * (n - 1) + k * (n * n - 3 * n) - 3 * n * n +
                   j * (2 * n * n + 2 * k * n - k - 1));
  const Int den = Int(2) * n * (n - 1) * (j - n - 1) * (k + 2 * j - 1) * D;
  return make_rat(num * binom(j + n + k - 2, 2 * j + k - 2) * binom(2 * j + k - 1, j - 1), den);
}

Rat wz_certificate_check(WzIdentity which, long long n, long long j, long long k) {
  return -wz_summand_f(which, n + 1, j, k) + wz_summand_f(which, n, j, k) -
         wz_certificate_g(which, n, j + 1, k) + wz_certificate_g(which, n, j, k);
}

}  // namespace latpath::forms
