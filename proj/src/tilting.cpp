#include "latpath/tilting.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "latpath/counting.hpp"
#include "latpath/lattice.hpp"

namespace latpath::tilting {

Decomposition tensor_step(const Decomposition& dec, long long l) {
  if (l < 3) throw std::domain_error("modulus l must be >= 3");
  for (const auto& [k, m] : dec.mult) {
    if (k < 0 || k > dec.N || (dec.N - k) % 2 != 0)
      throw std::domain_error("tensor_step: malformed decomposition (support/parity)");
  }
  auto prev = [&dec](long long k) -> Int {
    auto it = dec.mult.find(k);
    return it == dec.mult.end() ? Int(0) : it->second;
  };
  Decomposition out;
  out.N = dec.N + 1;
  for (long long k = out.N % 2; k <= out.N; k += 2) {
    Int v;
    if (k == 0) {
      v = prev(1);
    } else {
      const long long k0 = k % l;
      if (k0 == l - 1) {
        // k = l*k1 - 1 with k1 >= 1: the doubled term plus the long reach
        // from (k1+2)l - 2.
        v = prev(k - 1) + 2 * prev(k + 1) + prev(k + 2 * l - 1);
      } else if (k0 == l - 2) {
        v = prev(k - 1);
      } else {  // 1 <= k0 <= l-3, or k0 = 0 with k1 >= 1
        v = prev(k - 1) + prev(k + 1);
      }
    }
    if (v != 0) out.mult[k] = std::move(v);
  }
  return out;
}

Decomposition decompose(long long N, long long l) {
  if (N < 0) throw std::domain_error("tensor power must be >= 0");
  Decomposition dec;
  dec.N = 0;
  dec.mult[0] = 1;
  for (long long n = 0; n < N; ++n) dec = tensor_step(dec, l);
  return dec;
}

Int tilting_dim(long long k, long long l) {
  if (l < 3) throw std::domain_error("modulus l must be >= 3");
  if (k < 0) throw std::domain_error("highest weight must be >= 0");
  if (k <= l - 1) return k + 1;
  const long long k1 = k / l;
  const long long k0 = k % l;
  if (k0 == l - 1) return Int(l) * (k1 + 1);  // k = l(k1+1) - 1
  return Int(2) * l * k1;
}

DimTable derive_dim_table(long long l, long long x_max) {
  const lattice::ModelSpec model = lattice::ModelSpec::uq(l);
  DimTable t;
  t.l = l;
  t.dims[0] = 1;
  if (x_max >= 1) t.dims[1] = 2;
  for (long long x = 1; x < x_max; ++x) {
    Int rhs = 0;
    std::optional<std::pair<long long, long long>> unknown;  // (target, weight)
    for (const auto& s : lattice::allowed_steps(model, x)) {
      auto it = t.dims.find(s.to_x);
      if (it != t.dims.end())
        rhs += it->second * s.weight;
      else if (!unknown)
        unknown = {s.to_x, s.weight};
      else
        throw std::logic_error("dimension propagation hit two unknown targets");
    }
    const Int need = 2 * t.dims.at(x) - rhs;
    if (!unknown) {
      if (need != 0) throw std::logic_error("dimension propagation is overdetermined here");
    } else {
      if (need % unknown->second != 0)
        throw std::logic_error("dimension propagation produced a non-integral value");
      t.dims[unknown->first] = need / unknown->second;
    }
  }
  return t;
}

std::vector<PathMismatch> verify_against_paths(long long n_max, long long l) {
  std::vector<PathMismatch> out;
  if (n_max < 0) return out;
  const paths::CountTable table = paths::count_paths(lattice::ModelSpec::uq(l), n_max);
  Decomposition dec;
  dec.N = 0;
  dec.mult[0] = 1;
  for (long long N = 0; N <= n_max; ++N) {
    const auto& row = table.levels[N];
    // union of keys, then compare entry by entry
    std::set<long long> keys;
    for (const auto& [k, v] : row) keys.insert(k);
    for (const auto& [k, v] : dec.mult) keys.insert(k);
    for (long long k : keys) {
      const Int a = [&] {
        auto it = dec.mult.find(k);
        return it == dec.mult.end() ? Int(0) : it->second;
      }();
      const Int b = table.at(k, N);
      if (a != b) out.push_back({N, k, a, b});
    }
    if (N < n_max) dec = tensor_step(dec, l);
  }
  return out;
}

}  // namespace latpath::tilting
