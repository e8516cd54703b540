#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "latpath/exact.hpp"
#include "latpath/lattice.hpp"

namespace latpath::paths {

// Weighted path counts from the origin, level by level: levels[n][x] is the
// weighted number of n-step paths (0,0) -> (x,n). Level 0 is {0: 1}; absent
// keys mean zero.
struct CountTable {
  long long l = 3;
  lattice::ModelKind kind = lattice::ModelKind::Custom;
  std::vector<std::map<long long, Int>> levels;

  Int at(long long x, long long n) const;  // 0 when absent or out of range
};

// Forward dynamic programming over the step rules up to level n_max.
CountTable count_paths(const lattice::ModelSpec& model, long long n_max);

// Z((0,0) -> (M,N)) under the model's restrictions. Throws on parity
// mismatch (M + N must be even) or N < 0.
Int weighted_count(const lattice::ModelSpec& model, long long M, long long N);

// One exhaustively enumerated path: the visited columns (xs[0] = 0,
// xs[N] = M) and the product of its step weights.
struct EnumeratedPath {
  std::vector<long long> xs;
  Int weight;
};

inline constexpr long long kEnumerationGuard = 20;

// Thrown when an exhaustive enumeration is refused because N exceeds the
// guard level.
struct EnumerationGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every distinct descending path (0,0) -> (M,N), in lexicographic order of
// the column sequence. The weight-sum over the result equals weighted_count.
std::vector<EnumeratedPath> enumerate_paths(const lattice::ModelSpec& model,
                                            long long M, long long N,
                                            long long guard = kEnumerationGuard);

}  // namespace latpath::paths
