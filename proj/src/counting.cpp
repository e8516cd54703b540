#include "latpath/counting.hpp"

#include <algorithm>
#include <string>

namespace latpath::paths {

Int CountTable::at(long long x, long long n) const {
  if (n < 0 || n >= static_cast<long long>(levels.size())) return 0;
  auto it = levels[n].find(x);
  return it == levels[n].end() ? Int(0) : it->second;
}

CountTable count_paths(const lattice::ModelSpec& model, long long n_max) {
  if (n_max < 0) throw std::domain_error("n_max must be >= 0");
  CountTable t;
  t.l = model.l;
  t.kind = model.kind;
  t.levels.reserve(n_max + 1);
  t.levels.push_back({{0, Int(1)}});
  for (long long n = 0; n < n_max; ++n) {
    std::map<long long, Int> next;
    for (const auto& [x, c] : t.levels.back())
      for (const auto& s : lattice::allowed_steps(model, x)) next[s.to_x] += c * s.weight;
    t.levels.push_back(std::move(next));
  }
  return t;
}

Int weighted_count(const lattice::ModelSpec& model, long long M, long long N) {
  if (N < 0 || (M + N) % 2 != 0)
    throw std::domain_error("weighted_count: need N >= 0 and M + N even");
  if (model.wall && M < *model.wall) return 0;
  return count_paths(model, N).at(M, N);
}

namespace {

struct Enumerator {
  const lattice::ModelSpec& model;
  long long M;
  long long N;
  long long max_left;  // largest single-step move to the left
  std::vector<EnumeratedPath> out;
  std::vector<long long> xs{0};

  void dfs(long long x, long long n, const Int& w) {
    if (n == N) {
      if (x == M) out.push_back({xs, w});
      return;
    }
    const long long remaining = N - n;
    if (M - x > remaining) return;             // rightward speed is 1
    if (x - M > remaining * max_left) return;  // leftward speed is bounded too
    for (const auto& s : lattice::allowed_steps(model, x)) {
      xs.push_back(s.to_x);
      dfs(s.to_x, n + 1, w * s.weight);
      xs.pop_back();
    }
  }
};

}  // namespace

std::vector<EnumeratedPath> enumerate_paths(const lattice::ModelSpec& model,
                                            long long M, long long N, long long guard) {
  if (N < 0 || (M + N) % 2 != 0)
    throw std::domain_error("enumerate_paths: need N >= 0 and M + N even");
  if (N > guard)
    throw EnumerationGuardError("exhaustive enumeration refused: N = " + std::to_string(N) +
                                " exceeds the guard level " + std::to_string(guard));
  const bool has_long = model.all_long || !model.long_ks.empty();
  Enumerator e{model, M, N, has_long ? 2 * model.l - 1 : 1, {}, {0}};
  e.dfs(0, 0, 1);
  std::sort(e.out.begin(), e.out.end(),
            [](const EnumeratedPath& a, const EnumeratedPath& b) { return a.xs < b.xs; });
  return e.out;
}

}  // namespace latpath::paths
