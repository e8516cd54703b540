#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

namespace latpath::lattice {

// Point on the parity sublattice {(x, n) : x + n even, n >= 0}. n is the
// level, i.e. the number of steps taken from the origin.
struct LatticePoint {
  long long x = 0;
  long long n = 0;

  bool parity_ok() const { return (x + n) % 2 == 0; }
  auto operator<=>(const LatticePoint&) const = default;
};

// A single step. The level always increases by exactly 1, so only the x
// endpoints are stored. Elementary steps have |to_x - from_x| = 1, long steps
// |to_x - from_x| = 2l - 1.
struct WeightedStep {
  long long from_x = 0;
  long long to_x = 0;
  long long weight = 1;

  auto operator<=>(const WeightedStep&) const = default;
};

// Left wall at column d: from x = d only the rightward step (weight 1)
// remains, and no positions exist left of d.
struct WallLeft {
  long long d = 0;
};

// Filter of the given type at column d: from x = d only the rightward step
// survives, carrying the type as its weight; from x = d + 1 the step back to
// d carries weight 2.
struct Filter {
  long long d = 0;
  long long type = 1;
};

// Long-step family S(k): one extra weight-1 step per level from
// x = l(k+2) - 2 down to x = lk - 1 (a jump of 2l - 1 columns).
struct LongStepSource {
  long long k = 1;
};

using Restriction = std::variant<WallLeft, Filter, LongStepSource>;

enum class ModelKind { Unrestricted, WallOnly, SingleFilter, Auxiliary, Uq, Custom };

const char* kind_name(ModelKind k);

// A full lattice-path model: modulus l plus the restrictions in force. The
// periodic filter family (type 1 at every nl - 1, n >= 1) and the full
// long-step family (S(k) for every k >= 1) are infinite, so they are carried
// as flags and materialized lazily; only finitely many matter for any query
// with bounded x and N.
struct ModelSpec {
  long long l = 3;
  ModelKind kind = ModelKind::Custom;
  std::optional<long long> wall;           // leftmost allowed column, if any
  std::map<long long, long long> filters;  // column -> filter type
  bool periodic_filters = false;           // type-1 filters at every nl - 1
  std::set<long long> long_ks;             // explicit long-step families S(k)
  bool all_long = false;                   // S(k) for every k >= 1

  static ModelSpec unrestricted(long long l);
  static ModelSpec wall_only(long long l, long long a = 0);
  static ModelSpec single_filter(long long l, long long d, long long type = 1);
  static ModelSpec auxiliary(long long l);
  static ModelSpec uq(long long l);
  // Arbitrary restriction list (used for hybrid models such as a two-filter
  // band or the auxiliary model with a single long-step family).
  static ModelSpec custom(long long l, const std::vector<Restriction>& rs,
                          bool periodic = false, bool every_long = false);

  // Filter type at column x, if a filter sits there.
  std::optional<long long> filter_type_at(long long x) const;
  // Targets of long steps leaving column x (empty for almost all x).
  std::vector<long long> long_targets_from(long long x) const;
  // The restrictions in force for columns <= x_max, with the lazy families
  // materialized up to that bound.
  std::vector<Restriction> restrictions_up_to(long long x_max) const;
};

// The exact outgoing step set at column x. Depends only on (model, x), never
// on the level. Throws std::domain_error for positions left of the wall.
std::vector<WeightedStep> allowed_steps(const ModelSpec& model, long long x);

// Strip number j of column M: the unique j with (j-1)l - 1 <= M <= jl - 2,
// i.e. floor((M+1)/l) + 1. Defined for M >= 0.
long long strip_index(long long M, long long l);

}  // namespace latpath::lattice
