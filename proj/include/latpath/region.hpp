#pragma once

#include <map>
#include <set>

#include "latpath/counting.hpp"

namespace latpath::paths {

// A finite set of lattice points together with the model whose step rules it
// lives under.
struct Region {
  std::set<lattice::LatticePoint> points;
  lattice::ModelSpec model;

  bool contains(const lattice::LatticePoint& p) const { return points.count(p) != 0; }
};

// Lattice translation. dx + dn must be even for lattice points to map to
// lattice points; every use in the library has dn = 0.
struct Translation {
  long long dx = 0;
  long long dn = 0;

  lattice::LatticePoint apply(const lattice::LatticePoint& p) const {
    return {p.x + dx, p.n + dn};
  }
  Translation inverse() const { return {-dx, -dn}; }
};

// All parity-valid points of the j-th strip ((j-1)l - 1 <= x <= jl - 2) with
// levels 0..n_max. Columns left of a wall are kept in the point set (they
// simply carry no steps), so translated strips compare honestly.
Region strip_region(const lattice::ModelSpec& model, long long strip_j, long long n_max);

// The boundary: region points receiving an allowed step from a point outside
// the region that is itself reachable from the origin (i.e. a vertex of the
// path diagram). Level-0 points are never boundary; there is no level -1.
std::set<lattice::LatticePoint> boundary(const Region& region);

// True iff t maps A onto B as a point set and induces a weight-preserving
// bijection of in-region steps, checked in both directions.
bool check_congruent(const Region& a, const Region& b, const Translation& t);

// Forward recursion over the region seeded with the boundary values. The seed
// must be defined on exactly boundary(region); unseeded points with no
// in-region ancestors come out as zero. Seeded from a global count table this
// reproduces that table on the region.
std::map<lattice::LatticePoint, Int> counts_from_boundary(
    const Region& region,
    const std::map<lattice::LatticePoint, Int>& boundary_values);

}  // namespace latpath::paths
