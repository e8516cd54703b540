#include "latpath/region.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace latpath::paths {

namespace {

bool step_allowed(const lattice::ModelSpec& model, long long from_x, long long to_x,
                  long long* weight = nullptr) {
  if (model.wall && from_x < *model.wall) return false;  // no steps exist there
  for (const auto& s : lattice::allowed_steps(model, from_x)) {
    if (s.to_x == to_x) {
      if (weight) *weight = s.weight;
      return true;
    }
  }
  return false;
}

// Columns that could step into x one level down: the two elementary
// neighbours plus the long-step source aimed at x, if the model has one.
std::vector<long long> pred_columns(const lattice::ModelSpec& model, long long x) {
  std::vector<long long> cand = {x - 1, x + 1};
  const long long src = x + 2 * model.l - 1;
  for (long long t : model.long_targets_from(src)) {
    if (t == x) {
      cand.push_back(src);
      break;
    }
  }
  return cand;
}

std::string point_str(const lattice::LatticePoint& p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.n) + ")";
}

using StepKey = std::tuple<long long, long long, long long, long long>;  // from_x, from_n, to_x, weight

std::set<StepKey> in_region_steps(const Region& r) {
  std::set<StepKey> out;
  for (const auto& p : r.points) {
    if (r.model.wall && p.x < *r.model.wall) continue;  // no steps left of the wall
    for (const auto& s : lattice::allowed_steps(r.model, p.x))
      if (r.contains({s.to_x, p.n + 1})) out.insert({p.x, p.n, s.to_x, s.weight});
  }
  return out;
}

}  // namespace

Region strip_region(const lattice::ModelSpec& model, long long strip_j, long long n_max) {
  if (strip_j < 1) throw std::domain_error("strip index must be >= 1");
  if (n_max < 0) throw std::domain_error("n_max must be >= 0");
  Region r;
  r.model = model;
  for (long long x = (strip_j - 1) * model.l - 1; x <= strip_j * model.l - 2; ++x)
    for (long long n = ((x % 2) + 2) % 2; n <= n_max; n += 2) r.points.insert({x, n});
  return r;
}

std::set<lattice::LatticePoint> boundary(const Region& region) {
  std::set<lattice::LatticePoint> out;
  if (region.points.empty()) return out;
  long long n_top = 0;
  for (const auto& p : region.points) n_top = std::max(n_top, p.n);
  // Support of the count table = the reachable points; steps of the path
  // diagram originate there, so only reachable outside points can make a
  // region point a boundary point.
  const CountTable reach = count_paths(region.model, n_top);
  for (const auto& p : region.points) {
    if (p.n <= 0) continue;
    for (long long px : pred_columns(region.model, p.x)) {
      const lattice::LatticePoint q{px, p.n - 1};
      if (region.contains(q)) continue;
      if (reach.at(px, p.n - 1) == 0) continue;
      if (step_allowed(region.model, px, p.x)) {
        out.insert(p);
        break;
      }
    }
  }
  return out;
}

bool check_congruent(const Region& a, const Region& b, const Translation& t) {
  std::set<lattice::LatticePoint> mapped;
  for (const auto& p : a.points) mapped.insert(t.apply(p));
  if (mapped != b.points) return false;
  std::set<StepKey> translated;
  for (const auto& [fx, fn, tx, w] : in_region_steps(a))
    translated.insert({fx + t.dx, fn + t.dn, tx + t.dx, w});
  // Set equality is the two-directional check: every A-step lands on a
  // B-step of the same weight and vice versa.
  return translated == in_region_steps(b);
}

std::map<lattice::LatticePoint, Int> counts_from_boundary(
    const Region& region, const std::map<lattice::LatticePoint, Int>& boundary_values) {
  const std::set<lattice::LatticePoint> bd = boundary(region);
  for (const auto& p : bd)
    if (!boundary_values.count(p))
      throw std::invalid_argument("incomplete boundary seed: missing value at " + point_str(p));
  for (const auto& [p, v] : boundary_values)
    if (!bd.count(p))
      throw std::invalid_argument("seed key " + point_str(p) +
                                  " is not a boundary point of the region");

  std::vector<lattice::LatticePoint> pts(region.points.begin(), region.points.end());
  std::sort(pts.begin(), pts.end(), [](const auto& u, const auto& v) {
    return std::tie(u.n, u.x) < std::tie(v.n, v.x);
  });
  std::map<lattice::LatticePoint, Int> out;
  for (const auto& p : pts) {
    if (auto it = boundary_values.find(p); it != boundary_values.end()) {
      out[p] = it->second;
      continue;
    }
    Int acc = 0;
    if (p.n > 0) {
      for (long long px : pred_columns(region.model, p.x)) {
        auto qi = out.find({px, p.n - 1});
        if (qi == out.end()) continue;  // outside the region: contributes nothing
        long long w = 0;
        if (step_allowed(region.model, px, p.x, &w)) acc += qi->second * w;
      }
    }
    out[p] = acc;
  }
  return out;
}

}  // namespace latpath::paths
