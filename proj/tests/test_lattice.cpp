#include <algorithm>
#include <set>
#include <tuple>

#include "doctest.h"
#include "latpath/lattice.hpp"

using namespace latpath::lattice;

namespace {

// Steps as a set of (to_x, weight), ignoring emission order.
std::set<std::pair<long long, long long>> step_set(const ModelSpec& m, long long x) {
  std::set<std::pair<long long, long long>> out;
  for (const auto& s : allowed_steps(m, x)) {
    CHECK(s.from_x == x);
    out.insert({s.to_x, s.weight});
  }
  return out;
}

using S = std::set<std::pair<long long, long long>>;

}  // namespace

TEST_CASE("step resolution in the full model") {
  const ModelSpec m = ModelSpec::uq(3);
  CHECK(step_set(m, 2) == S{{3, 1}});                  // filter column: right only
  CHECK(step_set(m, 3) == S{{4, 1}, {2, 2}});          // next to a filter: left step doubled
  CHECK(step_set(m, 7) == S{{6, 1}, {8, 1}, {2, 1}});  // long-step source 3l-2
  CHECK(step_set(m, 0) == S{{1, 1}});                  // wall column: right only
  CHECK(step_set(m, 1) == S{{0, 1}, {2, 1}});
  CHECK_THROWS_AS(allowed_steps(m, -1), std::domain_error);
}

TEST_CASE("unrestricted and wall-only step sets") {
  const ModelSpec u = ModelSpec::unrestricted(5);
  CHECK(step_set(u, 0) == S{{-1, 1}, {1, 1}});
  CHECK(step_set(u, -7) == S{{-8, 1}, {-6, 1}});
  const ModelSpec w = ModelSpec::wall_only(3, -2);
  CHECK(step_set(w, -2) == S{{-1, 1}});
  CHECK(step_set(w, -1) == S{{-2, 1}, {0, 1}});
  CHECK_THROWS_AS(allowed_steps(w, -3), std::domain_error);
}

TEST_CASE("filter type is carried as the crossing weight") {
  const ModelSpec f = ModelSpec::single_filter(3, 2, 4);
  CHECK(step_set(f, 2) == S{{3, 4}});
  CHECK(step_set(f, 3) == S{{2, 2}, {4, 1}});
  CHECK(step_set(f, 1) == S{{0, 1}, {2, 1}});  // no wall in this model
  CHECK(step_set(f, 0) == S{{-1, 1}, {1, 1}});
}

TEST_CASE("long-step sources sit at l(k+2)-2 with targets lk-1") {
  for (long long l : {3, 5, 7}) {
    const ModelSpec m = ModelSpec::uq(l);
    for (long long x = 0; x <= 10 * l; ++x) {
      const auto ts = m.long_targets_from(x);
      const bool is_source = x >= 3 * l - 2 && (x + 2) % l == 0;
      CHECK(ts.size() == (is_source ? 1u : 0u));
      if (is_source) CHECK(ts[0] == x - (2 * l - 1));
    }
    // in particular 2l-2 (the would-be k = 0 source) has no long step
    CHECK(m.long_targets_from(2 * l - 2).empty());
  }
}

TEST_CASE("rules compose: a column can carry a filter and a long step at once") {
  const ModelSpec m =
      ModelSpec::custom(3, {Filter{7, 1}, LongStepSource{1}});  // source of S(1) is 7
  CHECK(step_set(m, 7) == S{{8, 1}, {2, 1}});  // right-only from the filter, plus the long step
}

TEST_CASE("steps depend on the column only") {
  const ModelSpec m = ModelSpec::uq(3);
  const auto a = allowed_steps(m, 5);
  const auto b = allowed_steps(m, 5);
  CHECK(a == b);
}

TEST_CASE("strip index") {
  CHECK(strip_index(0, 3) == 1);
  CHECK(strip_index(1, 3) == 1);
  CHECK(strip_index(2, 3) == 2);
  CHECK(strip_index(8, 3) == 4);
  // the strip bounds (j-1)l - 1 <= M <= jl - 2 characterize the index
  for (long long l : {3, 5}) {
    for (long long M = 0; M <= 40; ++M) {
      const long long j = strip_index(M, l);
      CHECK((j - 1) * l - 1 <= M);
      CHECK(M <= j * l - 2);
    }
  }
  CHECK_THROWS_AS(strip_index(-1, 3), std::domain_error);
}

TEST_CASE("model construction guards") {
  CHECK_THROWS_AS(ModelSpec::uq(2), std::domain_error);
  CHECK_THROWS_AS(ModelSpec::wall_only(3, 1), std::domain_error);
  CHECK_THROWS_AS(ModelSpec::single_filter(3, 0, 1), std::domain_error);
  CHECK_THROWS_AS(ModelSpec::single_filter(3, 2, 0), std::domain_error);
  CHECK_THROWS_AS(ModelSpec::custom(3, {Filter{4, 1}, Filter{5, 1}}), std::domain_error);
  CHECK_THROWS_AS(ModelSpec::custom(3, {WallLeft{0}, Filter{-1, 1}}), std::domain_error);
  CHECK_THROWS_AS(ModelSpec::custom(3, {LongStepSource{0}}), std::domain_error);
}

TEST_CASE("restriction materialization up to a bound") {
  const ModelSpec m = ModelSpec::uq(3);
  const auto rs = m.restrictions_up_to(10);
  long long walls = 0, filters = 0, longs = 0;
  for (const auto& r : rs) {
    if (std::holds_alternative<WallLeft>(r)) ++walls;
    if (const auto* f = std::get_if<Filter>(&r)) {
      ++filters;
      CHECK((f->d + 1) % 3 == 0);
      CHECK(f->type == 1);
    }
    if (const auto* s = std::get_if<LongStepSource>(&r)) {
      ++longs;
      CHECK(3 * (s->k + 2) - 2 <= 10);
    }
  }
  CHECK(walls == 1);
  CHECK(filters == 3);  // columns 2, 5, 8
  CHECK(longs == 2);    // S(1) and S(2), sources 7 and 10
}
