#include "latpath/lattice.hpp"

#include <algorithm>

namespace latpath::lattice {

const char* kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::Unrestricted: return "unrestricted";
    case ModelKind::WallOnly: return "wall_only";
    case ModelKind::SingleFilter: return "single_filter";
    case ModelKind::Auxiliary: return "auxiliary";
    case ModelKind::Uq: return "uq";
    case ModelKind::Custom: return "custom";
  }
  return "?";
}

namespace {

void require_modulus(long long l) {
  if (l < 3)
    throw std::domain_error("modulus l must be >= 3 (adjacent filter zones overlap below that)");
}

}  // namespace

ModelSpec ModelSpec::unrestricted(long long l) {
  require_modulus(l);
  ModelSpec m;
  m.l = l;
  m.kind = ModelKind::Unrestricted;
  return m;
}

ModelSpec ModelSpec::wall_only(long long l, long long a) {
  require_modulus(l);
  if (a > 0) throw std::domain_error("wall position must be <= 0");
  ModelSpec m;
  m.l = l;
  m.kind = ModelKind::WallOnly;
  m.wall = a;
  return m;
}

ModelSpec ModelSpec::single_filter(long long l, long long d, long long type) {
  require_modulus(l);
  if (d <= 0) throw std::domain_error("filter position must be > 0");
  if (type < 1) throw std::domain_error("filter type must be >= 1");
  ModelSpec m;
  m.l = l;
  m.kind = ModelKind::SingleFilter;
  m.filters[d] = type;
  return m;
}

ModelSpec ModelSpec::auxiliary(long long l) {
  require_modulus(l);
  ModelSpec m;
  m.l = l;
  m.kind = ModelKind::Auxiliary;
  m.wall = 0;
  m.periodic_filters = true;
  return m;
}

ModelSpec ModelSpec::uq(long long l) {
  ModelSpec m = auxiliary(l);
  m.kind = ModelKind::Uq;
  m.all_long = true;
  return m;
}

ModelSpec ModelSpec::custom(long long l, const std::vector<Restriction>& rs,
                            bool periodic, bool every_long) {
  require_modulus(l);
  ModelSpec m;
  m.l = l;
  m.kind = ModelKind::Custom;
  m.periodic_filters = periodic;
  m.all_long = every_long;
  for (const Restriction& r : rs) {
    if (const auto* w = std::get_if<WallLeft>(&r)) {
      if (m.wall) throw std::domain_error("at most one wall");
      if (w->d > 0) throw std::domain_error("wall position must be <= 0");
      m.wall = w->d;
    } else if (const auto* f = std::get_if<Filter>(&r)) {
      if (f->type < 1) throw std::domain_error("filter type must be >= 1");
      if (!m.filters.emplace(f->d, f->type).second)
        throw std::domain_error("duplicate filter column");
    } else {
      const auto& s = std::get<LongStepSource>(r);
      if (s.k < 1) throw std::domain_error("long-step family index must be >= 1");
      m.long_ks.insert(s.k);
    }
  }
  if (m.wall) {
    for (const auto& [d, t] : m.filters)
      if (d <= *m.wall) throw std::domain_error("filters must lie strictly right of the wall");
  }
  for (auto it = m.filters.begin(); it != m.filters.end(); ++it) {
    auto nx = std::next(it);
    if (nx != m.filters.end() && nx->first - it->first == 1)
      throw std::domain_error("adjacent filter columns overlap");
  }
  return m;
}

std::optional<long long> ModelSpec::filter_type_at(long long x) const {
  if (periodic_filters && x >= l - 1 && (x + 1) % l == 0) return 1;
  auto it = filters.find(x);
  if (it != filters.end()) return it->second;
  return std::nullopt;
}

std::vector<long long> ModelSpec::long_targets_from(long long x) const {
  std::vector<long long> out;
  // Sources sit at l(k+2) - 2 for k >= 1, i.e. at 3l-2, 4l-2, ...; in
  // particular 2l-2 has no long step.
  if (all_long && x >= 3 * l - 2 && (x + 2) % l == 0) out.push_back(x - (2 * l - 1));
  for (long long k : long_ks) {
    if (x == l * (k + 2) - 2) {
      long long t = l * k - 1;
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Restriction> ModelSpec::restrictions_up_to(long long x_max) const {
  std::vector<Restriction> out;
  if (wall) out.push_back(WallLeft{*wall});
  std::map<long long, long long> fs;
  if (periodic_filters)
    for (long long d = l - 1; d <= x_max; d += l) fs.emplace(d, 1);
  for (const auto& [d, t] : filters) fs.emplace(d, t);
  for (const auto& [d, t] : fs)
    if (d <= x_max) out.push_back(Filter{d, t});
  std::set<long long> ks = long_ks;
  if (all_long)
    for (long long k = 1; l * (k + 2) - 2 <= x_max; ++k) ks.insert(k);
  for (long long k : ks)
    if (l * (k + 2) - 2 <= x_max) out.push_back(LongStepSource{k});
  return out;
}

std::vector<WeightedStep> allowed_steps(const ModelSpec& model, long long x) {
  if (model.wall && x < *model.wall)
    throw std::domain_error("no lattice positions left of the wall");
  std::vector<WeightedStep> out;
  if (model.wall && x == *model.wall) {
    out.push_back({x, x + 1, 1});
  } else if (auto ft = model.filter_type_at(x)) {
    out.push_back({x, x + 1, *ft});
  } else if (model.filter_type_at(x - 1)) {
    out.push_back({x, x - 1, 2});
    out.push_back({x, x + 1, 1});
  } else {
    out.push_back({x, x - 1, 1});
    out.push_back({x, x + 1, 1});
  }
  for (long long t : model.long_targets_from(x)) out.push_back({x, t, 1});
  return out;
}

long long strip_index(long long M, long long l) {
  require_modulus(l);
  if (M < 0) throw std::domain_error("strip index is defined for M >= 0 only");
  return (M + 1) / l + 1;
}

}  // namespace latpath::lattice
