// latpath: exact weighted lattice-path counting, tensor-power decomposition
// and the verification suites, behind one CLI.

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latpath/closed_form.hpp"
#include "latpath/counting.hpp"
#include "latpath/region.hpp"
#include "latpath/tilting.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace latpath;
using namespace latpath::forms;
using namespace latpath::paths;
using lattice::Filter;
using lattice::LatticePoint;
using lattice::LongStepSource;
using lattice::ModelSpec;

std::string dec(const Int& v) { return v.str(); }

lattice::ModelSpec make_model(const std::string& name, long long l, long long d, long long type) {
  if (name == "unrestricted") return ModelSpec::unrestricted(l);
  if (name == "wall") return ModelSpec::wall_only(l);
  if (name == "filter") return ModelSpec::single_filter(l, d, type);
  if (name == "auxiliary") return ModelSpec::auxiliary(l);
  return ModelSpec::uq(l);
}

json row_to_json(const std::map<long long, Int>& row) {
  json out = json::object();
  for (const auto& [x, v] : row) out[std::to_string(x)] = dec(v);
  return out;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// ---------------------------------------------------------------- count ----

struct CountArgs {
  std::string model = "uq";
  long long l = 3;
  long long n = 0;
  std::optional<long long> n_max;
  long long d = 2, type = 1;
  std::string format = "json";
  bool all_levels = false;
};

int run_count(const CountArgs& a) {
  const ModelSpec model = make_model(a.model, a.l, a.d, a.type);
  const long long top = a.all_levels && a.n_max ? *a.n_max : a.n;
  const CountTable t = count_paths(model, top);
  if (a.format == "json") {
    json j;
    j["l"] = a.l;
    j["model"] = a.model;
    if (a.all_levels) {
      j["n_max"] = top;
      json levels = json::object();
      for (long long n = 0; n <= top; ++n)
        levels[std::to_string(n)] = row_to_json(t.levels[static_cast<size_t>(n)]);
      j["levels"] = levels;
    } else {
      j["N"] = top;
      j["counts"] = row_to_json(t.levels[static_cast<size_t>(top)]);
    }
    emit(j);
  } else if (a.format == "csv") {
    std::cout << "l,model,N,M,count\n";
    const long long lo = a.all_levels ? 0 : top;
    for (long long n = lo; n <= top; ++n)
      for (const auto& [x, v] : t.levels[static_cast<size_t>(n)])
        std::cout << a.l << ',' << a.model << ',' << n << ',' << x << ',' << dec(v) << '\n';
  } else {
    std::cout << "model " << a.model << ", l = " << a.l << '\n';
    const long long lo = a.all_levels ? 0 : top;
    for (long long n = lo; n <= top; ++n) {
      std::cout << "N = " << n << ":";
      for (const auto& [x, v] : t.levels[static_cast<size_t>(n)])
        std::cout << "  (" << x << ") " << dec(v);
      std::cout << '\n';
    }
  }
  return 0;
}

// ------------------------------------------------------------ decompose ----

struct DecomposeArgs {
  long long l = 3;
  long long n = 0;
  bool dims = false;
  std::string format = "json";
};

int run_decompose(const DecomposeArgs& a) {
  const tilting::Decomposition dec_n = tilting::decompose(a.n, a.l);
  Int dim_check = 0;
  for (const auto& [k, m] : dec_n.mult) dim_check += m * tilting::tilting_dim(k, a.l);
  const Int pow2 = Int(1) << a.n;
  if (a.format == "json") {
    json j;
    j["l"] = a.l;
    j["N"] = a.n;
    j["mults"] = row_to_json(dec_n.mult);
    if (a.dims) {
      j["dim_check"] = dec(dim_check);
      j["pow2"] = dec(pow2);
    }
    emit(j);
  } else if (a.format == "csv") {
    std::cout << "l,model,N,M,count\n";
    for (const auto& [k, m] : dec_n.mult)
      std::cout << a.l << ",uq," << a.n << ',' << k << ',' << dec(m) << '\n';
  } else {
    std::cout << "tensor power " << a.n << ", l = " << a.l << '\n';
    for (const auto& [k, m] : dec_n.mult) std::cout << "  T(" << k << ") x " << dec(m) << '\n';
    if (a.dims)
      std::cout << "dimension total " << dec(dim_check) << " (2^N = " << dec(pow2) << ")\n";
  }
  return a.dims && dim_check != pow2 ? 1 : 0;
}

// ------------------------------------------------------------ enumerate ----

struct EnumerateArgs {
  std::string model = "uq";
  long long l = 3;
  long long m = 0;
  long long n = 0;
  long long d = 2, type = 1;
  long long guard = kEnumerationGuard;
  std::string format = "json";
};

int run_enumerate(const EnumerateArgs& a) {
  const ModelSpec model = make_model(a.model, a.l, a.d, a.type);
  const auto paths = enumerate_paths(model, a.m, a.n, a.guard);
  Int total = 0;
  for (const auto& p : paths) total += p.weight;
  if (a.format == "json") {
    json j;
    j["l"] = a.l;
    j["model"] = a.model;
    j["M"] = a.m;
    j["N"] = a.n;
    j["guard"] = a.guard;
    j["total"] = dec(total);
    json arr = json::array();
    for (const auto& p : paths) {
      json e;
      e["xs"] = p.xs;
      e["weight"] = dec(p.weight);
      arr.push_back(e);
    }
    j["paths"] = arr;
    emit(j);
  } else if (a.format == "csv") {
    std::cout << "l,model,N,M,count\n"
              << a.l << ',' << a.model << ',' << a.n << ',' << a.m << ',' << dec(total) << '\n';
  } else {
    std::cout << paths.size() << " path(s) to (" << a.m << ", " << a.n << "), weighted total "
              << dec(total) << '\n';
    for (const auto& p : paths) {
      for (size_t i = 0; i < p.xs.size(); ++i) std::cout << (i ? " " : "") << p.xs[i];
      std::cout << "   weight " << dec(p.weight) << '\n';
    }
  }
  return 0;
}

// ------------------------------------------------------------- boundary ----

struct BoundaryArgs {
  std::string model = "auxiliary";
  long long l = 3;
  long long strip = 2;
  long long n_max = 8;
  long long d = 2, type = 1;
  std::string format = "json";
};

int run_boundary(const BoundaryArgs& a) {
  const ModelSpec model = make_model(a.model, a.l, a.d, a.type);
  const Region region = strip_region(model, a.strip, a.n_max);
  const auto bd = boundary(region);
  if (a.format == "json") {
    json j;
    j["l"] = a.l;
    j["model"] = a.model;
    j["strip"] = a.strip;
    j["n_max"] = a.n_max;
    json arr = json::array();
    for (const auto& p : bd) {
      json e;
      e["x"] = p.x;
      e["n"] = p.n;
      arr.push_back(e);
    }
    j["boundary"] = arr;
    emit(j);
  } else if (a.format == "csv") {
    const CountTable t = count_paths(model, a.n_max);
    std::cout << "l,model,N,M,count\n";
    for (const auto& p : bd)
      std::cout << a.l << ',' << a.model << ',' << p.n << ',' << p.x << ','
                << dec(t.at(p.x, p.n)) << '\n';
  } else {
    std::cout << "strip " << a.strip << " of model " << a.model << " (l = " << a.l
              << "), levels 0.." << a.n_max << ": " << bd.size() << " boundary point(s)\n";
    for (const auto& p : bd) std::cout << "  (" << p.x << ", " << p.n << ")\n";
  }
  return 0;
}

// --------------------------------------------------------------- verify ----

struct Counterexample {
  std::string suite;
  long long l = 0, M = 0, N = 0;
  std::string expected, got, note;
};

struct VerifyState {
  std::vector<std::pair<std::string, bool>> results;
  std::optional<Counterexample> first;

  // returns false so suite bodies can `return st.fail(...)`
  bool fail(Counterexample ce) {
    if (!first) first = std::move(ce);
    return false;
  }
};

struct VerifyArgs {
  std::vector<std::string> suites;
  std::vector<long long> ls{3, 5, 7};
  long long n_max = 20;
  long long guard = kEnumerationGuard;
  std::string format = "json";
};

bool suite_closed_form(const VerifyArgs& a, VerifyState& st) {
  for (long long l : a.ls) {
    const CountTable uq_t = count_paths(ModelSpec::uq(l), a.n_max);
    const CountTable aux_t = count_paths(ModelSpec::auxiliary(l), a.n_max);
    for (long long N = 0; N <= a.n_max; ++N)
      for (long long M = N % 2; M <= N; M += 2) {
        if (uq_multiplicity(l, M, N) != uq_t.at(M, N))
          return st.fail({"closed-form", l, M, N, dec(uq_t.at(M, N)),
                          dec(uq_multiplicity(l, M, N)), "full model"});
        if (aux_strip_multiplicity(l, M, N) != aux_t.at(M, N))
          return st.fail({"closed-form", l, M, N, dec(aux_t.at(M, N)),
                          dec(aux_strip_multiplicity(l, M, N)), "auxiliary model"});
      }
  }
  return true;
}

bool suite_f1(const VerifyArgs& a, VerifyState& st) {
  for (long long l : a.ls)
    for (long long N = 0; N <= a.n_max; ++N)
      for (long long M = N % 2; M <= N; M += 2) {
        const long long k = lattice::strip_index(M, l) - 1;
        if (k < 1) continue;
        const Int expect = uq_multiplicity(l, M, N);
        const Int got = strip_sum_f1(l, k, M, N);
        if (got != expect) return st.fail({"f1", l, M, N, dec(expect), dec(got), ""});
      }
  std::vector<Int> cat{1};
  for (long long j = 0; j <= 15; ++j) {
    if (ballot_f(2 * j, 0) != cat[static_cast<size_t>(j)])
      return st.fail({"f1", 0, j, 0, dec(cat[static_cast<size_t>(j)]), dec(ballot_f(2 * j, 0)),
                      "Catalan coefficient"});
    Int next = 0;
    for (long long i = 0; i <= j; ++i)
      next += cat[static_cast<size_t>(i)] * cat[static_cast<size_t>(j - i)];
    cat.push_back(next);
  }
  return true;
}

bool suite_identities(const VerifyArgs& a, VerifyState& st) {
  for (long long k = 1; k <= 20; ++k) {
    for (long long n = 1; n <= a.n_max; ++n)
      if (Int r = identity_onee(n, k); r != 0)
        return st.fail({"identities", 0, k, n, "0", dec(r), "first binomial identity"});
    for (long long n = 2; n <= a.n_max; ++n) {
      if (Int r = identity_twoo(n, k); r != 0)
        return st.fail({"identities", 0, k, n, "0", dec(r), "second binomial identity"});
      if (Int r = identity_q(n, k); r != 0)
        return st.fail({"identities", 0, k, n, "0", dec(r), "ballot identity"});
    }
  }
  return true;
}

bool suite_wz(const VerifyArgs& a, VerifyState& st) {
  const long long top = std::min<long long>(15, a.n_max);
  for (WzIdentity which : {WzIdentity::onee, WzIdentity::twoo})
    for (long long k = 1; k <= 10; ++k)
      for (long long n = 2; n <= top; ++n)
        for (long long j = 0; j <= n; ++j) {
          const char* name = which == WzIdentity::onee ? "first" : "second";
          try {
            const Rat r = wz_certificate_check(which, n, j, k);
            if (r != 0)
              return st.fail({"wz", 0, k, n, "0", r.str(),
                              std::string(name) + " certificate, j=" + std::to_string(j)});
          } catch (const WzPoleError& e) {
            if (j != n)
              return st.fail({"wz", 0, k, n, "pole only at j=n", e.factor,
                              std::string(name) + " certificate, j=" + std::to_string(j)});
          }
        }
  return true;
}

bool suite_oracle(const VerifyArgs& a, VerifyState& st) {
  const long long top = std::min(a.n_max, a.guard);
  for (long long l : a.ls) {
    const std::vector<std::pair<std::string, ModelSpec>> models{
        {"unrestricted", ModelSpec::unrestricted(l)},
        {"wall", ModelSpec::wall_only(l)},
        {"filter", ModelSpec::single_filter(l, 2, 1)},
        {"auxiliary", ModelSpec::auxiliary(l)},
        {"uq", ModelSpec::uq(l)}};
    for (const auto& [name, m] : models)
      for (long long N = 0; N <= top; ++N)
        for (long long M = -N; M <= N; M += 2) {
          Int s = 0;
          for (const auto& p : enumerate_paths(m, M, N, a.guard)) s += p.weight;
          const Int expect = weighted_count(m, M, N);
          if (s != expect) return st.fail({"oracle", l, M, N, dec(expect), dec(s), name});
        }
  }
  return true;
}

bool suite_long_step(const VerifyArgs& a, VerifyState& st) {
  for (long long l : a.ls)
    for (long long k = 1; k <= 2; ++k) {
      const long long n_max = l * (k + 4) - 2;
      const ModelSpec base =
          ModelSpec::custom(l, {Filter{l * k - 1, 1}, Filter{l * (k + 2) - 1, 1}});
      const ModelSpec with_long = ModelSpec::custom(
          l, {Filter{l * k - 1, 1}, Filter{l * (k + 2) - 1, 1}, LongStepSource{k}});
      const CountTable tz = count_paths(base, n_max);
      const CountTable tzp = count_paths(with_long, n_max);
      for (long long N = 0; N <= n_max; ++N)
        for (long long M = l * k - 1; M <= l * (k + 2) - 2; ++M) {
          if ((M + N) % 2 != 0) continue;
          if (N <= M + 2 * l - 2 && tzp.at(M, N) != tz.at(M, N))
            return st.fail({"long-step", l, M, N, dec(tz.at(M, N)), dec(tzp.at(M, N)),
                            "identical region, k=" + std::to_string(k)});
          const Int want = tz.at(M, N) + tz.at(M + 2 * l, N);
          if (M + 2 * l <= N && tzp.at(M, N) != want)
            return st.fail({"long-step", l, M, N, dec(want), dec(tzp.at(M, N)),
                            "shifted region, k=" + std::to_string(k)});
        }
    }
  return true;
}

bool suite_dims(const VerifyArgs& a, VerifyState& st) {
  for (long long l : a.ls) {
    const tilting::DimTable dt = tilting::derive_dim_table(l, 10 * l);
    for (const auto& [x, d] : dt.dims)
      if (d != tilting::tilting_dim(x, l))
        return st.fail({"dims", l, x, 0, dec(tilting::tilting_dim(x, l)), dec(d),
                        "propagated dimension"});
    tilting::Decomposition dec_n = tilting::decompose(0, l);
    for (long long N = 0; N <= a.n_max; ++N) {
      Int total = 0;
      for (const auto& [k, m] : dec_n.mult) total += m * tilting::tilting_dim(k, l);
      if (total != Int(1) << N)
        return st.fail({"dims", l, 0, N, dec(Int(1) << N), dec(total), "conservation"});
      dec_n = tilting::tensor_step(dec_n, l);
    }
  }
  return true;
}

bool suite_routes(const VerifyArgs& a, VerifyState& st) {
  for (long long l : a.ls) {
    const auto mismatches = tilting::verify_against_paths(a.n_max, l);
    if (!mismatches.empty()) {
      const auto& m = mismatches.front();
      return st.fail({"routes", l, m.k, m.N, dec(m.from_paths), dec(m.from_recursion),
                      "recursion vs table"});
    }
    tilting::Decomposition dec_n = tilting::decompose(0, l);
    for (long long N = 0; N <= a.n_max; ++N) {
      for (const auto& [k, m] : dec_n.mult)
        if (uq_multiplicity(l, k, N) != m)
          return st.fail(
              {"routes", l, k, N, dec(m), dec(uq_multiplicity(l, k, N)), "closed form"});
      if (N < a.n_max) dec_n = tilting::tensor_step(dec_n, l);
    }
  }
  return true;
}

bool suite_congruence(const VerifyArgs& a, VerifyState& st) {
  const ModelSpec two = ModelSpec::custom(3, {Filter{2, 1}, Filter{8, 1}});
  Region band_a, band_b;
  band_a.model = two;
  band_b.model = two;
  for (long long x = 2; x <= 7; ++x)
    for (long long n = ((x % 2) + 2) % 2; n <= 12; n += 2) {
      band_a.points.insert({x, n});
      band_b.points.insert({x + 6, n});
    }
  if (!check_congruent(band_a, band_b, {6, 0}))
    return st.fail({"congruence", 3, 6, 0, "congruent", "not congruent", "filter band shift"});
  const ModelSpec aux3 = ModelSpec::auxiliary(3);
  if (check_congruent(strip_region(aux3, 1, 12), strip_region(aux3, 3, 12), {6, 0}))
    return st.fail(
        {"congruence", 3, 6, 0, "not congruent", "congruent", "wall strip vs filter strip"});
  const long long top = std::min<long long>(12, a.n_max);
  for (long long l : a.ls) {
    const ModelSpec aux = ModelSpec::auxiliary(l);
    const CountTable t = count_paths(aux, top);
    const Region strip2 = strip_region(aux, 2, top);
    std::map<LatticePoint, Int> seed;
    for (const auto& p : boundary(strip2)) seed[p] = t.at(p.x, p.n);
    const auto got = counts_from_boundary(strip2, seed);
    for (const auto& p : strip2.points)
      if (got.at(p) != t.at(p.x, p.n))
        return st.fail({"congruence", l, p.x, p.n, dec(t.at(p.x, p.n)), dec(got.at(p)),
                        "strip recount from boundary"});
  }
  return true;
}

int run_verify(const VerifyArgs& a) {
  using SuiteFn = bool (*)(const VerifyArgs&, VerifyState&);
  const std::vector<std::pair<std::string, SuiteFn>> all{
      {"closed-form", suite_closed_form}, {"f1", suite_f1},
      {"identities", suite_identities},   {"wz", suite_wz},
      {"oracle", suite_oracle},           {"long-step", suite_long_step},
      {"dims", suite_dims},               {"routes", suite_routes},
      {"congruence", suite_congruence}};
  VerifyState st;
  for (const auto& [name, fn] : all) {
    if (!a.suites.empty() &&
        std::find(a.suites.begin(), a.suites.end(), name) == a.suites.end())
      continue;
    st.results.emplace_back(name, fn(a, st));
  }
  const bool ok =
      std::all_of(st.results.begin(), st.results.end(), [](const auto& r) { return r.second; });
  if (a.format == "json") {
    json j;
    j["n_max"] = a.n_max;
    j["l"] = a.ls;
    json suites = json::object();
    for (const auto& [name, passed] : st.results) suites[name] = passed ? "pass" : "fail";
    j["suites"] = suites;
    if (st.first) {
      json ce;
      ce["suite"] = st.first->suite;
      ce["l"] = st.first->l;
      ce["M"] = st.first->M;
      ce["N"] = st.first->N;
      ce["expected"] = st.first->expected;
      ce["got"] = st.first->got;
      if (!st.first->note.empty()) ce["note"] = st.first->note;
      j["counterexample"] = ce;
    }
    j["ok"] = ok;
    emit(j);
  } else if (a.format == "csv") {
    std::cout << "suite,status\n";
    for (const auto& [name, passed] : st.results)
      std::cout << name << ',' << (passed ? "pass" : "fail") << '\n';
  } else {
    for (const auto& [name, passed] : st.results)
      std::cout << name << ": " << (passed ? "pass" : "fail") << '\n';
  }
  if (!ok && st.first) {
    const auto& c = *st.first;
    std::cerr << "first counterexample: (" << c.suite << ", l=" << c.l << ", M=" << c.M
              << ", N=" << c.N << ", expected=" << c.expected << ", got=" << c.got << ")"
              << (c.note.empty() ? "" : " [" + c.note + "]") << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting of weighted descending lattice paths and the tensor-power "
               "decompositions they compute"};
  app.require_subcommand(1);

  const std::vector<std::string> model_names{"unrestricted", "wall", "filter", "auxiliary", "uq"};
  const std::vector<std::string> format_names{"json", "csv", "pretty"};
  const std::vector<std::string> suite_names{"closed-form", "f1",        "identities",
                                             "wz",          "oracle",    "long-step",
                                             "dims",        "routes",    "congruence"};

  int rc = 0;

  CountArgs ca;
  auto* count = app.add_subcommand("count", "weighted path counts at a level (or all levels)");
  count->add_option("--model", ca.model, "step-rule family")->check(CLI::IsMember(model_names));
  count->add_option("--l", ca.l, "modulus l >= 3");
  auto* count_n = count->add_option("--n", ca.n, "level N (required unless --all-levels)");
  count->add_option("--n-max", ca.n_max, "level cap for --all-levels");
  count->add_option("--d", ca.d, "filter column (filter model)");
  count->add_option("--type", ca.type, "filter type (filter model)");
  count->add_flag("--all-levels", ca.all_levels, "emit every level up to the cap");
  count->add_option("--format", ca.format, "output format")->check(CLI::IsMember(format_names));
  count->callback([&] {
    if (!ca.all_levels && count_n->count() == 0) throw CLI::RequiredError("--n");
    if (ca.all_levels && !ca.n_max && count_n->count() == 0) throw CLI::RequiredError("--n-max");
    rc = run_count(ca);
  });

  DecomposeArgs da;
  auto* dco = app.add_subcommand("decompose",
                                 "indecomposable multiplicities of the N-th tensor power");
  dco->add_option("--l", da.l, "modulus l >= 3");
  dco->add_option("--n", da.n, "tensor power N")->required();
  dco->add_flag("--dims", da.dims, "also emit the dimension-conservation check");
  dco->add_option("--format", da.format, "output format")->check(CLI::IsMember(format_names));
  dco->callback([&] { rc = run_decompose(da); });

  EnumerateArgs ea;
  auto* enu = app.add_subcommand("enumerate", "exhaustively list the paths to (M, N)");
  enu->add_option("--model", ea.model, "step-rule family")->check(CLI::IsMember(model_names));
  enu->add_option("--l", ea.l, "modulus l >= 3");
  enu->add_option("--m", ea.m, "target position M")->required();
  enu->add_option("--n", ea.n, "target level N")->required();
  enu->add_option("--d", ea.d, "filter column (filter model)");
  enu->add_option("--type", ea.type, "filter type (filter model)");
  enu->add_option("--seed-guard", ea.guard, "refuse exhaustive search above this level")
      ->envname("LATPATH_ENUM_GUARD");
  enu->add_option("--format", ea.format, "output format")->check(CLI::IsMember(format_names));
  enu->callback([&] { rc = run_enumerate(ea); });

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "run the cross-validation suites");
  ver->add_option("--suite", va.suites, "suites to run (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(suite_names));
  ver->add_option("--l", va.ls, "moduli to cover")->delimiter(',');
  ver->add_option("--n-max", va.n_max, "grid depth");
  ver->add_option("--seed-guard", va.guard, "cap for the enumeration oracle")
      ->envname("LATPATH_ENUM_GUARD");
  ver->add_option("--format", va.format, "output format")->check(CLI::IsMember(format_names));
  ver->callback([&] { rc = run_verify(va); });

  BoundaryArgs ba;
  auto* bnd = app.add_subcommand("boundary", "boundary points of a strip region");
  bnd->add_option("--model", ba.model, "step-rule family")->check(CLI::IsMember(model_names));
  bnd->add_option("--l", ba.l, "modulus l >= 3");
  bnd->add_option("--strip", ba.strip, "strip number (1-based)")->required();
  bnd->add_option("--n-max", ba.n_max, "level cap of the region")->required();
  bnd->add_option("--d", ba.d, "filter column (filter model)");
  bnd->add_option("--type", ba.type, "filter type (filter model)");
  bnd->add_option("--format", ba.format, "output format")->check(CLI::IsMember(format_names));
  bnd->callback([&] { rc = run_boundary(ba); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
