#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "latpath/closed_form.hpp"
#include "latpath/counting.hpp"
#include "latpath/region.hpp"
#include "latpath/tilting.hpp"

namespace py = pybind11;
using namespace latpath;
using lattice::ModelSpec;

namespace {

// exact big integers cross the boundary as decimal strings
py::int_ to_pyint(const Int& v) {
  const std::string s = v.str();
  PyObject* raw = PyLong_FromString(s.c_str(), nullptr, 10);
  if (raw == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(raw);
}

py::object to_fraction(const Rat& r) {
  return py::module_::import("fractions").attr("Fraction")(r.str());
}

py::dict row_to_dict(const std::map<long long, Int>& row) {
  py::dict d;
  for (const auto& [k, v] : row) d[py::int_(k)] = to_pyint(v);
  return d;
}

forms::WzIdentity parse_identity(const std::string& which) {
  if (which == "onee") return forms::WzIdentity::onee;
  if (which == "twoo") return forms::WzIdentity::twoo;
  throw std::invalid_argument("identity must be 'onee' or 'twoo'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact weighted lattice-path counting and tensor-power decomposition";
  m.attr("__version__") = "0.1.0";

  py::class_<ModelSpec>(m, "ModelSpec", "a modulus l plus the step restrictions in force")
      .def_static("unrestricted", &ModelSpec::unrestricted, py::arg("l"))
      .def_static("wall_only", &ModelSpec::wall_only, py::arg("l"), py::arg("a") = 0)
      .def_static("single_filter", &ModelSpec::single_filter, py::arg("l"), py::arg("d"),
                  py::arg("type") = 1)
      .def_static("auxiliary", &ModelSpec::auxiliary, py::arg("l"))
      .def_static("uq", &ModelSpec::uq, py::arg("l"))
      .def_readonly("l", &ModelSpec::l)
      .def_property_readonly(
          "kind", [](const ModelSpec& s) { return std::string(lattice::kind_name(s.kind)); })
      .def("__repr__", [](const ModelSpec& s) {
        return "<ModelSpec " + std::string(lattice::kind_name(s.kind)) +
               " l=" + std::to_string(s.l) + ">";
      });

  m.def(
      "allowed_steps",
      [](const ModelSpec& model, long long x) {
        py::list out;
        for (const auto& s : lattice::allowed_steps(model, x))
          out.append(py::make_tuple(s.from_x, s.to_x, s.weight));
        return out;
      },
      py::arg("model"), py::arg("x"), "outgoing (from_x, to_x, weight) steps at column x");
  m.def("strip_index", &lattice::strip_index, py::arg("m"), py::arg("l"));

  m.def(
      "weighted_count",
      [](const ModelSpec& model, long long M, long long N) {
        return to_pyint(paths::weighted_count(model, M, N));
      },
      py::arg("model"), py::arg("m"), py::arg("n"));
  m.def(
      "count_row",
      [](const ModelSpec& model, long long N) {
        return row_to_dict(paths::count_paths(model, N).levels.at(static_cast<size_t>(N)));
      },
      py::arg("model"), py::arg("n"), "full level-N row of weighted counts");
  m.def(
      "enumerate_paths",
      [](const ModelSpec& model, long long M, long long N, long long guard) {
        py::list out;
        for (const auto& p : paths::enumerate_paths(model, M, N, guard))
          out.append(py::make_tuple(p.xs, to_pyint(p.weight)));
        return out;
      },
      py::arg("model"), py::arg("m"), py::arg("n"), py::arg("guard") = paths::kEnumerationGuard,
      "every path to (m, n) as (columns, weight); refuses n above the guard");
  m.def(
      "boundary_points",
      [](const ModelSpec& model, long long strip, long long n_max) {
        py::list out;
        const paths::Region region = paths::strip_region(model, strip, n_max);
        for (const auto& p : paths::boundary(region)) out.append(py::make_tuple(p.x, p.n));
        return out;
      },
      py::arg("model"), py::arg("strip"), py::arg("n_max"),
      "boundary of the strip region: points fed by a reachable outside predecessor");

  m.def("binom", [](long long n, long long r) { return to_pyint(forms::binom(n, r)); });
  m.def("ballot_f", [](long long N, long long M) { return to_pyint(forms::ballot_f(N, M)); });
  m.def("unrestricted_count",
        [](long long M, long long N) { return to_pyint(forms::unrestricted_count(M, N)); });
  m.def(
      "wall_count",
      [](long long M, long long N, long long a) { return to_pyint(forms::wall_count(M, N, a)); },
      py::arg("m"), py::arg("n"), py::arg("a") = 0);
  m.def("filter_count", [](long long M, long long N, long long d, long long type) {
    return to_pyint(forms::filter_count(M, N, d, type));
  });
  m.def("poly_p", [](long long j, long long k) { return to_pyint(forms::poly_p(j, k)); });
  m.def("poly_q", [](long long j, long long k) { return to_pyint(forms::poly_q(j, k)); });
  m.def("aux_strip_multiplicity", [](long long l, long long M, long long N) {
    return to_pyint(forms::aux_strip_multiplicity(l, M, N));
  });
  m.def("uq_multiplicity", [](long long l, long long M, long long N) {
    return to_pyint(forms::uq_multiplicity(l, M, N));
  });
  m.def("strip_sum_f1", [](long long l, long long k, long long M, long long N) {
    return to_pyint(forms::strip_sum_f1(l, k, M, N));
  });
  m.def("identity_onee",
        [](long long n, long long k) { return to_pyint(forms::identity_onee(n, k)); });
  m.def("identity_twoo",
        [](long long n, long long k) { return to_pyint(forms::identity_twoo(n, k)); });
  m.def("identity_q", [](long long n, long long k) { return to_pyint(forms::identity_q(n, k)); });
  m.def(
      "wz_certificate_check",
      [](const std::string& which, long long n, long long j, long long k) {
        return to_fraction(forms::wz_certificate_check(parse_identity(which), n, j, k));
      },
      py::arg("which"), py::arg("n"), py::arg("j"), py::arg("k"),
      "telescoping residual of the named certificate ('onee' or 'twoo'); exact Fraction");

  m.def(
      "decompose",
      [](long long N, long long l) { return row_to_dict(tilting::decompose(N, l).mult); },
      py::arg("n"), py::arg("l"), "multiplicities of the N-th tensor power as {weight: count}");
  m.def(
      "tilting_dim",
      [](long long k, long long l) { return to_pyint(tilting::tilting_dim(k, l)); },
      py::arg("k"), py::arg("l"));
  m.def(
      "derive_dims",
      [](long long l, long long x_max) {
        return row_to_dict(tilting::derive_dim_table(l, x_max).dims);
      },
      py::arg("l"), py::arg("x_max"), "dimensions propagated from the step rules");
  m.def(
      "verify_against_paths",
      [](long long n_max, long long l) {
        py::list out;
        for (const auto& mm : tilting::verify_against_paths(n_max, l))
          out.append(py::make_tuple(mm.N, mm.k, to_pyint(mm.from_recursion),
                                    to_pyint(mm.from_paths)));
        return out;
      },
      py::arg("n_max"), py::arg("l"),
      "mismatches between the recursion route and the path-count route (expected: none)");
}
