#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "repvar2/verify.hpp"

namespace py = pybind11;
using namespace repvar2;

namespace {

py::int_ to_py_int(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict census_dict(const StratumCensus& sc) {
  py::dict counts;
  for (Stratum s : kAllStrata) counts[stratum_name(s)] = sc.counts.at(s);
  py::dict out;
  out["q"] = sc.q;
  out["m"] = sc.m;
  out["counts"] = counts;
  out["total"] = sc.total;
  out["elapsed_ms"] = sc.elapsed_ms;
  return out;
}

py::dict orbits_dict(const OrbitCensus& oc) {
  py::dict orbits, stabs;
  for (Stratum s : kAllStrata) {
    orbits[stratum_name(s)] = oc.orbit_counts.at(s);
    py::dict prof;
    for (const auto& [order, n] : oc.stabilizer_profile.at(s))
      prof[py::int_(order)] = n;
    stabs[stratum_name(s)] = prof;
  }
  py::dict out;
  out["q"] = oc.q;
  out["m"] = oc.m;
  out["orbits"] = orbits;
  out["stabilizers"] = stabs;
  return out;
}

std::vector<Mat2> tuple_from_indices(const FieldSpec& spec,
                                     const std::vector<uint32_t>& entries) {
  if (entries.empty() || entries.size() % 4 != 0)
    throw std::invalid_argument("tuple needs 4m entries");
  std::vector<Mat2> tuple;
  for (size_t i = 0; i < entries.size(); i += 4) {
    for (size_t j = i; j < i + 4; ++j)
      if (entries[j] >= spec.order())
        throw std::invalid_argument("entry index out of range");
    tuple.emplace_back(spec, entries[i], entries[i + 1], entries[i + 2], entries[i + 3]);
  }
  return tuple;
}

FormulaKey key_from_names(const std::string& space, const std::string& stratum,
                          const std::string& kind, int n) {
  return FormulaKey{space_from_name(space), stratum_key_from_name(stratum),
                    poly_kind_from_name(kind), n};
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "exact stratum censuses, PGL_2 orbit counts and closed-form checks "
              "for tuples of 2x2 matrices over small finite fields";

  py::class_<LaurentPoly>(mod, "Poly")
      .def("__str__", &LaurentPoly::str)
      .def("__repr__", [](const LaurentPoly& p) { return "Poly(" + p.str() + ")"; })
      .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
      .def_property_readonly("var", &LaurentPoly::var)
      .def("is_zero", &LaurentPoly::is_zero)
      .def("degree", &LaurentPoly::degree)
      .def("valuation", &LaurentPoly::valuation)
      .def("terms",
           [](const LaurentPoly& p) {
             std::vector<std::pair<int, py::int_>> out;
             for (const auto& [e, c] : p.terms()) out.emplace_back(e, to_py_int(c));
             return out;
           })
      .def("__call__", [](const LaurentPoly& p, long long x) {
        return to_py_int(p.evaluate(BigInt(x)));
      });

  mod.def(
      "census",
      [](uint32_t q, int m, int workers, uint64_t tuple_budget) {
        CensusOptions opts;
        opts.workers = workers;
        opts.tuple_budget = tuple_budget;
        return census_dict(census(q, m, opts));
      },
      py::arg("q"), py::arg("m"), py::arg("workers") = 0,
      py::arg("tuple_budget") = kDefaultTupleBudget,
      "Exhaustive stratum census of all q^{4m} matrix tuples.");

  mod.def(
      "orbit_census",
      [](uint32_t q, int m, int workers) {
        OrbitOptions opts;
        opts.workers = workers;
        return orbits_dict(orbit_census(q, m, opts));
      },
      py::arg("q"), py::arg("m"), py::arg("workers") = 1,
      "PGL_2(F_q)-orbit counts and stabilizer profiles per stratum.");

  mod.def(
      "classify",
      [](uint32_t q, const std::vector<uint32_t>& entries) {
        FieldSpec spec = FieldSpec::of_order(q);
        return std::string(stratum_name(classify(tuple_from_indices(spec, entries))));
      },
      py::arg("q"), py::arg("entries"),
      "Stratum of one tuple, entries matrix-major (a11,a12,a21,a22 per matrix).");

  mod.def(
      "stabilizer_order",
      [](uint32_t q, const std::vector<uint32_t>& entries) {
        FieldSpec spec = FieldSpec::of_order(q);
        return stabilizer_order(tuple_from_indices(spec, entries));
      },
      py::arg("q"), py::arg("entries"));

  mod.def(
      "formula",
      [](const std::string& space, const std::string& stratum, const std::string& kind,
         int m, int n) { return formula(key_from_names(space, stratum, kind, n), m); },
      py::arg("space"), py::arg("stratum"), py::arg("kind"), py::arg("m"),
      py::arg("n") = 2,
      "Closed form as a Poly; kind is 'count', 'vhp' or 'vhpc'.");

  mod.def("formula_keys", [] {
    std::vector<std::string> out;
    for (const FormulaKey& k : formula_keys()) out.push_back(k.str());
    return out;
  });

  mod.def(
      "zeta_factorization",
      [](const std::string& space, int m) {
        auto zf = zeta_factorization(zeta_space_from_name(space), m);
        py::dict out;
        out["space"] = space;
        out["m"] = m;
        out["num"] = zf.num;
        out["den"] = zf.den;
        return out;
      },
      py::arg("space"), py::arg("m"));

  mod.def(
      "zeta_checks",
      [](const std::string& space, int m) {
        ZetaSpace zs = zeta_space_from_name(space);
        py::dict out;
        out["counts"] = zeta_count_check(zs, m).pass;
        if (zs != ZetaSpace::ChTotal) {
          auto fe = functional_equation_check(zs, m);
          out["functional_equation"] = fe.pass;
          out["shift"] = fe.shift;
        }
        return out;
      },
      py::arg("space"), py::arg("m"));

  mod.def(
      "verify",
      [](const std::string& grid, int workers) {
        VerifyOptions opts;
        opts.workers = workers;
        auto report =
            run_verification(grid == "extended" ? extended_grid() : default_grid(), opts);
        py::list failures;
        for (const Failure& f : report.failures) {
          py::dict d;
          d["cell"] = f.cell;
          d["quantity"] = f.quantity;
          d["expected"] = f.expected;
          d["observed"] = f.observed;
          failures.append(d);
        }
        py::dict out;
        out["pass"] = report.overall_pass;
        out["failures"] = failures;
        out["cells"] = report.cells.size();
        return out;
      },
      py::arg("grid") = "default", py::arg("workers") = 0,
      "Run the verification matrix; returns {'pass', 'failures', 'cells'}.");

  mod.attr("supported_orders") = supported_orders();
}
