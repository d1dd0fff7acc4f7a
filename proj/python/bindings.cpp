#include <optional>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclosemi/census.hpp"
#include "cyclosemi/cli.hpp"
#include "cyclosemi/cyclotomic.hpp"
#include "cyclosemi/family.hpp"
#include "cyclosemi/rootloc.hpp"
#include "cyclosemi/semigroup.hpp"
#include "cyclosemi/serialize.hpp"

namespace py = pybind11;
using namespace cyclosemi;

namespace {

// Coefficients cross the boundary as Python ints, constant term first.
py::list to_py(const IntPoly& p) {
  py::list out;
  for (const BigInt& c : p.coeffs()) {
    const std::string s = c.str();
    out.append(py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10)));
  }
  return out;
}

IntPoly from_py(const py::sequence& coeffs) {
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!py::isinstance<py::int_>(c)) throw py::type_error("polynomial coefficients must be integers");
    out.emplace_back(py::str(c).cast<std::string>());
  }
  return IntPoly(std::move(out));
}

py::dict report_to_py(const CyclotomicReport& r) {
  py::list factors;
  for (const auto& f : r.factors) factors.append(py::make_tuple(f.index, f.multiplicity));
  py::dict d;
  d["cyclotomic"] = r.is_cyclotomic;
  d["factors"] = factors;
  d["remainder"] = to_py(r.remainder);
  return d;
}

py::dict certificate_to_py(const CertificateReport& r) {
  py::list flags;
  for (const auto& f : r.flags) flags.append(py::make_tuple(f.index, f.a_holds, f.b_holds, f.c_holds));
  py::dict d;
  d["i_min"] = r.i_min;
  d["i_max"] = r.i_max;
  d["flags"] = flags;
  d["all_flags_hold"] = r.all_flags_hold();
  d["exclusion_ok"] = r.exclusion_ok;
  d["root_count"] = r.root_count;
  d["r_bound"] = r.r_bound;
  d["t_bound"] = r.t_bound;
  d["passed"] = r.passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical semigroups: symmetry, cyclotomicity and the S_{n,t} families";
  m.attr("__version__") = kVersion;
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);

  // polynomials
  m.def("poly_mul", [](const py::sequence& a, const py::sequence& b) { return to_py(from_py(a) * from_py(b)); });
  m.def("poly_divexact", [](const py::sequence& a, const py::sequence& b) -> py::object {
    auto q = poly_divexact(from_py(a), from_py(b));
    if (!q) return py::none();
    return to_py(*q);
  }, "Exact quotient a / b, or None when b does not divide a over the integers.");
  m.def("is_palindromic", [](const py::sequence& p) { return is_palindromic(from_py(p)); });
  m.def("cyclotomic", [](std::uint64_t d) { return to_py(cyclotomic(d)); }, py::arg("d"));
  m.def("cyclotomic_test", [](const py::sequence& p) { return report_to_py(cyclotomic_test(from_py(p))); });

  // semigroups
  py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
      .def(py::init([](const std::vector<Element>& gens) { return NumericalSemigroup::from_generators(gens); }),
           py::arg("generators"))
      .def_property_readonly("generators", &NumericalSemigroup::generators)
      .def_property_readonly("minimal_generators", &NumericalSemigroup::minimal_generators)
      .def_property_readonly("gaps", &NumericalSemigroup::gaps)
      .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
      .def_property_readonly("genus", &NumericalSemigroup::genus)
      .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
      .def_property_readonly("embedding_dimension", &NumericalSemigroup::embedding_dimension)
      .def("__contains__", &NumericalSemigroup::contains)
      .def("polynomial", [](const NumericalSemigroup& s) { return to_py(semigroup_polynomial(s)); })
      .def("is_symmetric", [](const NumericalSemigroup& s) { return is_symmetric(s); })
      .def("is_cyclotomic",
           [](const NumericalSemigroup& s) { return cyclotomic_test(semigroup_polynomial(s)).is_cyclotomic; })
      .def("apery_set",
           [](const NumericalSemigroup& s, std::optional<Element> m) { return m ? apery_set(s, *m) : apery_set(s); },
           py::arg("m") = py::none())
      .def("to_json", [](const NumericalSemigroup& s) { return analysis_record(s).dump(); });

  // family
  m.def("family_generators", [](std::int64_t n, std::int64_t t) { return family_generators(FamilyParams::make(n, t)); },
        py::arg("n"), py::arg("t"));
  m.def("family_polynomial",
        [](std::int64_t n, std::int64_t t) { return to_py(family_polynomial_closed_form(FamilyParams::make(n, t))); },
        py::arg("n"), py::arg("t"));
  m.def("family_verdict", [](std::int64_t n, std::int64_t t) {
    const auto v = family_verdict(FamilyParams::make(n, t));
    py::dict d;
    d["embedding_dimension"] = v.embedding_dimension;
    d["expected_embedding_dimension"] = v.expected_embedding_dimension;
    d["symmetric"] = v.symmetric;
    d["cyclotomic"] = v.cyclotomic;
    d["agrees"] = v.agrees();
    return d;
  }, py::arg("n"), py::arg("t"));
  m.def("scan", [](std::int64_t t, std::int64_t n_min, std::int64_t n_max, int workers) {
    py::list rows;
    for (const auto& r : scan_family(t, n_min, n_max, resolve_workers(workers))) {
      py::dict d;
      d["n"] = r.n;
      d["t"] = r.t;
      d["embedding_dimension"] = r.embedding_dimension;
      d["expected_dimension"] = r.expected_dimension;
      d["symmetric"] = r.symmetric;
      d["cyclotomic"] = r.cyclotomic;
      d["agree"] = r.agree;
      rows.append(d);
    }
    return rows;
  }, py::arg("t"), py::arg("n_min"), py::arg("n_max"), py::arg("workers") = 0);

  // root location
  m.def("q_eval", [](std::int64_t n, std::int64_t t, double theta) { return q_eval(QKernel(n, t), theta); });
  m.def("q_prime_eval", [](std::int64_t n, std::int64_t t, double theta) { return q_prime_eval(QKernel(n, t), theta); });
  m.def("q_second_eval",
        [](std::int64_t n, std::int64_t t, double theta) { return q_second_eval(QKernel(n, t), theta); });
  m.def("exclusion_check", [](std::int64_t n, std::int64_t t) { return exclusion_check(QKernel(n, t)); });
  m.def("certificate_check",
        [](std::int64_t n, std::int64_t t) { return certificate_to_py(certificate_check(QKernel(n, t))); });
  m.def("count_unit_circle_roots", [](std::int64_t n, std::int64_t t) {
    const auto r = count_unit_circle_roots(QKernel(n, t));
    py::dict d;
    d["count"] = r.count;
    d["sign_change_roots"] = r.sign_change_roots;
    d["suspected_double_roots"] = r.suspected_double_roots;
    d["thetas"] = r.thetas;
    return d;
  });
  m.def("complex_roots", [](const py::sequence& p, double tol) { return complex_roots(from_py(p), tol); },
        py::arg("coeffs"), py::arg("tol") = 1e-12);
  m.def("theorem7_band_check", [](std::int64_t n) {
    const auto r = theorem7_band_check(n);
    py::dict d;
    d["band"] = r.band;
    d["max_deviation"] = r.max_deviation;
    d["max_band_violation"] = r.max_band_violation;
    d["off_circle_witness"] = r.off_circle_witness();
    d["pass"] = r.pass();
    return d;
  }, py::arg("n"));

  // census
  m.def("census", [](int max_genus, int workers) {
    const auto table = run_census({max_genus, resolve_workers(workers), 0});
    py::list rows;
    for (const auto& r : table.rows()) {
      rows.append(py::make_tuple(r.genus, r.embedding_dimension, r.total, r.symmetric, r.cyclotomic,
                                 r.symmetric_not_cyclotomic()));
    }
    py::dict d;
    d["rows"] = rows;
    d["totals_by_genus"] = table.totals_by_genus();
    d["symmetry_disagreements"] = table.symmetry_disagreements();
    d["low_dimension_mismatches"] = table.low_dimension_mismatches();
    return d;
  }, py::arg("max_genus"), py::arg("workers") = 1);
}
