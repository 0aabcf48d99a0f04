// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "coxeter_ehrhart/cli/tables.hpp"
#include "coxeter_ehrhart/egf.hpp"
#include "coxeter_ehrhart/oracle.hpp"
#include "coxeter_ehrhart/roots.hpp"
#include "coxeter_ehrhart/zonotope.hpp"

namespace py = pybind11;
namespace cxe = coxeter_ehrhart;

namespace {

py::int_ ToPy(const cxe::Integer& x) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object ToPy(const cxe::Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(ToPy(q.get_num()), ToPy(q.get_den()));
}

cxe::Integer IntegerFromPy(const py::handle& h) {
  if (!py::isinstance<py::int_>(h)) {
    throw py::type_error("expected an int, got " +
                         std::string(py::str(py::type::of(h))));
  }
  return cxe::Integer(std::string(py::str(h)));
}

// Accepts int, fractions.Fraction or a "p/q" string.
cxe::Rational RationalFromPy(const py::handle& h) {
  return cxe::ParseRational(std::string(py::str(h)));
}

cxe::ZonotopeSpec ZonotopeFromPy(const std::vector<py::list>& generators,
                                 const py::list& shift) {
  std::vector<cxe::IntVector> gens;
  for (const py::list& g : generators) {
    std::vector<cxe::Integer> entries;
    for (const py::handle& e : g) entries.push_back(IntegerFromPy(e));
    gens.emplace_back(std::move(entries));
  }
  std::vector<cxe::Rational> v;
  for (const py::handle& e : shift) v.push_back(RationalFromPy(e));
  return cxe::ZonotopeSpec(std::move(gens), cxe::RatVector(std::move(v)));
}

py::list Constituents(const cxe::QuasiPolynomial& q) {
  py::list out;
  for (const cxe::Polynomial& p : q.constituents()) {
    py::list coeffs;
    for (const cxe::Rational& c : p) coeffs.append(ToPy(c));
    out.append(coeffs);
  }
  return out;
}

py::list IntList(const std::vector<cxe::Integer>& values) {
  py::list out;
  for (const cxe::Integer& v : values) out.append(ToPy(v));
  return out;
}

py::list Vectors(const std::vector<cxe::IntVector>& vectors) {
  py::list out;
  for (const cxe::IntVector& v : vectors) out.append(IntList(v.entries()));
  return out;
}

py::list Rationals(const std::vector<cxe::Rational>& values) {
  py::list out;
  for (const cxe::Rational& v : values) out.append(ToPy(v));
  return out;
}

cxe::RootFamily Family(const std::string& s) { return cxe::ParseFamily(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ehrhart quasipolynomials of Coxeter permutahedra and zonotopes.";

  py::register_exception<cxe::SizeLimitError>(m, "SizeLimitError",
                                               PyExc_RuntimeError);

  m.def(
      "positive_roots",
      [](const std::string& family, std::size_t n) {
        return Vectors(cxe::PositiveRoots(Family(family), n).roots);
      },
      py::arg("family"), py::arg("n"));
  m.def(
      "standard_shift",
      [](const std::string& family, std::size_t n) {
        return Rationals(cxe::StandardShift(Family(family), n).entries());
      },
      py::arg("family"), py::arg("n"));
  m.def(
      "is_integral",
      [](const std::string& family, std::size_t n) {
        return cxe::IsIntegral(Family(family), n);
      },
      py::arg("family"), py::arg("n"));

  m.def(
      "ehrhart_integral",
      [](const std::string& family, std::size_t n) {
        return Constituents(cxe::EhrhartIntegralCoxeter(Family(family), n));
      },
      py::arg("family"), py::arg("n"),
      "Coefficient list (ascending powers) wrapped in a one-element list.");
  m.def(
      "ehrhart_standard",
      [](const std::string& family, std::size_t n) {
        return Constituents(cxe::EhrhartStandardCoxeter(Family(family), n));
      },
      py::arg("family"), py::arg("n"),
      "Constituents indexed by t mod period.");
  m.def(
      "ehrhart_zonotope",
      [](const std::vector<py::list>& generators, const py::list& shift) {
        return Constituents(
            cxe::EhrhartAlmostIntegral(ZonotopeFromPy(generators, shift)));
      },
      py::arg("generators"), py::arg("shift"));
  m.def(
      "count_points",
      [](const std::vector<py::list>& generators, const py::list& shift,
         const py::int_& t, std::uint64_t max_box) {
        return ToPy(cxe::CountPoints(ZonotopeFromPy(generators, shift),
                                     IntegerFromPy(t), max_box));
      },
      py::arg("generators"), py::arg("shift"), py::arg("t"),
      py::arg("max_box") = cxe::kDefaultMaxBox);
  m.def(
      "contains",
      [](const std::vector<py::list>& generators, const py::list& shift,
         const py::int_& t, const py::list& point) {
        std::vector<cxe::Integer> p;
        for (const py::handle& e : point) p.push_back(IntegerFromPy(e));
        const auto cert =
            cxe::ZonotopeContains(ZonotopeFromPy(generators, shift),
                                  IntegerFromPy(t), cxe::IntVector(p));
        py::list violations;
        for (const cxe::Violation& v : cert.violations) {
          violations.append(v.ToString());
        }
        return py::make_tuple(cert.verdict, violations);
      },
      py::arg("generators"), py::arg("shift"), py::arg("t"), py::arg("point"));

  m.def(
      "egf_values",
      [](const std::string& family, const py::int_& t, std::size_t nmax) {
        return IntList(
            cxe::EgfEhrhartValues(Family(family), IntegerFromPy(t), nmax));
      },
      py::arg("family"), py::arg("t"), py::arg("nmax"));
  m.def(
      "egf_standard_odd",
      [](const std::string& family, const py::int_& t, std::size_t nmax) {
        py::dict out;
        for (const auto& [n, v] : cxe::EgfEhrhartStandardOdd(
                 Family(family), IntegerFromPy(t), nmax)) {
          out[py::int_(n)] = ToPy(v);
        }
        return out;
      },
      py::arg("family"), py::arg("t"), py::arg("nmax"));
  m.def(
      "lambert_w",
      [](std::size_t order) {
        return Rationals(cxe::LambertW(order).coeffs());
      },
      py::arg("order"));
  m.def(
      "brute_force_structures",
      [](const std::string& kind, std::size_t n) {
        return ToPy(
            cxe::BruteForceStructures(cxe::ParseStructureKind(kind), n));
      },
      py::arg("kind"), py::arg("n"));
  m.def(
      "table",
      [](const std::string& which) {
        const auto report =
            cxe::cli::ComputeTable(cxe::cli::ParseTableId(which));
        py::list rows;
        for (const auto& row : report.rows) {
          py::dict d;
          d["label"] = row.label;
          d["family"] = std::string(1, cxe::FamilyLetter(row.family));
          d["n"] = row.n;
          d["constituents"] = Constituents(row.computed);
          d["match"] = row.matches();
          rows.append(d);
        }
        return rows;
      },
      py::arg("which"));
}
