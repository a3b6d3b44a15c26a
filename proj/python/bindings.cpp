#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fermat/chars.hpp"
#include "fermat/decompose.hpp"
#include "fermat/lattice.hpp"
#include "fermat/render.hpp"
#include "fermat/series.hpp"

namespace py = pybind11;
using namespace fermat;

namespace {

py::int_ to_py(const Integer& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_py(q.get_num()), to_py(q.get_den()));
}

Rho rho_from(const std::string& s) {
  if (s == "triv") return Rho::triv;
  if (s == "sgn") return Rho::sgn;
  if (s == "stan") return Rho::stan;
  throw py::value_error("rho must be 'triv', 'sgn' or 'stan'");
}

py::dict label_dict(const IrrepLabel& l) {
  py::dict d;
  d["kappa"] = l.kappa;
  d["lambda"] = l.lambda;
  d["rho"] = to_string(l.rho);
  d["orbit"] = to_string(l.orbit);
  d["degree"] = irrep_degree(l);
  return d;
}

py::dict series_dict(const RationalFunction& f) {
  const auto [num, den] = f.integer_form();
  py::list pn;
  py::list pd;
  for (const auto& z : num) pn.append(to_py(z));
  for (const auto& z : den) pd.append(to_py(z));
  py::dict d;
  d["num"] = pn;
  d["den"] = pd;
  d["text"] = f.to_string();
  return d;
}

RationalFunction pick_series(int n, const std::string& which, int kappa, int lambda, const std::string& rho) {
  if (which == "weighted") return total_series(n, true);
  if (which == "unweighted") return total_series(n, false);
  if (which == "label") return isotypic_series(n, find_irrep(n, kappa, lambda, rho_from(rho)));
  throw py::value_error("series must be 'weighted', 'unweighted' or 'label'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Group-module structure of polydifferentials on Fermat curves";

  m.def("irreps", [](int n) {
    py::list out;
    for (const auto& l : list_irreps(n)) out.append(label_dict(l));
    return out;
  }, py::arg("n"));

  m.def("dim_vm", [](int n, std::int64_t mm) { return dim_Vm({n, mm}); }, py::arg("n"), py::arg("m"));

  m.def("decompose", [](int n, std::int64_t mm) {
    py::list out;
    for (const auto& [l, mult] : decompose(n, mm).entries) {
      py::dict d = label_dict(l);
      d["mult"] = mult;
      out.append(d);
    }
    return out;
  }, py::arg("n"), py::arg("m"));

  m.def("multiplicity", [](int n, std::int64_t mm, int kappa, int lambda, const std::string& rho) {
    return multiplicity(n, mm, find_irrep(n, kappa, lambda, rho_from(rho)));
  }, py::arg("n"), py::arg("m"), py::arg("kappa"), py::arg("lambda"), py::arg("rho") = "triv");

  m.def("multiplicity_oracle",
        [](int n, std::int64_t mm, int kappa, int lambda, const std::string& rho, int bound) {
          const IrrepLabel l = find_irrep(n, kappa, lambda, rho_from(rho));
          py::gil_scoped_release release;
          return multiplicity_oracle(n, mm, l, bound);
        },
        py::arg("n"), py::arg("m"), py::arg("kappa"), py::arg("lambda"), py::arg("rho") = "triv",
        py::arg("oracle_bound") = kDefaultOracleBound);

  m.def("table_row", [](int n, std::int64_t mm) { return table_row(decompose(n, mm)); }, py::arg("n"), py::arg("m"));

  m.def("series", [](int n, const std::string& which, int kappa, int lambda, const std::string& rho) {
    return series_dict(pick_series(n, which, kappa, lambda, rho));
  }, py::arg("n"), py::arg("which") = "weighted", py::arg("kappa") = 0, py::arg("lambda") = 0, py::arg("rho") = "triv");

  m.def("taylor", [](int n, int terms, const std::string& which, int kappa, int lambda, const std::string& rho) {
    if (terms < 1) throw py::value_error("terms must be positive");
    py::list out;
    for (const auto& q : taylor(pick_series(n, which, kappa, lambda, rho), terms - 1)) out.append(fraction(q));
    return out;
  }, py::arg("n"), py::arg("terms"), py::arg("which") = "weighted", py::arg("kappa") = 0, py::arg("lambda") = 0,
        py::arg("rho") = "triv");

  m.def("lattice_probe", [](int n, std::int64_t mm, std::int64_t x, std::int64_t y) {
    py::dict d;
    d["alpha"] = triangle_correction(n, mm, x, y);
    d["I_diff"] = triangle_difference(n, mm, x, y);
    d["J_diff"] = half_range_difference(n, mm, x);
    d["band_base"] = band_base(n, mm);
    return d;
  }, py::arg("n"), py::arg("m"), py::arg("x"), py::arg("y"));
}
