#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxeterlab/certify.hpp"
#include "coxeterlab/error.hpp"
#include "coxeterlab/fixtures.hpp"
#include "coxeterlab/nikulin.hpp"
#include "coxeterlab/search.hpp"
#include "coxeterlab/taxonomy.hpp"

namespace py = pybind11;
using namespace coxeterlab;

namespace {

// Values arrive as strings ("3/2", "2") so exactness survives the boundary.
Assignment to_assignment(const std::map<std::string, std::string>& values) {
  Assignment a;
  for (const auto& [k, v] : values) {
    mpq_class q;
    if (q.set_str(v, 10) != 0) throw DomainError("not a rational: " + v);
    q.canonicalize();
    a[k] = q;
  }
  return a;
}

EdgeLabel dotted_label(const std::string& spec) {
  mpq_class q;
  if (q.set_str(spec, 10) == 0) return EdgeLabel::dotted(q);
  return EdgeLabel::dotted(spec);
}

py::dict verdict_dict(const SuperhyperbolicVerdict& v) {
  py::dict d;
  d["status"] = to_string(v.status);
  d["holds_for_all_rho"] = v.holds_for_all_rho;
  d["method"] = v.method;
  d["det"] = v.det.to_string();
  d["certificate"] = v.certificate.to_string();
  d["subdiagram"] = v.subdiagram;
  d["lanner_witness"] = v.lanner_witness;
  return d;
}

py::list rows(const std::vector<NeighborRow>& rs) {
  py::list out;
  for (const auto& r : rs) out.append(py::make_tuple(r.a, r.b, r.c, r.local_det.approx()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Coxeter diagram arithmetic";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<GuardError>(m, "GuardError", base.ptr());
  py::register_exception<UnassignedVariableError>(m, "UnassignedVariableError", base.ptr());

  py::class_<CoxeterDiagram>(m, "Diagram")
      .def(py::init<std::vector<std::string>>(), py::arg("vertices"))
      .def_static("parse", &parse_diagram, py::arg("text"))
      .def_static("from_json", &diagram_from_json, py::arg("text"))
      .def("to_text", &serialize_diagram)
      .def("to_json", [](const CoxeterDiagram& d) { return diagram_to_json(d); })
      .def_property_readonly("order", &CoxeterDiagram::order)
      .def_property_readonly("vertices", &CoxeterDiagram::vertices)
      .def_property_readonly("dotted_vars", &CoxeterDiagram::dotted_vars)
      .def("add_edge",
           [](CoxeterDiagram& d, const std::string& a, const std::string& b, int label) {
             d.add_edge(a, b, EdgeLabel::finite(label));
           },
           py::arg("a"), py::arg("b"), py::arg("label"))
      .def("add_bold",
           [](CoxeterDiagram& d, const std::string& a, const std::string& b) {
             d.add_edge(a, b, EdgeLabel::bold());
           })
      .def("add_dotted",
           [](CoxeterDiagram& d, const std::string& a, const std::string& b, const std::string& spec) {
             d.add_edge(a, b, dotted_label(spec));
           },
           py::arg("a"), py::arg("b"), py::arg("value_or_var"))
      .def("induced",
           [](const CoxeterDiagram& d, const std::vector<std::string>& names) {
             return induced(d, names).diagram();
           })
      .def("__eq__", [](const CoxeterDiagram& a, const CoxeterDiagram& b) { return a == b; })
      .def("__repr__", [](const CoxeterDiagram& d) { return "Diagram(" + diagram_to_json(d) + ")"; });

  m.def("classify",
        [](const CoxeterDiagram& d, const std::map<std::string, std::string>& a) {
          return to_string(classify(d, to_assignment(a)));
        },
        py::arg("diagram"), py::arg("assignment") = std::map<std::string, std::string>{});
  m.def("inertia",
        [](const CoxeterDiagram& d, const std::map<std::string, std::string>& a) {
          const Inertia in = inertia(d, to_assignment(a));
          return py::make_tuple(in.pos, in.neg, in.zero);
        },
        py::arg("diagram"), py::arg("assignment") = std::map<std::string, std::string>{});
  m.def("det", [](const CoxeterDiagram& d) { return det_elim(d).to_string(); });
  m.def("det_cycles", [](const CoxeterDiagram& d) { return det_cycles(d).to_string(); });
  m.def("is_lanner", &is_lanner);
  m.def("polytope_admissible",
        [](const CoxeterDiagram& d, const std::map<std::string, std::string>& a) {
          return polytope_admissible(d, to_assignment(a));
        },
        py::arg("diagram"), py::arg("assignment") = std::map<std::string, std::string>{});
  m.def("lanner_subdiagrams", [](const CoxeterDiagram& d) { return scan(d).lanner; });
  m.def("canonical_form", &canonical_form);

  m.def("certify",
        [](const CoxeterDiagram& d, bool subdiagrams) {
          return verdict_dict(certify_superhyperbolic_family(d, subdiagrams));
        },
        py::arg("diagram"), py::arg("try_subdiagrams") = true);
  m.def("d_func", [](int k, int l, int m) { return d_func(k, l, m).approx(); });
  m.def("D_func", [](int k, int l, int m, int k2, int l2, int m2) {
    const Scalar v = D_func(k, l, m, k2, l2, m2);
    return py::make_tuple(v.sign(), v.approx());
  });

  m.def("expansion_search",
        [](const CoxeterDiagram& l, int extra, int cap, int jobs) {
          py::gil_scoped_release release;
          return expansion_search(l, extra, cap, jobs).diagrams;
        },
        py::arg("lanner"), py::arg("extra"), py::arg("cap") = 10, py::arg("jobs") = 1);
  m.def("neighbor_table",
        [](int cap) {
          const NeighborTable t = neighbor_table_check(cap);
          py::dict d;
          d["rows"] = rows(t.rows);
          d["survivors"] = rows(t.survivors);
          d["partners"] = rows(t.partners);
          return d;
        },
        py::arg("cap") = 7);
  m.def("three_free_contradiction", [](int d) { return three_free_contradiction(d).to_json(); });
  m.def("catalog_json", &catalog_json, py::arg("max_n") = 10, py::arg("max_label") = 10);

  m.def("fixture_names", &fixture_names);
  m.def("fixture", &fixture);
  m.def("lanner_pair_diagram",
        [](int k, int l, int m, int k2, int l2, int m2, const std::string& rho) {
          mpq_class q;
          if (q.set_str(rho, 10) == 0) {
            q.canonicalize();
            return lanner_pair_diagram(k, l, m, k2, l2, m2, q);
          }
          return lanner_pair_diagram(k, l, m, k2, l2, m2, rho);
        },
        py::arg("k"), py::arg("l"), py::arg("m"), py::arg("k2"), py::arg("l2"), py::arg("m2"),
        py::arg("rho") = "rho");
}
