#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "etlib/constructions.hpp"
#include "etlib/et.hpp"
#include "etlib/geometry.hpp"
#include "etlib/poset.hpp"
#include "etlib/subdivision.hpp"
#include "etlib/tables.hpp"

namespace py = pybind11;
using namespace etlib;

namespace {

Rat rat_from(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rat(h.cast<long long>());
  return parse_rat(h.cast<std::string>());
}

RatVec rats_from(const py::sequence& seq) {
  RatVec out;
  for (const py::handle& h : seq) out.push_back(rat_from(h));
  return out;
}

std::vector<long long> proper_f(const GradedPoset& p) {
  FlagVector fv = flag_vector(p);
  std::vector<long long> out;
  for (int i = 0; i < fv.d; ++i) out.push_back(fv.fi(i));
  return out;
}

ChainPoint chain_point(const py::sequence& chain, const py::sequence& weights) {
  ChainPoint c;
  for (const py::handle& h : chain) c.chain.push_back(h.cast<int>());
  c.weights = rats_from(weights);
  return c;
}

py::tuple chain_point_out(const ChainPoint& c) {
  py::list w;
  for (const Rat& q : c.weights) w.append(format_rat(q));
  return py::make_tuple(c.chain, w);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "interval constructions on Eulerian lattices and exact rational polytopes";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<GradedPoset>(m, "Lattice")
      .def("__len__", &GradedPoset::size)
      .def_property_readonly("length", &GradedPoset::length)
      .def_property_readonly("bottom", &GradedPoset::bottom)
      .def_property_readonly("top", &GradedPoset::top)
      .def("rank", &GradedPoset::rank, py::arg("x"))
      .def("leq", &GradedPoset::leq, py::arg("x"), py::arg("y"))
      .def("upper_covers", &GradedPoset::upper_covers, py::arg("x"))
      .def("lower_covers", &GradedPoset::lower_covers, py::arg("x"))
      .def("f_vector", &proper_f)
      .def("__repr__", [](const GradedPoset& p) {
        return "Lattice(length=" + std::to_string(p.length()) +
               ", size=" + std::to_string(p.size()) + ")";
      });

  py::class_<VHPolytope>(m, "Polytope")
      .def_property_readonly("dim", [](const VHPolytope& p) { return p.dim; })
      .def_property_readonly("n_vertices",
                             [](const VHPolytope& p) { return p.vertices.size(); })
      .def_property_readonly("n_facets", [](const VHPolytope& p) { return p.facets.size(); })
      .def("vertices",
           [](const VHPolytope& p) {
             py::list out;
             for (const RatVec& v : p.vertices) {
               py::list row;
               for (const Rat& q : v) row.append(format_rat(q));
               out.append(row);
             }
             return out;
           })
      .def("face_lattice", [](const VHPolytope& p) { return p.faces->poset; })
      .def("f_vector", [](const VHPolytope& p) { return proper_f(p.faces->poset); })
      .def("__repr__", [](const VHPolytope& p) {
        return "Polytope(dim=" + std::to_string(p.dim) +
               ", vertices=" + std::to_string(p.vertices.size()) +
               ", facets=" + std::to_string(p.facets.size()) + ")";
      });

  m.def("boolean_lattice", &boolean_lattice, py::arg("n"));
  m.def("opposite", &opposite, py::arg("lattice"));
  m.def("is_eulerian", &is_eulerian, py::arg("lattice"));
  m.def("is_lattice", &is_lattice, py::arg("lattice"));
  m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));
  m.def(
      "flag_number",
      [](const GradedPoset& p, std::vector<int> s) { return flag_number(p, std::move(s)); },
      py::arg("lattice"), py::arg("ranks"));
  m.def(
      "fatness", [](const GradedPoset& p) { return format_rat(fatness(p)); },
      py::arg("lattice"));
  m.def(
      "simpliciality_profile",
      [](const GradedPoset& p) {
        SimplicialityProfile s = simpliciality_profile(p);
        return py::make_tuple(s.max_simplicial, s.max_simple, s.is_boolean);
      },
      py::arg("lattice"));

  m.def(
      "et", [](const GradedPoset& l, int t) { return et(l, t).poset; }, py::arg("lattice"),
      py::arg("t"), "interval poset of the lattice");
  m.def("et_fvector_formula", &et_fvector_formula, py::arg("lattice"), py::arg("t"));
  m.def("et_two_simple_criterion", &et_two_simple_criterion, py::arg("lattice"), py::arg("t"));
  m.def("d_construction", &d_construction, py::arg("lattice"), py::arg("k"));

  m.def(
      "generate", [](const std::string& kind, int d, int k) { return generate(kind, d, k); },
      py::arg("kind"), py::arg("d") = 4, py::arg("k") = 2,
      "simplex|cube|cross|hypersimplex|M|halfcube_N|prism_over_simplex");
  m.def(
      "cross_stack", [](int n) { return build_cross_stack(n, false).polytope; }, py::arg("n"),
      "tower of n glued 4-dimensional cross polytopes");
  m.def(
      "stacked",
      [](int d, const std::vector<int>& plan, const std::string& base) {
        return build_truncatable_stacked(d, plan, base).polytope;
      },
      py::arg("d"), py::arg("plan"), py::arg("base") = "simplex");
  m.def(
      "truncate_stacked",
      [](int d, const std::vector<int>& plan, const std::string& base) {
        StackedFamily fam = build_truncatable_stacked(d, plan, base);
        return truncate_all(fam.polytope, fam.cuts);
      },
      py::arg("d"), py::arg("plan"), py::arg("base") = "simplex",
      "vertex truncation of the stacked body, cut along its threaded cut system");
  m.def(
      "truncate",
      [](const VHPolytope& p, const std::string& strategy) {
        VHPolytope cert = validate(p);
        CutSystem cs = strategy == "inductive" ? inductive_cuts(cert) : midpoint_cuts(cert);
        return truncate_all(cert, cs);
      },
      py::arg("polytope"), py::arg("strategy") = "midpoint");
  m.def(
      "stack",
      [](const VHPolytope& p, int facet) { return stack(p, facet); }, py::arg("polytope"),
      py::arg("facet"));
  m.def(
      "realize",
      [](const VHPolytope& p, int t, const py::handle& r2) {
        return et_realization(validate(p), t, rat_from(r2));
      },
      py::arg("polytope"), py::arg("t"), py::arg("r2"),
      "edge-tangent realization of the interval poset");
  m.def(
      "polar",
      [](const VHPolytope& p, const py::handle& r2) {
        return polar(validate(p), rat_from(r2));
      },
      py::arg("polytope"), py::arg("r2") = 1);

  m.def(
      "pi",
      [](const GradedPoset& l, int t, const py::sequence& chain, const py::sequence& weights) {
        EtResult e = et(l, t);
        return chain_point_out(pi(l, e, chain_point(chain, weights)));
      },
      py::arg("lattice"), py::arg("t"), py::arg("chain"), py::arg("weights"),
      "project a point of the interval poset's order complex down");
  m.def(
      "pi_inverse",
      [](const GradedPoset& l, int t, const py::sequence& chain, const py::sequence& weights) {
        EtResult e = et(l, t);
        return chain_point_out(pi_inverse(l, e, chain_point(chain, weights)));
      },
      py::arg("lattice"), py::arg("t"), py::arg("chain"), py::arg("weights"),
      "locate a point of the lattice's order complex in the subdivision");

  m.def(
      "eval_family",
      [](const std::string& id, long long n, int d) {
        FamilyValue v = eval_family(id, n, d);
        py::dict out;
        out["f"] = v.f;
        if (v.f03) out["f03"] = *v.f03;
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("d") = 4);
  m.def(
      "family_table",
      [](const std::string& id, int d) {
        FamilyTable t = family_table(id, d);
        py::dict out;
        out["family"] = t.id;
        out["source"] = t.source;
        out["dim"] = t.dim;
        out["n_min"] = t.n_min;
        py::list forms;
        for (const LinearForm& f : t.f) forms.append(f.str());
        out["f"] = forms;
        if (t.f03) out["f03"] = t.f03->str();
        return out;
      },
      py::arg("family"), py::arg("d") = 4);
  m.def("consistency_suite", [] {
    py::list out;
    for (const ConsistencyItem& item : consistency_suite())
      out.append(py::make_tuple(item.name, item.pass, item.detail));
    return out;
  });
}
