#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "commgraph/characters.hpp"
#include "commgraph/commuting.hpp"
#include "commgraph/coxeter.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/metrics.hpp"
#include "commgraph/verify.hpp"

namespace py = pybind11;
using namespace commgraph;

namespace {

CoxeterLabel to_label(const py::object& o) {
  if (o.is_none()) return CoxeterLabel::infinity();
  if (py::isinstance<py::str>(o)) return CoxeterLabel::parse(o.cast<std::string>());
  return CoxeterLabel(o.cast<int>());
}

py::object from_label(CoxeterLabel l) {
  if (l.is_infinite()) return py::none();
  return py::int_(l.value());
}

Family to_family(const std::string& kind, std::optional<int> n) { return parse_family(kind, n); }

py::dict report_dict(const MetricReport& r) {
  py::dict d;
  d["order"] = r.order;
  d["radius"] = r.radius;
  d["diameter"] = r.diameter;
  d["detour_radius_std"] = r.detour_radius_std;
  d["detour_diameter"] = r.detour_diameter;
  d["detour_center_pair"] = r.detour_center_pair ? py::object(py::int_(*r.detour_center_pair)) : py::none();
  d["metric_dimension"] = r.metric_dimension;
  d["basis"] = r.basis;
  d["eccentricity"] = r.eccentricity;
  d["detour_eccentricity"] = r.detour_eccentricity;
  d["detour_diameter_path"] = r.detour_diameter_path;
  d["detour_radius_path"] = r.detour_radius_path;
  d["detour_center_path"] = r.detour_center_path;
  d["structural"] = r.structural;
  py::list audits;
  for (const auto& a : r.audits) {
    py::dict ad;
    ad["name"] = a.name;
    ad["agree"] = a.agree;
    ad["detail"] = a.detail;
    audits.append(ad);
  }
  d["audits"] = audits;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Commuting graphs of Coxeter groups and finite subgroups of SL(2,C)";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NotCliqueJoin>(m, "NotCliqueJoin", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  py::class_<SimpleGraph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             SimpleGraph g(n);
             for (auto [u, v] : edges) g.add_edge(u, v);
             return g;
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &SimpleGraph::size)
      .def("__len__", &SimpleGraph::size)
      .def("adjacent", &SimpleGraph::adjacent)
      .def("add_edge", &SimpleGraph::add_edge)
      .def("degree", &SimpleGraph::degree)
      .def("neighbors", &SimpleGraph::neighbors)
      .def("edges", &SimpleGraph::edges)
      .def_property_readonly("labels", &SimpleGraph::labels)
      .def(py::self == py::self)
      .def("__repr__", [](const SimpleGraph& g) {
        return "<Graph order=" + std::to_string(g.size()) + " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("complete", &complete);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("petersen", &petersen);
  m.def("complement", &complement);
  m.def("join", &join);
  m.def("disjoint_union", &disjoint_union);
  m.def("is_isomorphic", &is_isomorphic);
  m.def("clique_join_graph", &clique_join_graph, py::arg("universal"), py::arg("clique_sizes"));
  m.def(
      "decompose_clique_join",
      [](const SimpleGraph& g) {
        const CliqueJoinForm f = decompose_clique_join(g);
        return py::make_tuple(f.universal_count, f.size_multiset());
      },
      "(universal_count, ascending clique sizes); raises NotCliqueJoin");
  m.def("read_edge_list", [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  });
  m.def("write_edge_list", [](const SimpleGraph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
  });

  py::class_<CoxeterMatrix>(m, "CoxeterMatrix")
      .def(py::init([](const std::vector<std::vector<py::object>>& rows) {
        std::vector<std::vector<CoxeterLabel>> entries;
        for (const auto& row : rows) {
          entries.emplace_back();
          for (const auto& e : row) entries.back().push_back(to_label(e));
        }
        return CoxeterMatrix(std::move(entries));
      }))
      .def_property_readonly("rank", &CoxeterMatrix::rank)
      .def("entries",
           [](const CoxeterMatrix& cm) {
             py::list rows;
             for (int i = 0; i < cm.rank(); ++i) {
               py::list row;
               for (int j = 0; j < cm.rank(); ++j) row.append(from_label(cm.at(i, j)));
               rows.append(row);
             }
             return rows;
           },
           "Rows with None for infinity")
      .def("presentation", &presentation_text)
      .def(py::self == py::self);

  m.def(
      "realize", [](const SimpleGraph& g, const py::object& label) { return realize(g, to_label(label)); },
      py::arg("graph"), py::arg("label") = py::none(), "label: integer >= 3, 'inf' or None for infinity");
  m.def("commuting_graph_of_generators", &commuting_graph_of_generators);
  m.def("coxeter_graph", &coxeter_graph);

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("name", [](const FiniteGroup& h) { return h.family().name(); })
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("description", &FiniteGroup::description)
      .def("center", [](const FiniteGroup& h) { return center(h); })
      .def("conjugacy_classes", [](const FiniteGroup& h) { return conjugacy_classes(h); })
      .def("subsets", [](const FiniteGroup& h) {
        py::dict d;
        for (auto& s : canonical_subsets(h)) d[py::str(s.name)] = s.elements;
        return d;
      });

  m.def(
      "group", [](const std::string& kind, std::optional<int> n) { return build_group(to_family(kind, n)); },
      py::arg("kind"), py::arg("n") = py::none(), "kind: 'cyclic', 'bd', 'bt', 'bo' or 'bi'");
  m.def(
      "commuting_graph",
      [](const FiniteGroup& h, const std::string& subset) {
        return commuting_graph(h, find_subset(canonical_subsets(h), subset).elements);
      },
      py::arg("group"), py::arg("subset") = "full");

  m.def(
      "mckay",
      [](const FiniteGroup& h, std::uint64_t seed) {
        const McKayData data = mckay_graph(h, seed);
        const SimpleGraph dynkin = dynkin_from_mckay(data);
        const IntMatrix cartan = cartan_matrix(dynkin);
        py::dict d;
        d["dims"] = data.dims;
        d["alpha"] = data.alpha;
        d["trivial_index"] = data.trivial_index;
        d["dynkin"] = ade_type_for(h.family()).name();
        d["cartan"] = cartan;
        d["intersection"] = intersection_matrix(cartan);
        d["cartan_determinant"] = determinant(cartan);
        d["max_integrality_error"] = data.max_integrality_error;
        return d;
      },
      py::arg("group"), py::arg("seed") = kDefaultBurnsideSeed);

  m.def(
      "metrics",
      [](const SimpleGraph& g, int pair_audit_max, int eccentricity_oracle_max, int dimension_oracle_max) {
        return report_dict(full_report(g, MetricOptions{pair_audit_max, eccentricity_oracle_max,
                                                        dimension_oracle_max}));
      },
      py::arg("graph"), py::arg("pair_audit_max") = MetricOptions{}.pair_audit_max,
      py::arg("eccentricity_oracle_max") = MetricOptions{}.eccentricity_oracle_max,
      py::arg("dimension_oracle_max") = MetricOptions{}.dimension_oracle_max);
  m.def("detour_distance", [](const SimpleGraph& g, int a, int b) {
    const DetourResult r = detour_distance_oracle(g, a, b);
    return py::make_tuple(r.length, r.path);
  });
  m.def("metric_dimension", [](const SimpleGraph& g) {
    const BasisResult r = metric_dimension_oracle(g);
    return py::make_tuple(r.dimension, r.basis);
  });

  m.def(
      "verify",
      [](const std::string& section, std::uint64_t seed) {
        py::list out;
        for (const auto& c : run_verification(section, seed).checks) {
          py::dict d;
          d["check_id"] = c.check_id;
          d["location"] = c.location;
          d["status"] = to_string(c.status);
          d["expected"] = c.expected;
          d["observed"] = c.observed;
          out.append(d);
        }
        return out;
      },
      py::arg("section") = "all", py::arg("seed") = kDefaultBurnsideSeed);
}
