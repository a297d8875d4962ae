#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aq/session.hpp"

namespace py = pybind11;
using namespace aq;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

OrderKind order_of(const std::string& s) {
  if (s == "lex") return OrderKind::Lex;
  if (s == "degrevlex") return OrderKind::DegRevLex;
  throw InputError("unknown order '" + s + "'");
}

RationalPoint point_of(const PresentedAlgebra& S, const std::map<std::string, std::string>& values) {
  std::vector<std::pair<std::string, Scalar>> v;
  for (const auto& [name, text] : values) {
    mpq_class q(text, 10);
    q.canonicalize();
    v.emplace_back(name, S.field().make(q));
  }
  return make_point(S, v, "p");
}

}  // namespace

PYBIND11_MODULE(aqpy, m) {
  m.doc() = "Kahler differentials, cotangent complexes and Andre-Quillen homology";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_RuntimeError);

  py::class_<PresentedAlgebra>(m, "Ring")
      .def(py::init([](std::vector<std::string> vars, std::vector<std::string> relations, std::uint64_t p,
                       std::string name, std::string order) {
             Field k = p == 0 ? Field::rationals() : Field::prime(p);
             return PresentedAlgebra::parse(k, std::move(vars), relations, std::move(name),
                                            MonomialOrder{order_of(order), {}});
           }),
           py::arg("vars"), py::arg("relations") = std::vector<std::string>{}, py::arg("characteristic") = 0,
           py::arg("name") = "S", py::arg("order") = "degrevlex")
      .def_property_readonly("vars", &PresentedAlgebra::vars)
      .def_property_readonly("name", &PresentedAlgebra::name)
      .def("relations", [](const PresentedAlgebra& A) {
        std::vector<std::string> out;
        for (const auto& r : A.relations()) out.push_back(r.to_string());
        return out;
      })
      .def("contains_point", [](const PresentedAlgebra& A, const std::map<std::string, std::string>& pt) {
        try {
          point_of(A, pt);
          return true;
        } catch (const InputError&) {
          return false;
        }
      });

  py::class_<AlgebraMap>(m, "Map")
      .def(py::init([](const PresentedAlgebra& source, const PresentedAlgebra& target,
                       const std::map<std::string, std::string>& images, std::string name) {
             std::vector<std::pair<std::string, std::string>> im(images.begin(), images.end());
             return AlgebraMap::parse(source, target, im, std::move(name));
           }),
           py::arg("source"), py::arg("target"), py::arg("images") = std::map<std::string, std::string>{},
           py::arg("name") = "phi")
      .def_static("structure", [](const PresentedAlgebra& S) {
        return AlgebraMap(PresentedAlgebra::polynomial(S.field(), {}, "k", S.ring()->order()), S, {}, "eta");
      });

  m.def("kahler_dim_at", [](const AlgebraMap& phi, const std::map<std::string, std::string>& pt) {
    return kahler_presentation(phi).module.dim_at(point_of(phi.target(), pt).coords);
  }, "dim of the Kahler differentials tensored with the residue field at a point");

  m.def("aq_dims_at", [](const AlgebraMap& phi, const std::map<std::string, std::string>& pt, int n_max) {
    return aq_dims_at(phi, point_of(phi.target(), pt), n_max);
  }, py::arg("map"), py::arg("point"), py::arg("n_max") = 2, "dims of AQ_n(S|R; k(p)), n <= n_max <= 2");

  m.def("aq_homology", [](const AlgebraMap& phi, std::optional<std::map<std::string, std::string>> pt, int n_max) {
    Coefficients N = pt ? Coefficients::residue(point_of(phi.target(), *pt)) : Coefficients::target_ring(phi.target());
    return to_py(homology_json(aq_homology(phi, N, n_max)));
  }, py::arg("map"), py::arg("point") = py::none(), py::arg("n_max") = 2,
        "AQ homology report with residue coefficients at point, or with coefficients in the target");

  m.def("classify", [](const std::string& property, const AlgebraMap& phi,
                       const std::vector<std::map<std::string, std::string>>& points) {
    std::vector<RationalPoint> pts;
    for (const auto& p : points) pts.push_back(point_of(phi.target(), p));
    return to_py(classification_json(classify_map(parse_property(property), phi, pts), phi.target().field()));
  });

  m.def("run_suite", [](const std::string& name, std::uint64_t seed) { return to_py(suite_json(run_suite(name, seed))); },
        py::arg("name"), py::arg("seed") = 1);
  m.def("suite_names", &suite_names);

  m.def("format_session", [](const std::string& text) { return print_session(parse_session(text)); });

  m.def("run_session", [](const std::string& text, const std::string& order, std::optional<int> max_level) {
    RunOptions o;
    o.order = order_of(order);
    o.max_level = max_level;
    SessionResult r = run_session(parse_session(text), o);
    Json tasks = Json::array();
    for (const auto& t : r.tasks) tasks.push_back(t.canonical);
    return to_py({{"exit_code", r.exit_code}, {"summary", r.summary()}, {"tasks", tasks}});
  }, py::arg("text"), py::arg("order") = "degrevlex", py::arg("max_level") = py::none());
}
