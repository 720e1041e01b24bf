#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edenca/algca.hpp"
#include "edenca/finite_goe.hpp"
#include "edenca/registry.hpp"
#include "edenca/spec_io.hpp"

namespace py = pybind11;
using namespace edenca;

namespace {

// nlohmann -> Python objects through the json module; keys keep their order.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

FieldSpec field_of(const CellularAutomaton& ca, const std::optional<std::string>& field) {
  if (field) return FieldSpec::parse(*field);
  if (auto f = ca.field()) return *f;
  throw std::invalid_argument("a field is required for finite alphabets");
}

FiniteSubset window_of(const CellularAutomaton& ca, const py::list& sites) {
  std::vector<GroupElement> elements;
  for (const auto& s : sites) elements.push_back(parse_element(ca.group(), from_py(py::reinterpret_borrow<py::object>(s))));
  return FiniteSubset(ca.group(), elements);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Garden-of-Eden analyses for algebraic cellular automata";
  m.attr("__version__") = kVersion;

  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<UnknownEntry>(m, "UnknownEntry", PyExc_KeyError);
  py::register_exception<NonAmenableGroup>(m, "NonAmenableGroup", PyExc_ValueError);

  py::class_<CellularAutomaton>(m, "CellularAutomaton")
      .def_static("from_json", [](const std::string& text) { return parse_spec(text); }, py::arg("text"))
      .def("to_json", [](const CellularAutomaton& ca) { return serialize_spec(ca); })
      .def_property_readonly("group", [](const CellularAutomaton& ca) { return ca.group().to_string(); })
      .def_property_readonly("memory",
                             [](const CellularAutomaton& ca) {
                               std::vector<std::string> out;
                               for (const auto& g : ca.memory()) out.push_back(g.to_string());
                               return out;
                             })
      .def_property_readonly("field",
                             [](const CellularAutomaton& ca) -> std::optional<std::string> {
                               if (auto f = ca.field()) return f->to_string();
                               return std::nullopt;
                             })
      .def("__repr__", [](const CellularAutomaton& ca) {
        return "<CellularAutomaton on " + ca.group().to_string() + ", |M| = " + std::to_string(ca.memory().size()) +
               ">";
      });

  m.def("registry_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : registry()) ids.push_back(e.id);
    return ids;
  });

  m.def(
      "run_registry",
      [](const std::string& id, std::optional<std::string> field, std::int64_t m_max, std::uint64_t seed,
         std::size_t max_window) {
        RunOptions o;
        if (field) o.field = FieldSpec::parse(*field);
        o.m_max = m_max;
        o.seed = seed;
        o.max_window = max_window;
        Report r;
        {
          py::gil_scoped_release release;
          r = run_registry(id, o);
        }
        return to_py(r.analysis_json());
      },
      py::arg("id"), py::arg("field") = py::none(), py::arg("m_max") = 3, py::arg("seed") = 42,
      py::arg("max_window") = 8);

  m.def(
      "krull_dimension",
      [](std::vector<std::string> variables, std::vector<std::string> generators,
         const std::string& field) -> std::optional<std::int64_t> {
        auto d = krull_dimension(Ideal::parse(std::move(variables), generators), FieldSpec::parse(field));
        if (d.is_empty()) return std::nullopt;
        return d.value();
      },
      py::arg("variables"), py::arg("generators"), py::arg("field") = "q",
      "Krull dimension of V(I); None for the empty variety.");

  m.def(
      "groebner_basis",
      [](std::vector<std::string> variables, std::vector<std::string> generators, const std::string& field,
         const std::string& order) {
        auto ideal = Ideal::parse(std::move(variables), generators);
        MonomialOrder o = order == "lex" ? MonomialOrder::lex() : MonomialOrder::degrevlex();
        if (order != "lex" && order != "degrevlex") throw std::invalid_argument("order must be lex or degrevlex");
        Ideal basis{ideal.variables, groebner_basis(ideal, FieldSpec::parse(field), o)};
        return basis.generator_strings();
      },
      py::arg("variables"), py::arg("generators"), py::arg("field") = "q", py::arg("order") = "degrevlex");

  m.def(
      "mdim_estimate",
      [](const CellularAutomaton& ca, std::int64_t m_max, std::optional<std::string> field) {
        return to_py(to_json(mdim_estimate(ca, m_max, field_of(ca, field))));
      },
      py::arg("ca"), py::arg("m_max") = 3, py::arg("field") = py::none());

  m.def(
      "window_image_dim",
      [](const CellularAutomaton& ca, const py::list& window,
         std::optional<std::string> field) -> std::optional<std::int64_t> {
        auto w = window_image_dim(ca, window_of(ca, window), field_of(ca, field));
        if (w.dim.is_empty()) return std::nullopt;
        return w.dim.value();
      },
      py::arg("ca"), py::arg("window"), py::arg("field") = py::none());

  m.def(
      "orphan_certify",
      [](const CellularAutomaton& ca, const py::object& target, std::optional<std::string> field) {
        auto t = pattern_from_json(ca.group(), from_py(target));
        return to_py(to_json(orphan_certify(ca, t, t.support, field_of(ca, field))));
      },
      py::arg("ca"), py::arg("target"), py::arg("field") = py::none());

  m.def(
      "orphan_search",
      [](const CellularAutomaton& ca, std::size_t max_window) {
        return to_py(to_json(orphan_search(ca, max_window).verdict()));
      },
      py::arg("ca"), py::arg("max_window") = 8);

  m.def(
      "mep_search",
      [](const CellularAutomaton& ca, std::size_t max_window) {
        return to_py(to_json(mep_search(ca, max_window).verdict()));
      },
      py::arg("ca"), py::arg("max_window") = 8);

  m.def(
      "linear_preinjectivity",
      [](const CellularAutomaton& ca, std::vector<std::int64_t> radii) {
        return to_py(to_json(linear_preinjectivity(ca, radii)));
      },
      py::arg("ca"), py::arg("radii") = std::vector<std::int64_t>{0, 1, 2});
}
