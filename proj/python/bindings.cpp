#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "novelty_gauge/config.hpp"
#include "novelty_gauge/difficulty.hpp"
#include "novelty_gauge/dynamics.hpp"
#include "novelty_gauge/level_io.hpp"
#include "novelty_gauge/reachability.hpp"
#include "novelty_gauge/report.hpp"

namespace py = pybind11;
namespace ng = novelty_gauge;

namespace {

ng::RunConfig config_from(const std::optional<std::string>& ini, std::optional<double> alpha) {
  ng::RunConfig config = ini ? ng::RunConfig::from_ini(*ini) : ng::RunConfig{};
  if (alpha) config.alpha = *alpha;
  config.validate();
  return config;
}

py::object to_dict(const std::string& json_text) { return py::module_::import("json").attr("loads")(json_text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Novelty detection difficulty for physics puzzle levels";

  py::register_exception<ng::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ng::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ng::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ng::InsufficientData>(m, "InsufficientData", PyExc_ValueError);
  py::register_exception<ng::UnknownObject>(m, "UnknownObject", PyExc_KeyError);
  py::exception<ng::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ng::ValidationError& e) {
      py::object type = py::module_::import("novelty_gauge._core").attr("ValidationError");
      py::object exc = type(e.what());
      exc.attr("reason") = e.reason();
      exc.attr("object_ids") = e.object_ids();
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<ng::Scene>(m, "Scene")
      .def_property_readonly("object_ids",
                             [](const ng::Scene& s) {
                               std::vector<std::string> ids;
                               for (const auto& o : s.objects()) ids.push_back(o.id);
                               return ids;
                             })
      .def_property_readonly("birds",
                             [](const ng::Scene& s) {
                               std::vector<std::string> out;
                               for (auto b : s.birds()) out.emplace_back(ng::to_string(b));
                               return out;
                             })
      .def("to_json", &ng::serialize_level);

  m.def("load_level", [](const std::filesystem::path& p) { return ng::load_level(p); }, py::arg("path"));
  m.def("parse_level", [](const std::string& text) { return ng::parse_level(text); }, py::arg("text"));

  m.def("default_config", [] { return ng::RunConfig{}.to_ini(); }, "Default configuration as INI text.");

  m.def(
      "analyze",
      [](const ng::Scene& scene, const std::string& novelty, std::optional<double> alpha,
         const std::optional<std::string>& config) {
        const ng::NoveltySpec spec = ng::NoveltySpec::parse(novelty);
        const ng::DifficultyReport report = ng::analyze(scene, spec, config_from(config, alpha));
        return to_dict(ng::render_json_line(report, "", spec.to_string()));
      },
      py::arg("scene"), py::arg("novelty"), py::arg("alpha") = py::none(), py::arg("config") = py::none());

  m.def(
      "targets",
      [](const ng::Scene& scene, const std::string& bird) {
        std::vector<std::string> ids;
        for (const auto& o : ng::targets(scene, ng::bird_from_string(bird), ng::PhysicsConstants{})) ids.push_back(o.id);
        return ids;
      },
      py::arg("scene"), py::arg("bird") = "red");

  m.def(
      "vertical_impact",
      [](const ng::Scene& scene, const std::vector<std::string>& seeds) {
        return ng::vertical_impact(scene, std::span<const std::string>(seeds));
      },
      py::arg("scene"), py::arg("seeds"));

  m.def("combined_difficulty", &ng::combined_difficulty, py::arg("pid"), py::arg("bid"), py::arg("alpha") = 0.5);

  m.def(
      "categorize",
      [](const std::vector<double>& scores) {
        std::vector<std::string> out;
        for (auto c : ng::categorize(scores)) out.emplace_back(ng::to_string(c));
        return out;
      },
      py::arg("scores"));
}
