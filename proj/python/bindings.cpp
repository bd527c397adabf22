#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holofield/reports.hpp"

namespace py = pybind11;
using namespace holofield;
using reports::json;

namespace {

reports::Options options(const std::string& config, bool verify) {
  reports::Options opt;
  if (!config.empty()) opt.limits = io::limits_from(json::parse(config));
  opt.verify = verify;
  return opt;
}

std::vector<json> parse_all(const std::vector<std::string>& docs) {
  std::vector<json> out;
  for (const auto& d : docs) out.push_back(json::parse(d));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> base(m, "HolofieldError");
  static py::exception<Error> limit(m, "LimitError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      (e.is_limit() ? limit : base)(e.what());
    } catch (const json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // every entry point takes and returns JSON text
  m.def("surface_info", [](const std::string& s, const std::string& config, bool verify) {
    return reports::surface_info(json::parse(s), options(config, verify)).dump();
  }, py::arg("surface"), py::arg("config") = "", py::arg("verify") = false);
  m.def("holonomy", [](const std::string& s, const std::string& config, bool verify) {
    return reports::holonomy(json::parse(s), options(config, verify)).dump();
  }, py::arg("surface"), py::arg("config") = "", py::arg("verify") = false);
  m.def("fod", [](const std::string& s, const std::string& config, bool verify) {
    return reports::fod(json::parse(s), options(config, verify)).dump();
  }, py::arg("subspace"), py::arg("config") = "", py::arg("verify") = false);
  m.def("intersect_fields", [](const std::vector<std::string>& fs, const std::string& config, bool verify) {
    return reports::intersect_fields(parse_all(fs), options(config, verify)).dump();
  }, py::arg("fields"), py::arg("config") = "", py::arg("verify") = false);
  m.def("k_of_m", [](const std::vector<std::string>& ss, const std::string& config, bool verify) {
    return reports::k_of_m(parse_all(ss), options(config, verify)).dump();
  }, py::arg("surfaces"), py::arg("config") = "", py::arg("verify") = false);
  m.def("monodromy", [](const std::string& rep, const std::string& mode, const std::string& config, bool verify) {
    return reports::monodromy(json::parse(rep), mode, options(config, verify)).dump();
  }, py::arg("rep"), py::arg("mode"), py::arg("config") = "", py::arg("verify") = false);
  m.def("typical", [](const std::string& input, const std::string& ambient, const std::string& config, bool verify) {
    return reports::typical(json::parse(input), json::parse(ambient), options(config, verify)).dump();
  }, py::arg("input"), py::arg("ambient"), py::arg("config") = "", py::arg("verify") = false);
}
