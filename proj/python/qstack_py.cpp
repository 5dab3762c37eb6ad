// Python bindings. Results cross the boundary as JSON text and are decoded
// by the pure-Python wrapper in qstack/__init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qstack/commands.hpp"
#include "qstack/dsl.hpp"
#include "qstack/error.hpp"
#include "qstack/json_io.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

std::string doc_json(const qstack::QuiverDoc& doc) {
  const qstack::SSet2 shape = doc.shape();
  json out = {{"name", doc.name},
              {"shape", qstack::to_json(shape)},
              {"framing", qstack::to_json(doc.framing())},
              {"dims", doc.dim_map()},
              {"document", qstack::print_quiver(doc)}};
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "qstack core: quiver constructions, point counts, moment-map solves";
  m.attr("__version__") = QSTACK_VERSION;

  // Later registrations are tried first, so the subclass comes second.
  auto& base = py::register_exception<qstack::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<qstack::ParseError>(m, "ParseError", base.ptr());

  m.def("parse", [](const std::string& text) { return doc_json(qstack::parse_quiver(text)); },
        py::arg("text"));
  m.def("canonical", [](const std::string& text) {
    return qstack::print_quiver(qstack::parse_quiver(text));
  }, py::arg("text"));

  m.def("build", [](const std::string& text, const std::string& kind,
                    std::optional<std::vector<std::string>> at) {
    return qstack::build_command(qstack::parse_quiver(text), kind, at).dump();
  }, py::arg("text"), py::arg("kind"), py::arg("at") = py::none());

  m.def("count", [](const std::string& text, std::uint32_t p, const qstack::DimVector& dims,
                    bool orbits) {
    py::gil_scoped_release release;
    return qstack::count_command(qstack::parse_quiver(text), p, dims, orbits).dump();
  }, py::arg("text"), py::arg("p"), py::arg("dims") = qstack::DimVector{}, py::arg("orbits") = false);

  m.def("solve_nakajima", [](const std::string& text, const qstack::DimVector& dims,
                             const std::map<std::string, double>& lambda, double tol,
                             std::uint64_t seed, int max_iter, int starts,
                             std::optional<std::vector<std::string>> frame) {
    qstack::SolveRequest req;
    req.dims = dims;
    req.lambda = lambda;
    req.tol = tol;
    req.seed = seed;
    req.max_iter = max_iter;
    req.starts = starts;
    req.frame = std::move(frame);
    py::gil_scoped_release release;
    return qstack::solve_command(qstack::parse_quiver(text), req).dump();
  }, py::arg("text"), py::arg("dims") = qstack::DimVector{},
     py::arg("lambda_") = std::map<std::string, double>{}, py::arg("tol") = 1e-10,
     py::arg("seed") = 0, py::arg("max_iter") = 200, py::arg("starts") = 1,
     py::arg("frame") = py::none());

  m.def("check_higgs", [](const std::string& datum) {
    return qstack::check_higgs_command(json::parse(datum)).dump();
  }, py::arg("datum"));

  m.def("verify", [](const std::string& suite, std::uint64_t seed, int cases) {
    py::gil_scoped_release release;
    return qstack::verify_command(suite, seed, cases).dump();
  }, py::arg("suite"), py::arg("seed") = 0, py::arg("cases") = 0);
}
