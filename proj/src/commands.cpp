#include "qstack/commands.hpp"

#include <memory>

#include "qstack/action.hpp"
#include "qstack/error.hpp"
#include "qstack/higgs.hpp"
#include "qstack/json_io.hpp"
#include "qstack/moment_map.hpp"
#include "qstack/quiver_ops.hpp"
#include "qstack/solver.hpp"
#include "qstack/verify.hpp"

namespace qstack {

namespace {

json shape_payload(const std::string& name, const SSet2& shape, const FramingFn& framing) {
  return {{"name", name},
          {"shape", to_json(shape)},
          {"framing", to_json(framing)},
          {"vertices", shape.vertex_count()},
          {"edges", shape.nondegenerate_edge_count()},
          {"identity_edges", shape.edge_count() - shape.nondegenerate_edge_count()},
          {"triangles", shape.triangle_count()},
          {"document", print_quiver(make_doc(name, shape, framing))}};
}

template <Field F>
json check_higgs_with(const F& field, const json& j) {
  const auto h = higgs_from_json(field, j);
  const auto diagram = higgs_to_diagram(field, h);
  const auto diagnostics = validate_rep(diagram);
  return {{"field", field.name()},
          {"n", h.n},
          {"m", h.m},
          {"integrable", integrability_check(h)},
          {"diagram_valid", diagnostics.empty()},
          {"diagnostics", diagnostics},
          {"diagram_dims", diagram.dim_map()}};
}

}  // namespace

json build_command(const QuiverDoc& doc, const std::string& kind,
                   const std::optional<std::vector<std::string>>& frame_at) {
  const SSet2 shape = doc.shape();
  const FramingFn framing = doc.framing();
  json result;
  if (kind == "tilde") {
    const TildeQuiver tq = tilde(shape, framing);
    result = shape_payload(doc.name + "_tilde", tq.shape, tq.framing);
  } else if (kind == "double") {
    const DoubledQuiver dq = double_quiver(shape);
    FramingFn f;
    for (const auto& v : dq.shape.vertices()) f.set(v, framing.is_framing(v));
    result = shape_payload(doc.name + "_double", dq.shape, f);
    result["star"] = dq.star;
  } else if (kind == "frame") {
    const FramedQuiver fq = frame(shape, frame_at);
    FramingFn f = fq.framing;
    for (const auto& v : shape.vertices()) {
      if (framing.is_framing(v)) f.set(v, true);
    }
    result = shape_payload(doc.name + "_framed", fq.shape, f);
  } else {
    throw Error("unknown construction '" + kind + "'");
  }
  result["construction"] = kind;
  return result;
}

json count_command(const QuiverDoc& doc, std::uint32_t p, const DimVector& dims, bool orbits) {
  auto shape = std::make_shared<const SSet2>(doc.shape());
  DimVector all = doc.dim_map();
  for (const auto& [v, d] : dims) {
    if (!shape->vertex_index(v)) throw InvalidShape("dimension given for unknown vertex '" + v + "'");
    all[v] = d;
  }
  const FramingFn framing = doc.framing();
  CountReport rep = count_points(shape, all, p, framing, doc.name);
  if (!orbits) return to_json(rep);
  const OrbitCensus census = orbit_census(shape, all, p, framing);
  rep.orbit_count = mpz_class(static_cast<unsigned long>(census.orbits.size()));
  json result = to_json(rep);
  result["census"] = to_json(census, doc.name);
  return result;
}

json solve_command(const QuiverDoc& doc, const SolveRequest& req) {
  MomentMapOptions opts;
  opts.frame_vertices = req.frame;
  const MomentExpr m = build_moment_map(doc.shape(), doc.framing(), opts);
  DimVector dims = doc.dim_map();
  for (const auto& [v, d] : req.dims) dims[v] = d;
  for (const auto& v : m.shape->vertices()) {
    if (!dims.count(v)) throw DimensionMismatch("no dimension given for vertex '" + v + "'");
  }
  SolveConfig cfg;
  cfg.lambda = req.lambda;
  cfg.tol = req.tol;
  cfg.seed = req.seed;
  cfg.max_iter = req.max_iter;
  const MultiStartResult ms = solve_multistart(m, dims, cfg, req.starts, req.threads);
  json runs = json::array();
  for (const auto& r : ms.runs) {
    runs.push_back({{"seed", r.seed},
                    {"residual", r.residual},
                    {"converged", r.converged},
                    {"iterations", r.iterations}});
  }
  return {{"quiver", doc.name},
          {"doubled_shape", to_json(*m.shape)},
          {"starts", req.starts},
          {"converged_count", ms.converged_count},
          {"best", to_json(ms.best, doc.name + "_double")},
          {"runs", runs}};
}

json check_higgs_command(const json& datum) {
  const json field = datum.value("field", json("Q"));
  if (field.is_number_integer()) return check_higgs_with(PrimeField(field.get<std::uint32_t>()), datum);
  if (field == "Q") return check_higgs_with(RationalField(), datum);
  if (field == "R") return check_higgs_with(RealField(), datum);
  throw Error("Higgs datum: 'field' must be a prime, \"Q\" or \"R\"");
}

json verify_command(const std::string& suite, std::uint64_t seed, int cases) {
  const SuiteConfig cfg{seed, cases};
  if (suite != "all") return to_json(run_suite(suite, cfg));
  bool ok = true;
  json suites = json::array();
  for (const auto& name : suite_names()) {
    const SuiteResult r = run_suite(name, cfg);
    ok = ok && r.ok();
    suites.push_back(to_json(r));
  }
  return {{"ok", ok}, {"suites", suites}};
}

}  // namespace qstack
