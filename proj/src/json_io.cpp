#include "qstack/json_io.hpp"

#include <cmath>

namespace qstack {

json element_to_json(const PrimeField&, PrimeField::Element a) { return a; }

json element_to_json(const RationalField& k, const RationalField::Element& a) {
  return k.to_string(a);
}

json element_to_json(const RealField&, RealField::Element a) {
  if (!std::isfinite(a)) throw Error("cannot serialize a non-finite matrix entry");
  return a;
}

PrimeField::Element element_from_json(const PrimeField& k, const json& j) {
  if (!j.is_number_integer()) throw Error("F_p entries must be integers, got " + j.dump());
  return k.from_int(j.get<std::int64_t>());
}

RationalField::Element element_from_json(const RationalField&, const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) throw Error("rational entries must be integers or \"num/den\" strings");
  const auto s = j.get<std::string>();
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw SingularMatrix("rational '" + s + "' has zero denominator");
  q.canonicalize();
  return q;
}

RealField::Element element_from_json(const RealField&, const json& j) {
  if (!j.is_number()) throw Error("real entries must be numbers, got " + j.dump());
  return j.get<double>();
}

std::size_t square_size(const json& j) {
  if (!j.is_array()) throw DimensionMismatch("matrix must be an array of rows");
  return j.size();
}

json to_json(const CountReport& r) {
  json dims = json::object();
  for (const auto& [v, d] : r.dims) dims[v] = d;
  json out = {{"shape", r.shape_name},
              {"dims", dims},
              {"p", r.p},
              {"rep_count", big_to_string(r.rep_count)},
              {"gauge_order", big_to_string(r.gauge_order)},
              {"stacky_count", big_to_string(r.stacky_count)}};
  if (r.orbit_count) out["orbit_count"] = big_to_string(*r.orbit_count);
  return out;
}

json to_json(const OrbitCensus& c, const std::string& shape_ref) {
  json orbits = json::array();
  for (const auto& o : c.orbits) {
    orbits.push_back({{"size", big_to_string(o.size)},
                      {"stabilizer_order", big_to_string(o.stabilizer_order)},
                      {"representative", to_json(o.representative, shape_ref)}});
  }
  return {{"orbit_count", c.orbits.size()},
          {"rep_count", big_to_string(c.rep_count)},
          {"group_order", big_to_string(c.group_order)},
          {"stacky_sum", big_to_string(c.stacky_sum)},
          {"orbits", orbits}};
}

json to_json(const SolveResult& r, const std::string& shape_ref) {
  return {{"residual", r.residual},   {"iterations", r.iterations},
          {"converged", r.converged}, {"jacobian_rank", r.jacobian_rank},
          {"seed", r.seed},           {"rep", to_json(r.rep, shape_ref)}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qstack
