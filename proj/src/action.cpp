#include "qstack/action.hpp"

#include <unordered_map>
#include <unordered_set>

#include "qstack/enumerate.hpp"

namespace qstack {

mpz_class gl_order(std::uint32_t p, std::size_t d) {
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
  mpz_class out = 1;
  mpz_class pi = 1;
  for (std::size_t i = 0; i < d; ++i) {
    out *= pd - pi;
    pi *= p;
  }
  return out;
}

mpz_class gauge_order(const SSet2& shape, const DimVector& dims, const FramingFn& framing,
                      std::uint32_t p) {
  mpz_class out = 1;
  for (const auto& v : framing.regular_vertices(shape)) {
    auto it = dims.find(v);
    if (it == dims.end()) throw DimensionMismatch("no dimension given for vertex '" + v + "'");
    out *= gl_order(p, it->second);
  }
  return out;
}

CountReport count_points(std::shared_ptr<const SSet2> shape, const DimVector& dims,
                         std::uint32_t p, const FramingFn& framing, const std::string& shape_name) {
  const PrimeField field(p);
  framing.require_total(*shape);
  CountReport report;
  report.shape_name = shape_name;
  report.p = p;
  for (const auto& v : shape->vertices()) {
    auto it = dims.find(v);
    if (it == dims.end()) throw DimensionMismatch("no dimension given for vertex '" + v + "'");
    report.dims[v] = it->second;
  }
  const std::uint64_t n = count_reps(shape, dims, field);
  report.rep_count = mpz_class(std::to_string(n));
  report.gauge_order = gauge_order(*shape, dims, framing, p);
  report.stacky_count = mpq_class(report.rep_count, report.gauge_order);
  report.stacky_count.canonicalize();
  return report;
}

std::vector<GaugeElement<PrimeField>> all_gauge_elements(const SSet2& shape, const DimVector& dims,
                                                         const FramingFn& framing,
                                                         const PrimeField& field) {
  std::vector<GaugeElement<PrimeField>> out(1);
  for (const auto& v : framing.regular_vertices(shape)) {
    const auto group = general_linear_group(field, dims.at(v));
    std::vector<GaugeElement<PrimeField>> next;
    next.reserve(out.size() * group.size());
    for (const auto& partial : out) {
      for (const auto& m : group) {
        auto g = partial;
        g.mats.emplace(v, m);
        next.push_back(std::move(g));
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

std::string rep_key(const Rep<PrimeField>& r) {
  std::string key;
  const SSet2& s = r.shape();
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    if (s.edges()[e].identity) continue;
    for (auto x : r.mat(e).entries()) key.push_back(static_cast<char>(x));
  }
  return key;
}

}  // namespace

OrbitCensus orbit_census(std::shared_ptr<const SSet2> shape, const DimVector& dims,
                         std::uint32_t p, const FramingFn& framing) {
  const PrimeField field(p);
  framing.require_total(*shape);

  std::vector<Rep<PrimeField>> reps;
  {
    RepStream stream(shape, dims, field);
    while (stream.next()) reps.push_back(stream.current());
  }
  OrbitCensus census;
  census.rep_count = static_cast<unsigned long>(reps.size());
  census.group_order = gauge_order(*shape, dims, framing, p);
  if (census.rep_count * census.group_order > mpz_class(static_cast<unsigned long>(kEnumerationGuard))) {
    throw GuardExceeded("orbit census needs |Rep| * |G| = " +
                        mpz_class(census.rep_count * census.group_order).get_str() +
                        " actions, above the limit of 2^24");
  }
  const auto group = all_gauge_elements(*shape, dims, framing, field);

  std::unordered_set<std::string> visited;
  census.stacky_sum = 0;
  for (const auto& r : reps) {
    const std::string key = rep_key(r);
    if (visited.count(key) != 0) continue;
    std::unordered_set<std::string> orbit;
    unsigned long stabilizer = 0;
    for (const auto& g : group) {
      const std::string k = rep_key(act(g, r, framing));
      if (k == key) ++stabilizer;
      orbit.insert(k);
    }
    const mpz_class size = static_cast<unsigned long>(orbit.size());
    if (size * stabilizer != census.group_order) {
      throw Error("orbit-stabilizer violated: |orbit| * |stab| != |G|");
    }
    visited.insert(orbit.begin(), orbit.end());
    census.stacky_sum += mpq_class(1, stabilizer);
    census.orbits.push_back({r, size, mpz_class(stabilizer)});
  }
  census.stacky_sum.canonicalize();
  return census;
}

}  // namespace qstack
