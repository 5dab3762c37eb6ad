#include "qstack/verify.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <functional>
#include <numeric>
#include <map>
#include <set>

#include "qstack/action.hpp"
#include "qstack/chain.hpp"
#include "qstack/enumerate.hpp"
#include "qstack/higgs.hpp"
#include "qstack/moment_map.hpp"
#include "qstack/oracles.hpp"
#include "qstack/quiver_ops.hpp"
#include "qstack/solver.hpp"
#include "qstack/triple.hpp"

namespace qstack {

namespace {

constexpr std::size_t kMaxFailuresKept = 5;

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::size_t pick_dim(Rng& rng, std::size_t hi) {
  return static_cast<std::size_t>(pick(rng, 0, static_cast<int>(hi)));
}

bool coin(Rng& rng) { return pick(rng, 0, 1) == 1; }

int default_cases(const SuiteConfig& cfg, int fallback) { return cfg.cases > 0 ? cfg.cases : fallback; }

std::string dims_string(const DimVector& dims) {
  std::string s;
  for (const auto& [v, d] : dims) s += (s.empty() ? "" : ",") + v + "=" + std::to_string(d);
  return s;
}

template <Field F>
double relative_error(const Matrix<F>& got, const Matrix<F>& want) {
  const double scale_ref = std::max(frobenius_norm(want), 1.0);
  return frobenius_distance(got, want) / scale_ref;
}

template <Field F>
std::optional<Matrix<F>> random_invertible(const F& k, std::size_t n, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto m = random_matrix(k, n, n, rng);
    if (inverse(m)) return m;
  }
  return std::nullopt;
}

// Random data on every non-identity edge.
template <Field F>
Rep<F> random_rep(std::shared_ptr<const SSet2> shape, const F& k, const DimVector& dims, Rng& rng) {
  Rep<F> r = Rep<F>::zero(shape, k, dims);
  for (std::size_t e = 0; e < shape->edge_count(); ++e) {
    if (shape->edges()[e].identity) continue;
    r.mat(e) = random_matrix(k, r.mat(e).rows(), r.mat(e).cols(), rng);
  }
  return r;
}

// ---- trace composition ---------------------------------------------------

template <Field F>
void trace_case(SuiteResult& out, const F& k, Rng& rng, double tol) {
  const std::size_t u = pick_dim(rng, 4), v = pick_dim(rng, 4), w = pick_dim(rng, 4);
  const auto f = random_matrix(k, v, u, rng);
  const auto g = random_matrix(k, w, v, rng);
  const auto composed = compose_via_trace(Triple<F>::of(g), Triple<F>::of(f));
  const auto expected = oracle::product(g, f);
  bool pass = composed.src_dim == u && composed.tgt_dim == w;
  if (pass) {
    if constexpr (F::exact) {
      pass = oracle::equal(composed.mat, expected);
    } else {
      pass = relative_error(composed.mat, expected) <= tol;
    }
  }
  out.record(pass, k.name() + " " + std::to_string(u) + "->" + std::to_string(v) + "->" +
                       std::to_string(w) + ": trace composite differs from the product");
}

// ---- internal category ---------------------------------------------------

template <Field F>
void category_case(SuiteResult& out, const F& k, Rng& rng) {
  const std::size_t a = pick_dim(rng, 4), b = pick_dim(rng, 4), c = pick_dim(rng, 4),
                    d = pick_dim(rng, 4);
  const auto f = Triple<F>::of(random_matrix(k, b, a, rng));
  const auto g = Triple<F>::of(random_matrix(k, c, b, rng));
  const auto h = Triple<F>::of(random_matrix(k, d, c, rng));
  const std::string where = k.name() + " " + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + "," + std::to_string(d) + ": ";
  const auto left = triple_c(triple_c(h, g), f);
  const auto right = triple_c(h, triple_c(g, f));
  out.record(left.mat == right.mat && left.src_dim == right.src_dim, where + "associativity");
  out.record(triple_c(triple_e(k, b), f).mat == f.mat, where + "left unit");
  out.record(triple_c(f, triple_e(k, a)).mat == f.mat, where + "right unit");
  const auto gf = triple_c(g, f);
  out.record(triple_s(gf) == triple_s(f) && triple_t(gf) == triple_t(g), where + "source/target");
  const auto e = triple_e(k, a);
  out.record(triple_s(e) == a && triple_t(e) == a, where + "unit source/target");
}

// ---- tilde bijection and coequalizer instances ---------------------------

struct CountInstance {
  std::string name;
  std::shared_ptr<const SSet2> quiver;
  FramingFn framing;
  DimVector dims;
  std::uint32_t p;
};

std::vector<CountInstance> count_instances() {
  auto arrow = std::make_shared<const SSet2>(std::vector<std::string>{"a", "b"},
                                             std::vector<Edge>{{"e", "a", "b"}},
                                             std::vector<Triangle>{});
  auto chain = std::make_shared<const SSet2>(
      std::vector<std::string>{"a", "b", "c"},
      std::vector<Edge>{{"e1", "a", "b"}, {"e2", "b", "c"}}, std::vector<Triangle>{});
  auto jordan = std::make_shared<const SSet2>(std::vector<std::string>{"a"},
                                              std::vector<Edge>{{"x", "a", "a"}},
                                              std::vector<Triangle>{});
  FramingFn chain_framing({{"a", false}, {"b", false}, {"c", true}});
  std::vector<CountInstance> out;
  for (std::uint32_t p : {2U, 3U}) {
    out.push_back({"a->b", arrow, FramingFn::all_regular(*arrow), {{"a", 1}, {"b", 1}}, p});
  }
  out.push_back({"a->b->c (c framed)", chain, chain_framing, {{"a", 1}, {"b", 1}, {"c", 1}}, 2});
  for (std::uint32_t p : {2U, 3U}) {
    out.push_back({"jordan", jordan, FramingFn::all_regular(*jordan), {{"a", 1}}, p});
  }
  return out;
}

std::string rep_key(const Rep<PrimeField>& r) {
  std::string key;
  for (const auto& m : r.mats()) {
    for (auto x : m.entries()) key.push_back(static_cast<char>('0' + x));
    key.push_back('|');
  }
  return key;
}

}  // namespace

void SuiteResult::record(bool pass, const std::string& what) {
  ++cases;
  if (pass) {
    ++passed;
    return;
  }
  ++violations;
  if (failures.size() < kMaxFailuresKept) failures.push_back(what);
}

void SuiteResult::record_soft(bool pass, const std::string& what) {
  ++cases;
  if (pass) {
    ++passed;
  } else if (failures.size() < kMaxFailuresKept) {
    failures.push_back(what);
  }
}

Matrix<PrimeField> random_matrix(const PrimeField& k, std::size_t rows, std::size_t cols, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, k.characteristic() - 1);
  Matrix<PrimeField> m(k, rows, cols);
  for (auto& x : m.entries()) x = dist(rng);
  return m;
}

Matrix<RationalField> random_matrix(const RationalField& k, std::size_t rows, std::size_t cols,
                                    Rng& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<unsigned long> den(1, 3);
  Matrix<RationalField> m(k, rows, cols);
  for (auto& x : m.entries()) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  return m;
}

Matrix<RealField> random_matrix(const RealField& k, std::size_t rows, std::size_t cols, Rng& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix<RealField> m(k, rows, cols);
  for (auto& x : m.entries()) x = dist(rng);
  return m;
}

SuiteResult verify_trace_composition(const SuiteConfig& cfg) {
  SuiteResult out{"trace-composition"};
  Rng rng(cfg.seed);
  const PrimeField f7(7);
  const RationalField q;
  const RealField r;
  const double tol = 1e-12;
  const int n = default_cases(cfg, 1000);
  for (int i = 0; i < n; ++i) {
    switch (i % 3) {
      case 0: trace_case(out, f7, rng, tol); break;
      case 1: trace_case(out, q, rng, tol); break;
      default: trace_case(out, r, rng, tol); break;
    }
  }
  out.details = {{"instances", n}, {"rings", {"F_7", "Q", "R"}}, {"float_tolerance", tol}};
  return out;
}

SuiteResult verify_internal_category(const SuiteConfig& cfg) {
  SuiteResult out{"internal-category"};
  Rng rng(cfg.seed);
  const PrimeField f7(7);
  const RationalField q;
  const int n = default_cases(cfg, 1000);
  for (int i = 0; i < n; ++i) {
    if (i % 2 == 0) {
      category_case(out, f7, rng);
    } else {
      category_case(out, q, rng);
    }
  }
  out.details = {{"instances", n}, {"laws_per_instance", 5}};
  return out;
}

SuiteResult verify_tilde_bijection(const SuiteConfig&) {
  SuiteResult out{"tilde-bijection"};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& inst : count_instances()) {
    const PrimeField k(inst.p);
    const std::string where = inst.name + " p=" + std::to_string(inst.p) + ": ";
    const TildeQuiver tq = tilde(*inst.quiver, inst.framing);
    auto tshape = std::make_shared<const SSet2>(tq.shape);
    out.record(validate(tq.shape).empty(), where + "tilde shape is invalid");
    DimVector tdims = inst.dims;
    for (const auto& [v, copy] : tq.vertex_copy) tdims[copy] = inst.dims.at(v);

    const std::uint64_t tilde_count = count_reps(tshape, tdims, k);
    const std::uint64_t tilde_oracle = oracle::rep_count(tshape, tdims, inst.p);
    std::uint64_t group = 1;
    for (const auto& v : inst.framing.regular_vertices(*inst.quiver)) {
      group *= oracle::gl_count(inst.p, inst.dims.at(v));
    }
    const std::uint64_t base = oracle::rep_count(inst.quiver, inst.dims, inst.p);
    out.record(tilde_count == tilde_oracle, where + "tilde count disagrees with the oracle");
    out.record(tilde_count == group * base, where + "|Rep(tilde)| != |G| |Rep|");

    // Every (g, rho) encodes to a valid tilde rep; decoding inverts encoding;
    // every tilde rep arises this way.
    std::set<std::string> encoded;
    bool round_trip = true;
    const auto gauge = all_gauge_elements(*inst.quiver, inst.dims, inst.framing, k);
    oracle::for_each_rep(inst.quiver, inst.dims, k, [&](const Rep<PrimeField>& rho) {
      for (const auto& g : gauge) {
        const auto enc = tilde_encode(g, rho, tq, inst.framing);
        if (!validate_rep(enc).empty()) round_trip = false;
        const auto dec = tilde_decode(enc, inst.quiver, tq);
        if (!(dec.rho == rho) || !(dec.psi == act(g, rho, inst.framing))) round_trip = false;
        for (const auto& [v, m] : g.mats) {
          if (!(dec.g.mats.at(v) == m)) round_trip = false;
        }
        encoded.insert(rep_key(enc));
      }
    });
    out.record(round_trip, where + "encode/decode is not a round trip");
    bool surjective = true;
    RepStream stream(tshape, tdims, k);
    while (stream.next()) {
      if (!encoded.count(rep_key(stream.current()))) surjective = false;
    }
    out.record(surjective && encoded.size() == tilde_count, where + "encoding is not a bijection");
    rows.push_back({{"instance", inst.name},
                    {"p", inst.p},
                    {"dims", dims_string(inst.dims)},
                    {"tilde_reps", tilde_count},
                    {"gauge_order", group},
                    {"reps", base}});
  }
  out.details = {{"instances", rows}};
  return out;
}

SuiteResult verify_coequalizer(const SuiteConfig&) {
  SuiteResult out{"coequalizer"};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& inst : count_instances()) {
    const PrimeField k(inst.p);
    const std::string where = inst.name + " p=" + std::to_string(inst.p) + ": ";
    const auto census = orbit_census(inst.quiver, inst.dims, inst.p, inst.framing);
    const auto report = count_points(inst.quiver, inst.dims, inst.p, inst.framing, inst.name);
    out.record(census.stacky_sum == report.stacky_count, where + "sum 1/|Stab| != |Rep|/|G|");

    // Burnside: orbits = average number of fixed points.
    const auto gauge = all_gauge_elements(*inst.quiver, inst.dims, inst.framing, k);
    std::uint64_t fixed = 0;
    std::uint64_t reps = 0;
    oracle::for_each_rep(inst.quiver, inst.dims, k, [&](const Rep<PrimeField>& rho) {
      ++reps;
      for (const auto& g : gauge) fixed += act(g, rho, inst.framing) == rho;
    });
    out.record(fixed % gauge.size() == 0 && fixed / gauge.size() == census.orbits.size(),
               where + "orbit count disagrees with Burnside");
    mpz_class total = 0;
    for (const auto& o : census.orbits) total += o.size;
    out.record(total == reps && census.rep_count == reps, where + "orbits do not partition Rep");
    rows.push_back({{"instance", inst.name},
                    {"p", inst.p},
                    {"orbits", census.orbits.size()},
                    {"stacky_sum", census.stacky_sum.get_str()},
                    {"rep_over_group", report.stacky_count.get_str()}});
  }
  out.details = {{"instances", rows}};
  return out;
}

namespace {

template <Field F>
Rep<F> random_chain(int n, bool with_triangles, bool coherent, const F& k, std::size_t max_dim,
                    Rng& rng) {
  auto shape = shared_simplex(n, with_triangles);
  DimVector dims;
  for (int i = 0; i <= n; ++i) dims[simplex_vertex_id(i)] = pick_dim(rng, max_dim);
  Rep<F> r = random_rep(shape, k, dims, rng);
  if (coherent) {
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 2; j <= n; ++j) r.set(simplex_edge_id(i, j), spine_composite(r, i, j));
    }
  }
  return r;
}

// The definitional check: every edge equals the naive product along the spine.
template <Field F>
bool spine_coherent(const Rep<F>& r, int n) {
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Matrix<F> acc = Matrix<F>::identity(r.field(), r.dim(simplex_vertex_id(i)));
      for (int s = i; s < j; ++s) acc = oracle::product(r.mat(simplex_edge_id(s, s + 1)), acc);
      if (!oracle::equal(acc, r.mat(simplex_edge_id(i, j)))) return false;
    }
  }
  return true;
}

std::vector<int> random_surjection(int q, int n, Rng& rng) {
  // q + 1 points onto n + 1 values, monotone: choose which steps increase.
  std::vector<int> steps(static_cast<std::size_t>(q), 0);
  std::fill(steps.begin(), steps.begin() + n, 1);
  std::shuffle(steps.begin(), steps.end(), rng);
  std::vector<int> out{0};
  for (int s : steps) out.push_back(out.back() + s);
  return out;
}

std::vector<int> random_injection(int m, int q, Rng& rng) {
  std::vector<int> all(static_cast<std::size_t>(q + 1));
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> out(all.begin(), all.begin() + m + 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> random_monotone(int m, int n, Rng& rng) {
  std::vector<int> out;
  for (int i = 0; i <= m; ++i) out.push_back(pick(rng, 0, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> compose_maps(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out;
  for (int x : inner) out.push_back(outer[static_cast<std::size_t>(x)]);
  return out;
}

std::string map_string(const std::vector<int>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + "]";
}

}  // namespace

SuiteResult verify_chain_coherence(const SuiteConfig& cfg) {
  SuiteResult out{"chain-coherence"};
  Rng rng(cfg.seed);
  const int n_cases = default_cases(cfg, 300);
  int coherent_cases = 0;
  for (int c = 0; c < n_cases; ++c) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[static_cast<std::size_t>(pick(rng, 0, 2))];
    const PrimeField k(p);
    const int n = pick(rng, 2, 5);
    const bool coherent = coin(rng);
    const auto r = random_chain(n, true, coherent, k, 2, rng);
    const bool subsets = check_chain_coherence(r);
    const bool triangles = triangles_commute(r, 0.0);
    const bool spine = spine_coherent(r, n);
    coherent_cases += spine;
    out.record(subsets == triangles && triangles == spine && (!coherent || spine),
               "Delta^" + std::to_string(n) + " over F_" + std::to_string(p) +
                   ": subset check " + (subsets ? "true" : "false") + ", triangle check " +
                   (triangles ? "true" : "false"));
  }
  out.details = {{"instances", n_cases}, {"coherent", coherent_cases}};
  return out;
}

SuiteResult verify_chain_coherence_exhaustive(int n, std::size_t max_dim, std::uint32_t p) {
  SuiteResult out{"chain-coherence-exhaustive"};
  const PrimeField k(p);
  auto shape = shared_simplex(n, true);
  std::vector<std::size_t> dims(static_cast<std::size_t>(n + 1), 0);
  std::int64_t coherent = 0;
  std::int64_t mismatches = 0;
  std::int64_t dim_vectors = 0;
  while (true) {
    DimVector dv;
    for (int i = 0; i <= n; ++i) dv[simplex_vertex_id(i)] = dims[static_cast<std::size_t>(i)];
    ++dim_vectors;
    RepStream stream(shape, dv, k, EnumerationMode::all_assignments);
    while (stream.next()) {
      const auto& r = stream.current();
      const bool a = check_chain_coherence(r, 0.0);
      const bool b = triangles_commute(r, 0.0);
      coherent += b;
      ++out.cases;
      if (a == b) {
        ++out.passed;
      } else {
        ++mismatches;
        ++out.violations;
        if (out.failures.size() < kMaxFailuresKept) {
          out.failures.push_back("dims " + dims_string(dv) + ": checks disagree");
        }
      }
    }
    std::size_t i = 0;
    while (i < dims.size() && dims[i] == max_dim) dims[i++] = 0;
    if (i == dims.size()) break;
    ++dims[i];
  }
  out.details = {{"n", n},
                 {"max_dim", max_dim},
                 {"p", p},
                 {"dim_vectors", dim_vectors},
                 {"assignments", out.cases},
                 {"coherent", coherent},
                 {"mismatches", mismatches}};
  return out;
}

SuiteResult verify_functoriality(const SuiteConfig& cfg) {
  SuiteResult out{"functoriality"};
  Rng rng(cfg.seed);
  const PrimeField k(5);
  const int n_cases = default_cases(cfg, 500);
  for (int c = 0; c < n_cases; ++c) {
    const int n = pick(rng, 1, 4);
    const bool with_triangles = coin(rng);
    const auto r = random_chain(n, with_triangles, with_triangles, k, 2, rng);
    const int q = n + pick(rng, 0, 2);
    const auto sigma = random_surjection(q, n, rng);
    const auto iota = random_injection(pick(rng, 0, q), q, rng);
    const auto lhs = restrict_along(iota, degenerate_along(sigma, r));
    const auto composite = compose_maps(sigma, iota);
    const auto rhs = reindex_along(composite, r);
    bool pass = lhs == rhs;
    if (pass && with_triangles) {
      // Against the spine products computed directly.
      const int m = static_cast<int>(composite.size()) - 1;
      for (int i = 0; i <= m && pass; ++i) {
        for (int j = i + 1; j <= m && pass; ++j) {
          const int a = composite[static_cast<std::size_t>(i)];
          const int b = composite[static_cast<std::size_t>(j)];
          Matrix<PrimeField> acc = Matrix<PrimeField>::identity(k, r.dim(static_cast<std::size_t>(a)));
          for (int s = a; s < b; ++s) acc = oracle::product(r.mat(simplex_edge_id(s, s + 1)), acc);
          pass = oracle::equal(acc, lhs.mat(simplex_edge_id(i, j)));
        }
      }
      // Arbitrary monotone composites on coherent chains.
      const int mid = pick(rng, 0, 4);
      const auto theta1 = random_monotone(mid, n, rng);
      const auto theta2 = random_monotone(pick(rng, 0, 4), mid, rng);
      pass = pass && reindex_along(theta2, reindex_along(theta1, r)) ==
                         reindex_along(compose_maps(theta1, theta2), r);
    }
    out.record(pass, std::string(with_triangles ? "Delta^" : "P^") + std::to_string(n) +
                         " sigma=" + map_string(sigma) + " iota=" + map_string(iota));
  }
  out.details = {{"instances", n_cases}, {"field", "F_5"}};
  return out;
}

namespace {

template <Field F>
bool commutators_vanish(const HiggsDatum<F>& h) {
  for (std::size_t i = 0; i < h.m; ++i) {
    for (std::size_t j = i + 1; j < h.m; ++j) {
      if (!oracle::equal(oracle::product(h.phi[i], h.phi[j]), oracle::product(h.phi[j], h.phi[i]))) {
        return false;
      }
    }
  }
  return true;
}

template <Field F>
void higgs_case(SuiteResult& out, const F& k, const HiggsDatum<F>& h, std::int64_t& integrable) {
  const bool by_commutators = integrability_check(h);
  const bool by_diagram = validate_rep(higgs_to_diagram(k, h)).empty();
  const bool by_oracle = commutators_vanish(h);
  integrable += by_oracle;
  out.record(by_commutators == by_diagram && by_diagram == by_oracle && (h.m > 1 || by_diagram),
             k.name() + " n=" + std::to_string(h.n) + " m=" + std::to_string(h.m) +
                 ": integrability and diagram validity disagree");
}

}  // namespace

SuiteResult verify_higgs(const SuiteConfig& cfg) {
  SuiteResult out{"higgs"};
  Rng rng(cfg.seed);
  const RationalField q;
  const int n_cases = default_cases(cfg, 500);
  std::int64_t integrable = 0;
  for (int c = 0; c < n_cases; ++c) {
    const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 4));
    const std::size_t m = static_cast<std::size_t>(pick(rng, 1, 3));
    HiggsDatum<RationalField> h{n, m, {}};
    if (coin(rng)) {
      // Polynomials in one matrix commute.
      const auto base = random_matrix(q, n, n, rng);
      const auto sq = multiply(base, base);
      for (std::size_t i = 0; i < m; ++i) {
        const auto c0 = random_matrix(q, 1, 3, rng);
        h.phi.push_back(add(add(scale(c0(0, 0), Matrix<RationalField>::identity(q, n)),
                                scale(c0(0, 1), base)),
                            scale(c0(0, 2), sq)));
      }
    } else {
      for (std::size_t i = 0; i < m; ++i) h.phi.push_back(random_matrix(q, n, n, rng));
    }
    higgs_case(out, q, h, integrable);

    // Conjugation by an invertible f is a morphism; identities compose.
    if (auto f = random_invertible(q, n, rng)) {
      const auto finv = *inverse(*f);
      HiggsDatum<RationalField> conj{n, m, {}};
      for (const auto& p : h.phi) conj.phi.push_back(multiply(multiply(*f, p), finv));
      const HiggsMorphismDatum<RationalField> mor{h, conj, *f};
      const auto id = higgs_identity(q, h);
      out.record(higgs_morphism_check(mor) && higgs_morphism_check(id) &&
                     compose_higgs_morphisms(mor, id).f == *f,
                 "Q n=" + std::to_string(n) + ": conjugation is not a Higgs morphism");
    }
  }
  out.details = {{"instances", n_cases}, {"integrable", integrable}};
  return out;
}

SuiteResult verify_higgs_exhaustive(std::size_t max_n, std::uint32_t p) {
  SuiteResult out{"higgs-exhaustive"};
  const PrimeField k(p);
  std::int64_t integrable = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto mats = all_matrices(k, n, n);
    for (const auto& a : mats) {
      higgs_case(out, k, HiggsDatum<PrimeField>{n, 1, {a}}, integrable);
      for (const auto& b : mats) higgs_case(out, k, HiggsDatum<PrimeField>{n, 2, {a, b}}, integrable);
    }
  }
  out.details = {{"max_n", max_n}, {"p", p}, {"integrable", integrable}};
  return out;
}

namespace {

struct RandomQuiver {
  SSet2 shape;
  FramingFn framing;
};

RandomQuiver random_quiver(Rng& rng) {
  const int nv = pick(rng, 1, 3);
  std::vector<std::string> vs;
  for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<Edge> es;
  const int ne = pick(rng, 0, 4);
  for (int i = 0; i < ne; ++i) {
    es.push_back({"a" + std::to_string(i), vs[static_cast<std::size_t>(pick(rng, 0, nv - 1))],
                  vs[static_cast<std::size_t>(pick(rng, 0, nv - 1))]});
  }
  RandomQuiver out{SSet2(vs, es, {}), {}};
  out.framing = FramingFn::all_regular(out.shape);
  if (nv > 1 && coin(rng)) out.framing.set(vs.back(), true);
  return out;
}

template <Field F>
void moment_case(SuiteResult& out, const F& k, Rng& rng, std::int64_t& trace_cases) {
  const auto q = random_quiver(rng);
  const auto m = build_moment_map(q.shape, q.framing);
  DimVector dims;
  for (const auto& v : m.shape->vertices()) dims[v] = pick_dim(rng, 2);
  const auto r = random_rep(m.shape, k, dims, rng);
  const auto got = eval_moment(m, r);
  const auto want = oracle::moment(r, m.regular);
  bool same = got.size() == want.size();
  for (const auto& [v, mu] : want) same = same && oracle::equal(got.at(v), mu);
  out.record(same, k.name() + " quiver with " + std::to_string(q.shape.edge_count()) +
                       " edges: assembled moment map differs from the direct formula");

  if constexpr (std::is_same_v<F, RationalField>) {
    GaugeElement<F> g;
    bool have_g = true;
    for (const auto& v : m.regular) {
      auto gv = random_invertible(k, dims.at(v), rng);
      if (!gv) {
        have_g = false;
        break;
      }
      g.mats.emplace(v, std::move(*gv));
    }
    if (have_g) out.record(equivariance_check(m, r, g) == 0.0, "Q: moment map is not equivariant");
  }

  if (!q.framing.has_framing()) {
    MomentMapOptions bare;
    bare.frame_vertices = std::vector<std::string>{};
    const auto m0 = build_moment_map(q.shape, q.framing, bare);
    DimVector d0;
    for (const auto& v : m0.shape->vertices()) d0[v] = dims.at(v);
    const auto r0 = random_rep(m0.shape, k, d0, rng);
    ++trace_cases;
    out.record(k.is_zero(moment_trace_sum(m0, r0)), k.name() + ": sum of traces is not zero");
  }
}

}  // namespace

SuiteResult verify_moment_map(const SuiteConfig& cfg) {
  SuiteResult out{"moment-map"};
  Rng rng(cfg.seed);
  const PrimeField f7(7);
  const RationalField q;
  const int n_cases = default_cases(cfg, 500);
  std::int64_t trace_cases = 0;
  for (int c = 0; c < n_cases; ++c) {
    if (c % 2 == 0) {
      moment_case(out, f7, rng, trace_cases);
    } else {
      moment_case(out, q, rng, trace_cases);
    }
  }
  out.details = {{"instances", n_cases}, {"trace_identity_cases", trace_cases}};
  return out;
}

SuiteResult verify_nakajima(const SuiteConfig& cfg) {
  SuiteResult out{"nakajima"};
  const SSet2 jordan({"a"}, {{"x", "a", "a"}}, {});
  const auto m = build_moment_map(jordan, FramingFn::all_regular(jordan));
  const DimVector dims{{"a", 1}, {"w_a", 1}};
  SolveConfig sc;
  sc.seed = cfg.seed;
  const int starts = default_cases(cfg, 100);
  const auto ms = solve_multistart(m, dims, sc, starts);
  double worst_ij = 0.0;
  for (const auto& run : ms.runs) {
    const double ij = std::abs(multiply(run.rep.mat("fr_a*"), run.rep.mat("fr_a"))(0, 0));
    if (run.converged) {
      worst_ij = std::max(worst_ij, ij);
      out.record(ij <= 1e-9, "seed " + std::to_string(run.seed) + ": converged with |ij| = " +
                                 std::to_string(ij));
    } else {
      out.record_soft(false, "seed " + std::to_string(run.seed) + " did not converge (residual " +
                                 std::to_string(run.residual) + ")");
    }
  }
  out.required = (95 * out.cases + 99) / 100;
  out.details = {{"starts", starts},
                 {"converged", ms.converged_count},
                 {"best_residual", ms.best.residual},
                 {"max_abs_ij", worst_ij}};
  return out;
}

std::vector<std::string> suite_names() {
  return {"trace-composition", "internal-category", "tilde-bijection",
          "coequalizer",       "chain-coherence",   "functoriality",
          "higgs",             "moment-map",        "nakajima"};
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  static const std::map<std::string, std::function<SuiteResult(const SuiteConfig&)>> table = {
      {"trace-composition", verify_trace_composition},
      {"internal-category", verify_internal_category},
      {"tilde-bijection", verify_tilde_bijection},
      {"coequalizer", verify_coequalizer},
      {"chain-coherence", verify_chain_coherence},
      {"functoriality", verify_functoriality},
      {"higgs", verify_higgs},
      {"moment-map", verify_moment_map},
      {"nakajima", verify_nakajima},
  };
  auto it = table.find(name);
  if (it == table.end()) throw Error("unknown verification suite '" + name + "'");
  return it->second(cfg);
}

nlohmann::json to_json(const SuiteResult& r) {
  return {{"suite", r.suite},       {"cases", r.cases},
          {"passed", r.passed},     {"required", r.required < 0 ? r.cases : r.required},
          {"ok", r.ok()},           {"failures", r.failures},
          {"details", r.details}};
}

}  // namespace qstack
