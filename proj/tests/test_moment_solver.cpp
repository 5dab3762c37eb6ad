#include <doctest.h>

#include "qstack/moment_map.hpp"
#include "qstack/oracles.hpp"
#include "qstack/solver.hpp"
#include "qstack/verify.hpp"

using namespace qstack;

namespace {

SSet2 jordan() { return SSet2({"a"}, {{"x", "a", "a"}}, {}); }

template <Field F>
Rep<F> random_rep(const MomentExpr& m, const F& k, const DimVector& dims, Rng& rng) {
  auto r = Rep<F>::zero(m.shape, k, dims);
  for (const auto& e : m.shape->edges()) {
    if (e.identity) continue;
    r.set(e.id, random_matrix(k, r.mat(e.id).rows(), r.mat(e.id).cols(), rng));
  }
  return r;
}

}  // namespace

TEST_SUITE("moment_map") {
  TEST_CASE("term counts") {
    const SSet2 point({"a"}, {}, {});
    const auto mp = build_moment_map(point, FramingFn::all_regular(point));
    CHECK(mp.terms.at("a").size() == 1);

    const auto mj = build_moment_map(jordan(), FramingFn::all_regular(jordan()));
    CHECK(mj.regular == std::vector<std::string>{"a"});
    CHECK(mj.terms.at("a").size() == 3);
    CHECK(mj.shape->vertex_count() == 2);
    CHECK(mj.shape->edge_count() == 4);

    const SSet2 ab({"a", "b"}, {{"e", "a", "b"}}, {});
    const auto mab = build_moment_map(ab, FramingFn::all_regular(ab));
    CHECK(mab.terms.at("a").size() == 2);
    CHECK(mab.terms.at("b").size() == 2);
  }

  TEST_CASE("framing vertices carry no component") {
    const SSet2 ab({"a", "b"}, {{"e", "a", "b"}}, {});
    const auto m = build_moment_map(ab, FramingFn({{"a", false}, {"b", true}}));
    CHECK(m.regular == std::vector<std::string>{"a"});
    CHECK(m.shape->vertex_count() == 2);
    CHECK(m.terms.at("a").size() == 1);
    CHECK_THROWS_AS(build_moment_map(standard_simplex(2), FramingFn::all_regular(standard_simplex(2))),
                    InvalidShape);
  }

  TEST_CASE("one-dimensional jordan") {
    const RationalField q;
    const auto m = build_moment_map(jordan(), FramingFn::all_regular(jordan()));
    auto r = Rep<RationalField>::zero(m.shape, q, {{"a", 1}, {"w_a", 1}});
    r.mat("x")(0, 0) = 3;
    r.mat("x*")(0, 0) = 5;
    r.mat("fr_a")(0, 0) = 2;
    r.mat("fr_a*")(0, 0) = 7;
    CHECK(eval_moment(m, r).at("a")(0, 0) == -14);

    MomentMapOptions flipped;
    flipped.sign = SignConvention::out_minus_in;
    const auto mf = build_moment_map(jordan(), FramingFn::all_regular(jordan()), flipped);
    CHECK(eval_moment(mf, r).at("a")(0, 0) == 14);
  }

  TEST_CASE("zero representation has zero moment") {
    const PrimeField k(7);
    const SSet2 ab({"a", "b"}, {{"e", "a", "b"}, {"x", "b", "b"}}, {});
    const auto m = build_moment_map(ab, FramingFn::all_regular(ab));
    DimVector dims;
    for (const auto& v : m.shape->vertices()) dims[v] = 2;
    const auto r = Rep<PrimeField>::zero(m.shape, k, dims);
    for (const auto& [v, mu] : eval_moment(m, r)) CHECK(mu.is_zero());
  }

  TEST_CASE("agrees with the direct formula") {
    const PrimeField k(7);
    Rng rng(11);
    const SSet2 q({"a", "b"}, {{"e", "a", "b"}, {"f", "a", "b"}, {"x", "a", "a"}}, {});
    const auto m = build_moment_map(q, FramingFn::all_regular(q));
    const DimVector dims{{"a", 2}, {"b", 3}, {"w_a", 1}, {"w_b", 2}};
    for (int trial = 0; trial < 10; ++trial) {
      const auto r = random_rep(m, k, dims, rng);
      const auto got = eval_moment(m, r);
      const auto want = oracle::moment(r, m.regular);
      for (const auto& v : m.regular) CHECK(got.at(v) == want.at(v));
    }
  }

  TEST_CASE("equivariance and the trace identity") {
    const RationalField q;
    Rng rng(12);
    const SSet2 ab({"a", "b"}, {{"e", "a", "b"}, {"x", "b", "b"}}, {});
    const auto m = build_moment_map(ab, FramingFn::all_regular(ab));
    const DimVector dims{{"a", 2}, {"b", 2}, {"w_a", 1}, {"w_b", 1}};
    const auto r = random_rep(m, q, dims, rng);
    const auto id = GaugeElement<RationalField>::identity(q, dims, *m.shape, m.framing);
    CHECK(equivariance_check(m, r, id) == 0.0);
    GaugeElement<RationalField> g;
    g.mats.emplace("a", Matrix<RationalField>::from_rows(q, 2, 2, {1, 2, 0, 1}));
    g.mats.emplace("b", Matrix<RationalField>::from_rows(q, 2, 2, {0, 1, 1, 1}));
    CHECK(equivariance_check(m, r, g) == 0.0);

    MomentMapOptions unframed;
    unframed.frame_vertices = std::vector<std::string>{};
    const auto mu = build_moment_map(ab, FramingFn::all_regular(ab), unframed);
    const auto ru = random_rep(mu, q, {{"a", 2}, {"b", 3}}, rng);
    CHECK(moment_trace_sum(mu, ru) == 0);
  }
}

TEST_SUITE("solver") {
  TEST_CASE("framed jordan reaches the zero locus deterministically") {
    const auto m = build_moment_map(jordan(), FramingFn::all_regular(jordan()));
    SolveConfig cfg;
    cfg.seed = 3;
    const DimVector dims{{"a", 1}, {"w_a", 1}};
    const auto a = solve_zero_locus(m, dims, cfg);
    const auto b = solve_zero_locus(m, dims, cfg);
    CHECK(a.converged);
    CHECK(a.residual <= cfg.tol);
    CHECK(a.residual == b.residual);
    CHECK(a.rep == b.rep);
    CHECK(moment_residual(m, a.rep, cfg.lambda) == doctest::Approx(a.residual).epsilon(1e-6));
  }

  TEST_CASE("nonzero level without framing does not converge") {
    MomentMapOptions unframed;
    unframed.frame_vertices = std::vector<std::string>{};
    const auto m = build_moment_map(jordan(), FramingFn::all_regular(jordan()), unframed);
    SolveConfig cfg;
    cfg.lambda = {{"a", 1.0}};
    cfg.max_iter = 50;
    const auto r = solve_zero_locus(m, {{"a", 1}}, cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.residual > cfg.tol);
  }

  TEST_CASE("multistart reports each seed") {
    const auto m = build_moment_map(jordan(), FramingFn::all_regular(jordan()));
    SolveConfig cfg;
    cfg.seed = 10;
    const DimVector dims{{"a", 2}, {"w_a", 1}};
    const auto ms = solve_multistart(m, dims, cfg, 4, 2);
    REQUIRE(ms.runs.size() == 4);
    int converged = 0;
    for (std::size_t i = 0; i < ms.runs.size(); ++i) {
      if (ms.runs[i].converged) {
        ++converged;
        CHECK(ms.runs[i].residual <= cfg.tol);
      }
      CHECK(ms.best.residual <= ms.runs[i].residual);
    }
    CHECK(converged == ms.converged_count);
    const auto again = solve_multistart(m, dims, cfg, 4, 1);
    CHECK(again.best.residual == ms.best.residual);
  }

  TEST_CASE("argument checks") {
    const auto m = build_moment_map(jordan(), FramingFn::all_regular(jordan()));
    SolveConfig cfg;
    cfg.lambda = {{"w_a", 1.0}};
    CHECK_THROWS_AS(solve_zero_locus(m, {{"a", 1}, {"w_a", 1}}, cfg), Error);
    CHECK_THROWS_AS(solve_zero_locus(m, {{"a", 250}, {"w_a", 2}}, SolveConfig{}), GuardExceeded);
    SolveConfig bad;
    bad.tol = 0;
    CHECK_THROWS_AS(solve_zero_locus(m, {{"a", 1}, {"w_a", 1}}, bad), Error);
  }
}
