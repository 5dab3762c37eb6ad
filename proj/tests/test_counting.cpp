#include <doctest.h>

#include <set>

#include "qstack/action.hpp"
#include "qstack/enumerate.hpp"
#include "qstack/oracles.hpp"
#include "qstack/verify.hpp"

using namespace qstack;

namespace {

std::shared_ptr<const SSet2> share(SSet2 s) { return std::make_shared<const SSet2>(std::move(s)); }

DimVector ones(const SSet2& s, std::size_t d = 1) {
  DimVector out;
  for (const auto& v : s.vertices()) out[v] = d;
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("small counts") {
    const auto d1 = share(standard_simplex(1));
    CHECK(count_reps(d1, ones(*d1), PrimeField(2)) == 2);
    const auto d2 = share(standard_simplex(2));
    CHECK(count_reps(d2, ones(*d2), PrimeField(2)) == 4);
    const auto sq = share(square());
    CHECK(count_reps(sq, ones(*sq), PrimeField(3)) == 33);
    CHECK(oracle::rep_count(sq, ones(*sq), 3) == 33);
  }

  TEST_CASE("agrees with the unpropagated oracle") {
    const std::vector<std::pair<SSet2, std::uint32_t>> cases = {
        {standard_simplex(2), 2}, {standard_simplex(3), 2}, {square(), 2},
        {SSet2({"a"}, {{"x", "a", "a"}}, {}), 3}};
    for (const auto& [s, p] : cases) {
      const auto shape = share(s);
      CHECK(count_reps(shape, ones(*shape), PrimeField(p)) == oracle::rep_count(shape, ones(*shape), p));
    }
    const auto d2 = share(standard_simplex(2));
    const DimVector mixed{{"0", 2}, {"1", 1}, {"2", 1}};
    CHECK(count_reps(d2, mixed, PrimeField(2)) == oracle::rep_count(d2, mixed, 2));
  }

  TEST_CASE("every streamed rep is valid and distinct") {
    const auto d2 = share(standard_simplex(2));
    RepStream stream(d2, ones(*d2, 2), PrimeField(2));
    std::set<std::vector<std::uint64_t>> seen;
    while (stream.next()) {
      const auto& r = stream.current();
      CHECK(validate_rep(r).empty());
      std::vector<std::uint64_t> key;
      for (std::size_t e = 0; e < r.shape().edge_count(); ++e) {
        for (auto x : r.mat(e).entries()) key.push_back(x);
      }
      seen.insert(key);
    }
    CHECK(seen.size() == 256);
  }

  TEST_CASE("zero dimensions give one rep") {
    const auto d2 = share(standard_simplex(2));
    CHECK(count_reps(d2, ones(*d2, 0), PrimeField(5)) == 1);
  }

  TEST_CASE("guard") {
    const auto j = share(SSet2({"a"}, {{"x", "a", "a"}, {"y", "a", "a"}}, {}));
    CHECK_THROWS_AS(RepStream(j, ones(*j, 3), PrimeField(7)), GuardExceeded);
    CHECK_THROWS_AS(RepStream(j, ones(*j, 1), PrimeField(7), EnumerationMode::constrained, 10),
                    GuardExceeded);
  }

  TEST_CASE("matrix and group listings") {
    const PrimeField k(3);
    CHECK(all_matrices(k, 1, 2).size() == 9);
    CHECK(general_linear_group(k, 2).size() == 48);
    CHECK(general_linear_group(PrimeField(2), 3).size() == 168);
  }
}

TEST_SUITE("action") {
  TEST_CASE("group orders") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      for (std::size_t d = 0; d <= 2; ++d) CHECK(gl_order(p, d) == oracle::gl_count(p, d));
    }
    CHECK(gl_order(2, 3) == 168);
    CHECK(gl_order(7, 0) == 1);
  }

  TEST_CASE("stacky counts") {
    const auto ab = share(SSet2({"a", "b"}, {{"e", "a", "b"}}, {}));
    const auto rep = count_points(ab, ones(*ab), 2, FramingFn::all_regular(*ab));
    CHECK(rep.rep_count == 2);
    CHECK(rep.gauge_order == 1);
    CHECK(rep.stacky_count == 2);
    const auto r3 = count_points(ab, ones(*ab), 3, FramingFn({{"a", false}, {"b", true}}));
    CHECK(r3.gauge_order == 2);
    CHECK(r3.stacky_count == mpq_class(3, 2));
  }

  TEST_CASE("jordan census") {
    const auto j = share(SSet2({"a"}, {{"x", "a", "a"}}, {}));
    const auto census = orbit_census(j, ones(*j), 3, FramingFn::all_regular(*j));
    CHECK(census.orbits.size() == 3);
    for (const auto& o : census.orbits) {
      CHECK(o.stabilizer_order == 2);
      CHECK(o.size == 1);
    }
    CHECK(census.stacky_sum == mpq_class(3, 2));
  }

  TEST_CASE("census partitions the representations") {
    const auto j = share(SSet2({"a"}, {{"x", "a", "a"}}, {}));
    const auto census = orbit_census(j, ones(*j, 2), 2, FramingFn::all_regular(*j));
    mpz_class total = 0;
    for (const auto& o : census.orbits) {
      total += o.size;
      CHECK(o.size * o.stabilizer_order == census.group_order);
    }
    CHECK(total == 16);
    CHECK(census.rep_count == 16);
    // Conjugacy classes of 2x2 matrices over F_2.
    CHECK(census.orbits.size() == 6);
  }

  TEST_CASE("identity acts trivially and the action composes") {
    const PrimeField k(5);
    Rng rng(3);
    const auto ab = share(SSet2({"a", "b"}, {{"e", "a", "b"}, {"x", "b", "b"}}, {}));
    const FramingFn f = FramingFn::all_regular(*ab);
    const DimVector dims{{"a", 2}, {"b", 2}};
    auto r = Rep<PrimeField>::zero(ab, k, dims);
    r.set("e", random_matrix(k, 2, 2, rng));
    r.set("x", random_matrix(k, 2, 2, rng));
    CHECK(act(GaugeElement<PrimeField>::identity(k, dims, *ab, f), r, f) == r);
    const auto group = all_gauge_elements(*ab, {{"a", 1}, {"b", 1}}, f, PrimeField(5));
    CHECK(group.size() == 16);

    GaugeElement<PrimeField> g, h;
    g.mats.emplace("a", Matrix<PrimeField>::from_rows(k, 2, 2, {1, 1, 0, 1}));
    g.mats.emplace("b", Matrix<PrimeField>::from_rows(k, 2, 2, {2, 0, 0, 1}));
    h.mats.emplace("a", Matrix<PrimeField>::from_rows(k, 2, 2, {0, 1, 1, 0}));
    h.mats.emplace("b", Matrix<PrimeField>::from_rows(k, 2, 2, {1, 0, 3, 1}));
    CHECK(act(g * h, r, f) == act(g, act(h, r, f), f));

    GaugeElement<PrimeField> singular;
    singular.mats.emplace("a", Matrix<PrimeField>(k, 2, 2));
    singular.mats.emplace("b", Matrix<PrimeField>::identity(k, 2));
    CHECK_THROWS_AS(act(singular, r, f), SingularMatrix);
  }

  TEST_CASE("tilde encoding round trip") {
    const PrimeField k(3);
    const auto ab = share(SSet2({"a", "b"}, {{"e", "a", "b"}}, {}));
    const FramingFn f({{"a", false}, {"b", true}});
    const TildeQuiver tq = tilde(*ab, f);
    auto r = Rep<PrimeField>::zero(ab, k, {{"a", 1}, {"b", 2}});
    r.mat("e")(1, 0) = 2;
    GaugeElement<PrimeField> g;
    g.mats.emplace("a", Matrix<PrimeField>::from_rows(k, 1, 1, {2}));
    const auto enc = tilde_encode(g, r, tq, f);
    CHECK(validate_rep(enc).empty());
    const auto dec = tilde_decode(enc, ab, tq);
    CHECK(dec.rho == r);
    CHECK(dec.psi == act(g, r, f));
    CHECK(dec.g.mats.at("a") == g.mats.at("a"));
  }
}
