#include <doctest.h>

#include "qstack/higgs.hpp"
#include "qstack/verify.hpp"

using namespace qstack;

namespace {

using QMat = Matrix<RationalField>;

QMat q2(std::initializer_list<int> v) {
  std::vector<RationalField::Element> e;
  for (int x : v) e.emplace_back(x);
  return QMat::from_rows(RationalField(), 2, 2, e);
}

HiggsDatum<RationalField> datum(std::vector<QMat> phi) {
  const std::size_t n = phi.empty() ? 0 : phi.front().rows();
  return {n, phi.size(), std::move(phi)};
}

}  // namespace

TEST_SUITE("higgs") {
  TEST_CASE("a single component is always integrable") {
    const RationalField q;
    const auto h = datum({q2({1, 2, 3, 4})});
    CHECK(wedge_rank(1) == 0);
    CHECK(integrability_check(h));
    const auto d = higgs_to_diagram(q, h);
    CHECK(d.dim("d") == 0);
    CHECK(d.dim("a") == 2);
    CHECK(d.dim("b") == 2);
    CHECK(d.dim("c") == 2);
    CHECK(validate_rep(d).empty());
  }

  TEST_CASE("commuting and non-commuting pairs") {
    const RationalField q;
    const auto good = datum({q2({0, 1, 0, 0}), q2({1, 0, 0, 1})});
    CHECK(integrability_check(good));
    const auto dg = higgs_to_diagram(q, good);
    CHECK(validate_rep(dg).empty());
    CHECK(dg.dim("b") == 4);
    CHECK(dg.dim("c") == 8);
    CHECK(dg.dim("d") == 2);

    const auto bad = datum({q2({0, 1, 0, 0}), q2({0, 0, 1, 0})});
    CHECK_FALSE(integrability_check(bad));
    const auto db = higgs_to_diagram(q, bad);
    CHECK(validate_rep(db).size() == 1);
  }

  TEST_CASE("three components") {
    const RationalField q;
    const auto diag = datum({q2({1, 0, 0, 2}), q2({3, 0, 0, 0}), q2({0, 0, 0, 5})});
    CHECK(wedge_rank(3) == 3);
    CHECK(integrability_check(diag));
    CHECK(validate_rep(higgs_to_diagram(q, diag)).empty());
    auto broken = diag;
    broken.phi[2] = q2({0, 1, 0, 0});
    CHECK_FALSE(integrability_check(broken));
    CHECK_FALSE(validate_rep(higgs_to_diagram(q, broken)).empty());
  }

  TEST_CASE("wedge matrix is the antisymmetrizer") {
    const PrimeField k(5);
    const auto w = wedge_matrix(k, 2);
    REQUIRE(w.rows() == 1);
    REQUIRE(w.cols() == 4);
    CHECK(w(0, 0) == 0);
    CHECK(w(0, 1) == 1);
    CHECK(w(0, 2) == 4);
    CHECK(w(0, 3) == 0);
  }

  TEST_CASE("morphisms") {
    const RationalField q;
    const auto src = datum({q2({0, 1, 0, 0}), q2({1, 0, 0, 1})});
    CHECK(higgs_morphism_check(higgs_identity(q, src)));
    CHECK(higgs_morphism_check(HiggsMorphismDatum<RationalField>{src, src, QMat(q, 2, 2)}));
    // A polynomial in the components commutes with them.
    CHECK(higgs_morphism_check(HiggsMorphismDatum<RationalField>{src, src, q2({2, 7, 0, 2})}));
    CHECK_FALSE(higgs_morphism_check(HiggsMorphismDatum<RationalField>{src, src, q2({1, 0, 0, 2})}));

    // Conjugation is an isomorphism onto the conjugated datum.
    const auto g = q2({1, 1, 0, 1});
    const auto gi = *inverse(g);
    auto tgt = src;
    for (auto& p : tgt.phi) p = multiply(multiply(g, p), gi);
    const HiggsMorphismDatum<RationalField> conj{src, tgt, g};
    CHECK(higgs_morphism_check(conj));
    CHECK(higgs_source(conj).phi == src.phi);
    CHECK(higgs_target(conj).phi == tgt.phi);

    const auto composed = compose_higgs_morphisms(higgs_identity(q, tgt), conj);
    CHECK(composed.f == g);
    const HiggsMorphismDatum<RationalField> back{tgt, src, gi};
    CHECK(compose_higgs_morphisms(back, conj).f.is_identity());
  }

  TEST_CASE("malformed data") {
    const RationalField q;
    HiggsDatum<RationalField> h{2, 2, {q2({1, 0, 0, 1})}};
    CHECK_THROWS_AS(integrability_check(h), DimensionMismatch);
    const auto a = datum({q2({0, 0, 0, 0})});
    const auto b = datum({q2({0, 0, 0, 0}), q2({0, 0, 0, 0})});
    CHECK_THROWS_AS(higgs_morphism_check(HiggsMorphismDatum<RationalField>{a, b, QMat(q, 2, 2)}),
                    DimensionMismatch);
    CHECK_THROWS_AS(higgs_morphism_check(HiggsMorphismDatum<RationalField>{a, a, QMat(q, 3, 2)}),
                    DimensionMismatch);
  }

  TEST_CASE("prime field data") {
    const PrimeField k(3);
    HiggsDatum<PrimeField> h{1, 2, {Matrix<PrimeField>::from_rows(k, 1, 1, {2}),
                                    Matrix<PrimeField>::from_rows(k, 1, 1, {1})}};
    CHECK(integrability_check(h));
    CHECK(validate_rep(higgs_to_diagram(k, h)).empty());
  }
}
