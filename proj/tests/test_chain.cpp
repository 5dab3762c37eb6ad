#include <doctest.h>

#include "qstack/chain.hpp"
#include "qstack/verify.hpp"

using namespace qstack;

namespace {

Rep<PrimeField> forward_chain(int n, std::size_t dim, std::uint64_t seed, bool with_triangles = true) {
  const PrimeField k(5);
  Rng rng(seed);
  auto shape = shared_simplex(n, with_triangles);
  DimVector dims;
  for (int i = 0; i <= n; ++i) dims[simplex_vertex_id(i)] = dim;
  auto r = Rep<PrimeField>::zero(shape, k, dims);
  for (int i = 0; i < n; ++i) {
    r.set(simplex_edge_id(i, i + 1), random_matrix(k, dim, dim, rng));
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) r.set(simplex_edge_id(i, j), spine_composite(r, i, j));
  }
  return r;
}

}  // namespace

TEST_SUITE("chain") {
  TEST_CASE("chain shapes are recognised") {
    CHECK(chain_shape(standard_simplex(3))->with_triangles);
    CHECK_FALSE(chain_shape(one_skeleton(3))->with_triangles);
    CHECK_FALSE(chain_shape(square()).has_value());
  }

  TEST_CASE("restriction along identity and along a face") {
    const auto r = forward_chain(2, 2, 1);
    CHECK(restrict_along({0, 1, 2}, r) == r);
    const auto face = restrict_along({0, 2}, r);
    CHECK(face.shape().edge_count() == 1);
    CHECK(face.mat("e0_1") == multiply(r.mat("e1_2"), r.mat("e0_1")));
    CHECK_THROWS_AS(restrict_along({1, 1}, r), Error);
  }

  TEST_CASE("degeneracy inserts identities") {
    const auto r = forward_chain(1, 2, 2);
    CHECK(degenerate_along({0, 1}, r) == r);
    const auto d = degenerate_along({0, 0, 1}, r);
    CHECK(d.shape().vertex_count() == 3);
    CHECK(d.mat("e0_1").is_identity());
    CHECK(d.mat("e1_2") == r.mat("e0_1"));
    CHECK(validate_rep(d).empty());
    CHECK_THROWS_AS(degenerate_along({0, 0}, r), Error);
    CHECK_THROWS_AS(degenerate_along({1, 0}, r), Error);
  }

  TEST_CASE("coherence checks agree with the triangle constraints") {
    auto r = forward_chain(4, 2, 3);
    CHECK(check_chain_coherence(r));
    CHECK(validate_rep(r).empty());
    r.mat("e0_3")(0, 0) = (r.mat("e0_3")(0, 0) + 1) % 5;
    CHECK_FALSE(check_chain_coherence(r));
    CHECK_FALSE(validate_rep(r).empty());
    CHECK_THROWS_AS(check_chain_coherence(forward_chain(2, 1, 1, false)), InvalidShape);
  }

  TEST_CASE("reindexing composes on the 1-skeleton for surjection then injection") {
    const PrimeField k(5);
    Rng rng(9);
    auto shape = shared_simplex(3, false);
    DimVector dims{{"0", 2}, {"1", 1}, {"2", 2}, {"3", 1}};
    auto r = Rep<PrimeField>::zero(shape, k, dims);
    for (const auto& e : shape->edges()) {
      r.set(e.id, random_matrix(k, r.mat(e.id).rows(), r.mat(e.id).cols(), rng));
    }
    const std::vector<int> sigma{0, 1, 1, 2, 3, 3};
    const std::vector<int> iota{0, 2, 3, 5};
    std::vector<int> composite;
    for (int i : iota) composite.push_back(sigma[static_cast<std::size_t>(i)]);
    CHECK(restrict_along(iota, degenerate_along(sigma, r)) == reindex_along(composite, r));
  }

  TEST_CASE("shared simplices are cached") {
    CHECK(shared_simplex(3, true) == shared_simplex(3, true));
    CHECK(shared_simplex(3, true) != shared_simplex(3, false));
  }
}
