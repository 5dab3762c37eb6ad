#include <doctest.h>

#include <set>

#include "qstack/error.hpp"
#include "qstack/quiver_ops.hpp"

using namespace qstack;

namespace {

SSet2 arrow() { return SSet2({"a", "b"}, {{"e", "a", "b"}}, {}); }
SSet2 jordan() { return SSet2({"a"}, {{"x", "a", "a"}}, {}); }

std::set<std::string> triangle_relations(const SSet2& s) {
  std::set<std::string> out;
  for (const auto& t : s.triangles()) out.insert(t.second + "*" + t.first + "=" + t.long_edge);
  return out;
}

}  // namespace

TEST_SUITE("quiver_ops") {
  TEST_CASE("framing adds one node and one edge per vertex") {
    const auto point = frame(SSet2({"a"}, {}, {}));
    CHECK(point.shape.vertex_count() == 2);
    CHECK(point.shape.edge_count() == 1);
    CHECK(point.framing.is_framing("w_a"));
    CHECK_FALSE(point.framing.is_framing("a"));

    const auto j = frame(jordan());
    CHECK(j.shape.vertex_count() == 2);
    CHECK(j.shape.edge_count() == 2);

    const auto ab = frame(arrow());
    CHECK(ab.shape.vertex_count() == 4);
    CHECK(ab.shape.edge_count() == 3);
    CHECK(ab.framing_edge.at("b") == "fr_b");
    CHECK(validate(ab.shape).empty());
  }

  TEST_CASE("framing equals gluing copies of the interval") {
    const SSet2 interval({"0", "1"}, {{"e", "0", "1"}}, {});
    const auto glued =
        glue_at_vertices(glue_at_vertices(arrow(), interval, {{"a", "0"}}), interval, {{"b", "0"}});
    const auto framed = frame(arrow()).shape;
    CHECK(glued.vertex_count() == framed.vertex_count());
    CHECK(glued.edge_count() == framed.edge_count());
    CHECK(canonical_relabel(glued) == canonical_relabel(framed));
  }

  TEST_CASE("framing rejects unknown and repeated vertices") {
    CHECK_THROWS_AS(frame(arrow(), std::vector<std::string>{"z"}), InvalidShape);
    CHECK_THROWS_AS(frame(arrow(), std::vector<std::string>{"a", "a"}), InvalidShape);
  }

  TEST_CASE("doubling") {
    const auto d1 = double_quiver(arrow());
    CHECK(d1.shape.vertex_count() == 2);
    CHECK(d1.shape.edge_count() == 2);
    CHECK(d1.star.at("e") == "e*");
    CHECK(d1.star.at("e*") == "e");

    const auto dj = double_quiver(jordan());
    CHECK(dj.shape.vertex_count() == 1);
    CHECK(dj.shape.edge_count() == 2);

    const auto dfr = double_quiver(frame(arrow()).shape);
    CHECK(dfr.shape.vertex_count() == 4);
    CHECK(dfr.shape.edge_count() == 6);
    CHECK(validate(dfr.shape).empty());
  }

  TEST_CASE("doubling keeps identity edges single and reverses triangles") {
    const SSet2 s({"a", "b"}, {{"f", "a", "b"}, {"id_a", "a", "a", true}}, {{"t", "id_a", "f", "f"}});
    const auto d = double_quiver(s);
    CHECK(d.shape.edge_count() == 3);
    CHECK(d.shape.triangle_count() == 2);
    CHECK(validate(d.shape).empty());
  }

  TEST_CASE("tilde of the framed chain example") {
    const SSet2 chain({"a", "b", "c"}, {{"e_ab", "a", "b"}, {"e_bc", "b", "c"}}, {});
    const FramingFn f({{"a", false}, {"b", false}, {"c", true}});
    const auto tq = tilde(chain, f);
    CHECK(validate(tq.shape).empty());
    CHECK(tq.shape.vertex_count() == 5);
    CHECK(tq.shape.nondegenerate_edge_count() == 9);
    CHECK(tq.shape.triangle_count() == 7);
    CHECK(tq.framing.is_framing("c"));
    CHECK_FALSE(tq.framing.is_framing("a'"));

    // Witnessed relations, written second*first=long.
    const std::set<std::string> expected = {
        "g_a^-1*g_a=id_a",  "g_b^-1*g_b=id_b",          "g_a*g_a^-1=id_a'",
        "g_b*g_b^-1=id_b'", "g_b*e_ab=(g_b,e_ab)",      "e_ab'*g_a=(g_b,e_ab)",
        "e_bc'*g_b=e_bc"};
    CHECK(triangle_relations(tq.shape) == expected);
    // No witness for the composite e_bc . e_ab.
    for (const auto& t : tq.shape.triangles()) {
      CHECK_FALSE((t.first == "e_ab" && t.second == "e_bc"));
    }
  }

  TEST_CASE("tilde with every vertex framed is the input") {
    const SSet2 chain({"a", "b"}, {{"e", "a", "b"}}, {});
    const auto tq = tilde(chain, FramingFn::all_framing(chain));
    CHECK(tq.shape == chain);
  }

  TEST_CASE("tilde of a loop and its errors") {
    const auto tq = tilde(jordan(), FramingFn::all_regular(jordan()));
    CHECK(validate(tq.shape).empty());
    CHECK(tq.shape.vertex_count() == 2);
    CHECK(tq.composite.at("x") == "(g_a,x)");
    CHECK_THROWS_AS(tilde(standard_simplex(2), FramingFn::all_regular(standard_simplex(2))),
                    InvalidShape);
    CHECK_THROWS_AS(tilde(arrow(), FramingFn({{"a", false}})), InvalidShape);
  }

  TEST_CASE("higgs shape") {
    const auto h = higgs_shape();
    CHECK(h.shape.vertex_count() == 5);
    CHECK(h.principal_edges.size() == 5);
    CHECK(h.shape.triangle_count() >= 1);
    CHECK(validate(h.shape).empty());
  }

  TEST_CASE("framing json") {
    const FramingFn f({{"a", false}, {"w", true}});
    const auto j = to_json(f);
    CHECK(j.dump() == R"({"a":"regular","w":"framing"})");
    CHECK(framing_from_json(j) == f);
    CHECK_THROWS_AS(framing_from_json(nlohmann::json{{"a", "gauge"}}), Error);
  }
}
