#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qstack/action.hpp"
#include "qstack/dsl.hpp"
#include "qstack/json_io.hpp"
#include "qstack/quiver_ops.hpp"
#include "qstack/verify.hpp"

using namespace qstack;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kA2 = R"(quiver A2
vertex a
vertex b
vertex f framed
edge e1: a -> b
edge e2: b -> f
)";

}  // namespace

TEST_SUITE("dsl") {
  TEST_CASE("parses the small example") {
    const auto doc = parse_quiver(kA2);
    CHECK(doc.name == "A2");
    const auto s = doc.shape();
    CHECK(s.vertex_count() == 3);
    CHECK(s.edge_count() == 2);
    CHECK(doc.framing().is_framing("f"));
    CHECK_FALSE(doc.framing().is_framing("a"));
    CHECK(doc.dim_map().empty());
  }

  TEST_CASE("unresolved references report their position") {
    const std::string text = std::string(kA2) + "triangle t : e1 . e3 => e2\n";
    try {
      parse_quiver(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 7);
      CHECK(e.column() == 19);
      CHECK(std::string(e.what()).find("e3") != std::string::npos);
    }
  }

  TEST_CASE("rejects malformed documents") {
    CHECK_THROWS_AS(parse_quiver("vertex a\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("quiver q\nquiver r\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("quiver q\nvertex a\nvertex a\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("quiver q\nvertex a\nedge e : a -> a\nedge e : a -> a\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("quiver q\nvertex a\nvertex b\nedge i : a -> b identity\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_quiver("quiver q\nvertex a\nedge e : a => a\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("quiver q\nvertex a\ndim a = x\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("quiver q\nvertex a\nwidget a\n"), ParseError);
    // Triangle whose boundary does not close up.
    CHECK_THROWS_AS(parse_quiver("quiver q\nvertex a\nvertex b\nedge f : a -> b\nedge g : a -> b\n"
                                 "triangle t : f . g => f\n"),
                    ParseError);
  }

  TEST_CASE("identifiers") {
    CHECK(is_identifier("e_ab'"));
    CHECK(is_identifier("(g_b,e_ab)"));
    CHECK(is_identifier("g_a^-1"));
    CHECK(is_identifier("x*"));
    CHECK_FALSE(is_identifier("a b"));
    CHECK_FALSE(is_identifier(""));
    CHECK_FALSE(is_identifier("a->b"));
  }

  TEST_CASE("every fixture round-trips through the printer") {
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(QSTACK_FIXTURE_DIR)) {
      if (entry.path().extension() != ".qv") continue;
      ++seen;
      CAPTURE(entry.path().filename().string());
      const auto doc = parse_quiver(slurp(entry.path()));
      const auto printed = print_quiver(doc);
      const auto again = parse_quiver(printed);
      CHECK(again == doc);
      CHECK(print_quiver(again) == printed);
      CHECK(validate(doc.shape()).empty());
    }
    CHECK(seen >= 10);
  }

  TEST_CASE("forward references and layout") {
    const auto doc = parse_quiver(slurp(std::filesystem::path(QSTACK_FIXTURE_DIR) / "spacing.qv"));
    CHECK(doc.name == "spacing");
    CHECK(doc.shape().triangle_count() == 1);
    CHECK(doc.dim_map().at("a") == 2);
    CHECK(print_quiver(doc).rfind("quiver spacing\nvertex c framed\n", 0) == 0);
  }

  TEST_CASE("documents for constructed shapes") {
    const SSet2 ab({"a", "b"}, {{"e", "a", "b"}}, {});
    const auto tq = tilde(ab, FramingFn::all_regular(ab));
    const auto doc = make_doc("t", tq.shape, tq.framing, {{"a", 1}});
    const auto back = parse_quiver(print_quiver(doc));
    CHECK(back.shape() == tq.shape);
    CHECK(back.framing() == tq.framing);
    CHECK(back.dim_map().at("a") == 1);
  }
}

TEST_SUITE("json_io") {
  TEST_CASE("elements") {
    const RationalField q;
    CHECK(element_to_json(q, mpq_class(-3, 4)) == "-3/4");
    CHECK(element_from_json(q, json("6/8")) == mpq_class(3, 4));
    CHECK(element_from_json(q, json(5)) == 5);
    CHECK_THROWS_AS(element_from_json(q, json("1/0")), SingularMatrix);
    const PrimeField k(7);
    CHECK(element_to_json(k, 3) == 3);
    CHECK(element_from_json(k, json(9)) == 2);
    CHECK(element_from_json(k, json(-1)) == 6);
    CHECK_THROWS(element_from_json(k, json("1")));
    CHECK(element_from_json(RealField(), json(0.25)) == 0.25);
  }

  TEST_CASE("matrices") {
    const RationalField q;
    Rng rng(4);
    const auto m = random_matrix(q, 2, 3, rng);
    CHECK(matrix_from_json(q, to_json(m), 2, 3) == m);
    CHECK_THROWS(matrix_from_json(q, to_json(m), 3, 2));
    const RealField re;
    const auto r = random_matrix(re, 3, 3, rng);
    const auto back = matrix_from_json(re, json::parse(to_json(r).dump()), 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) CHECK(back(i, j) == r(i, j));
    }
  }

  TEST_CASE("representations") {
    const PrimeField k(5);
    Rng rng(8);
    auto shape = std::make_shared<const SSet2>(square());
    auto r = Rep<PrimeField>::zero(shape, k, {{"a", 1}, {"b", 2}, {"c", 1}, {"d", 2}});
    for (const auto& e : shape->edges()) {
      r.set(e.id, random_matrix(k, r.mat(e.id).rows(), r.mat(e.id).cols(), rng));
    }
    const auto j = to_json(r, "square");
    CHECK(j.at("shape_ref") == "square");
    CHECK(j.at("field") == "F_5");
    CHECK(rep_from_json(json::parse(j.dump()), shape, k) == r);
  }

  TEST_CASE("shapes and reports") {
    const auto s = square();
    CHECK(sset_from_json(json::parse(dump_canonical(to_json(s)))) == s);
    const auto shape = std::make_shared<const SSet2>(SSet2({"a"}, {{"x", "a", "a"}}, {}));
    const auto rep = count_points(shape, {{"a", 1}}, 3, FramingFn::all_regular(*shape), "jordan");
    const auto j = to_json(rep);
    CHECK(j.at("rep_count") == "3");
    CHECK(j.at("gauge_order") == "2");
    CHECK(j.at("stacky_count") == "3/2");
    CHECK(j.at("p") == 3);
  }

  TEST_CASE("canonical dumps sort keys") {
    const json j = {{"b", 1}, {"a", {{"d", 2}, {"c", 3}}}};
    CHECK(dump_canonical(j) == "{\n  \"a\": {\n    \"c\": 3,\n    \"d\": 2\n  },\n  \"b\": 1\n}\n");
  }

  TEST_CASE("higgs data") {
    const RationalField q;
    const json j = json::parse(R"({"n": 1, "m": 2, "phi": [[["1/2"]], [[3]]]})");
    const auto h = higgs_from_json(q, j);
    CHECK(h.phi[0](0, 0) == mpq_class(1, 2));
    CHECK(to_json(h).at("phi")[1][0][0] == "3/1");
    CHECK_THROWS(higgs_from_json(q, json::parse(R"({"n": 2, "m": 1, "phi": [[[1]]]})")));
  }
}
