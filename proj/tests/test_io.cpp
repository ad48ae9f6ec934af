#include <doctest.h>

#include "helpers.hpp"
#include "liftcover/errors.hpp"
#include "liftcover/io.hpp"
#include "liftcover/svg.hpp"

using namespace liftcover;
using io::json;
using testing::mat;
using testing::q;
using testing::vec;

namespace {

// Serialize, parse, serialize again: the two texts must be identical.
template <typename T, typename Parse>
void round_trip(const T& value, Parse parse) {
  std::string first = io::dump(io::to_json(value));
  T back = parse(io::parse_text(first, "test"));
  CHECK(io::dump(io::to_json(back)) == first);
}

std::string pointer_of(const std::string& text, SFreeBody (*parse)(const json&, const std::string&)) {
  try {
    parse(io::parse_text(text, "test"), "");
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("gallery inputs round-trip byte for byte") {
  for (const auto& e : gallery::all()) {
    CAPTURE(e.name);
    round_trip(e.B, [](const json& j) { return io::body_from_json(j); });
    round_trip(e.S, [](const json& j) { return io::lattice_from_json(j); });
  }
  round_trip(AffineMap(mat({{"2", "1"}, {"1", "1"}}), vec({"1/3", "-5/2"})),
             [](const json& j) { return io::map_from_json(j); });
  round_trip(MixedIntegerInstance(mat({{"1"}, {"-2/3"}}), mat({{"3/4", "0"}, {"1", "1/5"}})),
             [](const json& j) { return io::instance_from_json(j); });
  round_trip(gallery::simplex_limit(2), [](const json& j) { return io::limit_from_json(j); });
}

TEST_CASE("canonical text") {
  SFreeBody B({vec({"2"}), vec({"-2"})});
  CHECK(io::dump(io::to_json(B)) == "{\n  \"dim\": 1,\n  \"normals\": [\n    [\n      \"2\"\n    ],\n    [\n      \"-2\"\n    ]\n  ]\n}\n");
  // Non-canonical input fractions come back reduced.
  json j = {{"dim", 1}, {"normals", {{"4/2"}, {-2}}}};
  CHECK(io::dump(io::to_json(io::body_from_json(j))) == io::dump(io::to_json(B)));
}

TEST_CASE("parse errors carry a JSON pointer") {
  auto body = &io::body_from_json;
  CHECK(pointer_of(R"({"dim": 2, "normals": [["1", "0"], ["1", "x"]]})", body) == "/normals/1/1");
  CHECK(pointer_of(R"({"dim": 2, "normals": [["1", "0"], ["1"]]})", body) == "/normals/1");
  CHECK(pointer_of(R"({"normals": []})", body) == "/dim");
  CHECK(pointer_of(R"({"dim": 1, "normals": [["1/0"]]})", body) == "/normals/0/0");
  CHECK(pointer_of(R"({"dim": 1, "normals": 3})", body) == "/normals");
  // Semantically invalid: the origin is not interior.
  CHECK(pointer_of(R"({"dim": 1, "normals": [["0"]]})", body) == "/normals");

  try {
    io::lattice_from_json(io::parse_text(R"({"dim": 1, "basis": [["1"]], "shift": ["0"], "hull": {"A": [], "b": ["1"]}})", "t"));
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.where() == "/hull/b");
  }
  CHECK_THROWS_AS(io::parse_text("{", "t"), ParseError);
}

TEST_CASE("fixed-point formatting") {
  CHECK(fixed3(q(0L)) == "0.000");
  CHECK(fixed3(q(1, 3)) == "0.333");
  CHECK(fixed3(q(2, 3)) == "0.667");
  CHECK(fixed3(q(-1, 3)) == "-0.333");
  CHECK(fixed3(q(-1, 10000)) == "0.000");
  CHECK(fixed3(q(1, 2000)) == "0.001");
  CHECK(fixed3(q(250)) == "250.000");
}

TEST_CASE("polygon vertices are ordered counterclockwise") {
  HPolyhedron square = HPolyhedron::box(vec({"-1", "-1"}), vec({"1", "1"}));
  auto pts = polygon_vertices(square);
  REQUIRE(pts.size() == 4);
  Rational area2 = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const QVector &a = pts[i], &b = pts[(i + 1) % 4];
    area2 += a[0] * b[1] - a[1] * b[0];
  }
  CHECK(area2 == 8);
  CHECK(polygon_vertices(HPolyhedron(2)).empty());
}

TEST_CASE("plots are deterministic and mark the witness") {
  auto cross = gallery::named("cross-2");
  LiftingContext ctx(cross.S, cross.B);
  std::string svg = plot_svg(ctx, {});
  CHECK(svg == plot_svg(LiftingContext(cross.S, cross.B), {}));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("id=\"witness\"") == std::string::npos);

  TruncatedAffineLattice strip(vec({"1/2", "1/2"}), Lattice::integer(2),
                               HPolyhedron(mat({{"0", "1"}, {"0", "-1"}}), vec({"1", "1"})));
  SFreeBody diamond({vec({"1", "1"}), vec({"1", "-1"}), vec({"-1", "1"}), vec({"-1", "-1"})});
  LiftingContext bad(strip, diamond);
  CHECK(plot_svg(bad, {}).find("id=\"witness\"") != std::string::npos);

  auto three = gallery::named("cross-3");
  CHECK_THROWS_AS(plot_svg(LiftingContext(three.S, three.B), {}), PreconditionError);
}

TEST_CASE("report serialization") {
  auto e = gallery::named("split-1");
  LiftingContext ctx(e.S, e.B);
  json r = io::to_json(ctx.check_covering());
  CHECK(r["verdict"] == "covered");
  CHECK(r["certificate"].size() == 2);
  json v = io::to_json(ctx.minimal_lifting(vec({"3/10"})));
  CHECK(v["value"] == "3/5");
  CHECK(io::to_json(e)["expected_covering"] == true);
}
