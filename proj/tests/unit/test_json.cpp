#include <doctest.h>

#include "notation.hpp"
#include "wbk/error.hpp"
#include "wbk/json.hpp"

using namespace wbk;
using wbk::io::Json;
using wbk::testing::pl;
using wbk::testing::q;
using wbk::testing::region;
using wbk::testing::space;

TEST_CASE("region format") {
  const Json j = io::parse(R"({"dim":1,"boxes":[{"iv":[{"lo":"0","lo_open":true,"hi":"inf","hi_open":true}]}]})");
  CHECK(io::decode_region(j) == region("(0,inf)"));
  const Region r = region("[0,1/2) x {3} u (-inf,-1] x [5/3,2]", 2);
  CHECK(io::decode_region(io::encode(r)) == r);
  CHECK(io::encode(region("[0,1/2]"))["boxes"][0]["iv"][0]["hi"] == "1/2");
}

TEST_CASE("integers are accepted as rationals") {
  CHECK(io::decode_rational(Json(3)) == 3);
  CHECK(io::decode_rational(Json("-7/14")) == q("-1/2"));
  CHECK_THROWS_AS(io::decode_rational(Json(0.5)), ParseError);
}

TEST_CASE("malformed regions") {
  CHECK_THROWS_AS(io::decode_region(io::parse(R"({"boxes":[]})")), ParseError);
  CHECK_THROWS_AS(io::decode_region(io::parse(R"({"dim":1,"boxes":[{"iv":[]}]})")), DimensionMismatch);
  CHECK_THROWS_AS(io::decode_region(io::parse(R"({"dim":1,"boxes":[{"iv":[{"lo":"2","lo_open":false,"hi":"1","hi_open":false}]}]})")),
                  PreconditionError);
  CHECK_THROWS_AS(io::parse("{not json"), ParseError);
}

TEST_CASE("function and element round trips") {
  const PLFunction f = pl("[0,1] u [2,3]", "0:0 1/2:1 1:0 2:1 3:1/3");
  CHECK(io::decode_pl_function(io::encode(f)) == f);
  const PositiveElement e = PositiveElement::tensor({f, f});
  CHECK(io::decode_positive_element(io::encode(e)) == e);
  CHECK(io::encode(e)["kind"] == "tensor");
  CHECK(io::encode(PositiveElement::scalar(f))["kind"] == "scalar");
  CHECK_THROWS_AS(io::decode_positive_element(io::parse(R"({"kind":"scalar","factors":[]})")), ParseError);
}

TEST_CASE("poset round trip") {
  const FinitePoset d = FinitePoset::diamond();
  CHECK(io::decode_poset(io::encode(d)) == d);
  CHECK_THROWS_AS(io::decode_poset(io::parse(R"({"n":2,"leq":[[true]]})")), std::exception);
}

TEST_CASE("ideal formats") {
  const Ideal i(space("[0,2]"), region("(0,1)"));
  const Ideal back = io::decode_ideal(io::encode(i));
  CHECK(back.carrier() == i.carrier());
  CHECK(back.ambient() == i.ambient());
  Json g;
  g["ambient"] = io::encode(region("[0,2]"));
  g["generators"] = Json::array({io::encode(PLFunction::tent(space("[0,2]"), 1, 1, 1))});
  CHECK(io::decode_ideal(g).carrier() == region("(0,2)"));
}
