#include <doctest.h>

#include "notation.hpp"
#include "wbk/error.hpp"
#include "wbk/pl_function.hpp"

using namespace wbk;
using wbk::testing::pl;
using wbk::testing::q;
using wbk::testing::region;
using wbk::testing::space;

namespace {

const Space& k02() {
  static const Space k = space("[0,2]");
  return k;
}

PLFunction tent_b() { return PLFunction::tent(k02(), 1, 1, 1); }
PLFunction tent_a() { return PLFunction::tent(k02(), 1, q("1/4"), 1); }

}  // namespace

TEST_CASE("construction validates its invariants") {
  CHECK_NOTHROW(pl("[0,1] u [2,3]", "0:0 1:1 2:1 3:0"));
  CHECK_THROWS_AS(pl("[0,2]", "0:0 2:-1"), PreconditionError);
  CHECK_THROWS_AS(pl("[0,2]", "0:0 1:1 1:0 2:0"), PreconditionError);
  CHECK_THROWS_AS(pl("[0,2]", "0:0 1:1"), PreconditionError);           // endpoint 2 missing
  CHECK_THROWS_AS(pl("[0,1] u [2,3]", "0:0 1:1 3:0"), PreconditionError);  // endpoint 2 missing
  CHECK_THROWS_AS(pl("[0,2]", "0:0 1:1 2:0 3:0"), PreconditionError);   // 3 outside
  CHECK_THROWS_AS(PLFunction::zero(space("(0,1)")), PreconditionError);
}

TEST_CASE("eval interpolates within components") {
  const PLFunction b = tent_b();
  CHECK(b.eval(1) == 1);
  CHECK(b.eval(q("1/2")) == q("1/2"));
  CHECK(eval(b, q("7/4")) == q("1/4"));
  CHECK_THROWS_AS(b.eval(3), PreconditionError);
  const PLFunction f = pl("[0,1] u [2,3]", "0:0 1:1 2:1 3:0");
  CHECK(f.eval(q("5/2")) == q("1/2"));
  CHECK_THROWS_AS(f.eval(q("3/2")), PreconditionError);
}

TEST_CASE("tent restricted to the space") {
  const PLFunction a = tent_a();
  CHECK(a.eval(1) == 1);
  CHECK(a.eval(q("3/4")) == 0);
  CHECK(a.eval(q("7/8")) == q("1/2"));
  CHECK(a.eval(0) == 0);
  // Tent cut off by the space boundary.
  const PLFunction edge = PLFunction::tent(k02(), 0, 1, 1);
  CHECK(edge.eval(0) == 1);
  CHECK(edge.eval(q("1/2")) == q("1/2"));
  CHECK(edge.eval(2) == 0);
}

TEST_CASE("cutdown") {
  const PLFunction c = cutdown(tent_b(), q("1/2"));
  CHECK(c.eval(1) == q("1/2"));
  CHECK(c.eval(q("1/2")) == 0);
  CHECK(c.eval(q("1/4")) == 0);
  CHECK(c.eval(q("3/4")) == q("1/4"));
  CHECK(open_support(c) == region("(1/2,3/2)"));
  CHECK(cutdown(tent_b(), 1).is_zero());
  CHECK(cutdown(tent_b(), 5).is_zero());
  CHECK(cutdown(PLFunction::zero(k02()), q("1/3")).is_zero());
  CHECK_THROWS_AS(cutdown(tent_b(), 0), PreconditionError);
}

TEST_CASE("superlevel sets") {
  CHECK(superlevel(tent_b(), q("1/2")) == region("(1/2,3/2)"));
  CHECK(superlevel(tent_b(), 0) == region("(0,2)"));
  CHECK(superlevel(tent_b(), q("3/8")) == region("(3/8,13/8)"));
  CHECK(superlevel(tent_b(), 1).empty());
  CHECK_THROWS_AS(superlevel(tent_b(), -1), PreconditionError);
  // A plateau touching the space boundary keeps the endpoint.
  CHECK(superlevel(pl("[0,2]", "0:1 1:1 2:0"), q("1/2")) == region("[0,3/2)"));
}

TEST_CASE("open supports") {
  CHECK(open_support(tent_b()) == region("(0,2)"));
  CHECK(open_support(PLFunction::zero(k02())).empty());
  const PLFunction f = pl("[0,1] u [2,3]", "0:0 1:0 2:1 3:1");
  CHECK(open_support(f) == region("[2,3]"));
  CHECK(open_support(pl("[0,3]", "0:1 1:0 2:0 3:1")) == region("[0,1) u (2,3]"));
}

TEST_CASE("exact minima and maxima") {
  CHECK(min_over(tent_b(), region("[3/4,5/4]")) == q("3/4"));
  CHECK(min_over(tent_b(), region("[0,2]")) == 0);
  CHECK(min_over(PLFunction::constant(k02(), 2), region("{1/3} u [1,2]")) == 2);
  CHECK(max_over(tent_b(), region("[0,1/2] u [7/4,2]")) == q("1/2"));
  CHECK_THROWS_AS(min_over(tent_b(), Region(1)), PreconditionError);
  CHECK_THROWS_AS(min_over(tent_b(), region("(0,1)")), PreconditionError);
  CHECK_THROWS_AS(min_over(tent_b(), region("[1,3]")), PreconditionError);
}

TEST_CASE("pointwise operations") {
  const PLFunction b = tent_b();
  CHECK(add(b, b) == PLFunction::tent(k02(), 1, 1, 2));
  CHECK(scale(b, q("1/2")) == PLFunction::tent(k02(), 1, 1, q("1/2")));
  const PLFunction m = min_const(b, q("1/2"));
  CHECK(m.eval(q("1/2")) == q("1/2"));
  CHECK(m.eval(1) == q("1/2"));
  CHECK(m.eval(q("3/2")) == q("1/2"));
  CHECK(m.eval(q("1/4")) == q("1/4"));
  const PLFunction pm = pointwise_min(b, PLFunction::tent(k02(), 0, 2, 1));
  CHECK(pm.eval(q("1/2")) == q("1/2"));
  CHECK(pm.eval(1) == q("1/2"));
  CHECK(pm.eval(q("3/2")) == q("1/4"));
  const std::vector<PLFunction> fs{b, b, b};
  CHECK(sum(fs, k02()) == PLFunction::tent(k02(), 1, 1, 3));
  CHECK(sum({}, k02()).is_zero());
  CHECK_THROWS_AS(add(b, PLFunction::zero(space("[0,3]"))), PreconditionError);
}

TEST_CASE("urysohn witness") {
  SUBCASE("bump inside an interval") {
    const PLFunction e = urysohn(region("(3/4,5/4)"), region("(0,2)"), k02());
    // delta = gap([3/4,5/4], {0,2}) = 3/4, so the ramps have width 3/8.
    CHECK(e.eval(1) == 1);
    CHECK(e.eval(q("3/4")) == 1);
    CHECK(e.eval(q("5/4")) == 1);
    CHECK(e.eval(q("3/8")) == 0);
    CHECK(e.eval(q("13/8")) == 0);
    CHECK(e.eval(q("9/16")) == q("1/2"));
    CHECK(open_support(e) == region("(3/8,13/8)"));
  }
  SUBCASE("whole ambient") {
    const Space k = space("[0,1]");
    CHECK(urysohn(region("[0,1]"), region("[0,1]"), k) == PLFunction::constant(k, 1));
  }
  SUBCASE("clopen component") {
    const Space k = space("[0,1] u [2,3]");
    const PLFunction e = urysohn(region("[2,3]"), region("[2,3]"), k);
    CHECK(e.eval(q("5/2")) == 1);
    CHECK(e.eval(q("1/2")) == 0);
  }
  SUBCASE("no witness without compact containment") {
    CHECK_THROWS_AS(urysohn(region("(0,1)"), region("(0,1)"), space("[0,1]")), NotCompactlyContained);
  }
}

TEST_CASE("linear domination constant") {
  const PLFunction b = tent_b();
  // On [3/4,1], a(x) / b(x) = (4x - 3) / x, which peaks at x = 1.
  CHECK(linear_domination_constant(tent_a(), b) == 1);
  CHECK(linear_domination_constant(b, b) == 1);
  CHECK(linear_domination_constant(scale(b, 3), b) == 3);
  CHECK(linear_domination_constant(PLFunction::zero(k02()), b) == 0);
  // Shared boundary zero: ratio of slopes.
  CHECK(linear_domination_constant(pl("[0,2]", "0:0 1/2:1 1:0 2:0"), pl("[0,2]", "0:0 1:1 2:0")) == 2);
  CHECK_THROWS_AS(linear_domination_constant(b, tent_a()), PreconditionError);
}

TEST_CASE("cuntz witness gap") {
  const PLFunction b = tent_b();
  CHECK(cuntz_witness_gap(b, b, 2) == q("1/8"));
  CHECK(cuntz_witness_gap(b, b, 1) == q("1/4"));
  // {b < 1/2} misses supp a = (3/4,5/4); for n = 1 the peak of
  // 4(x - 3/4)(1 - x) sits at x = 7/8.
  CHECK(cuntz_witness_gap(tent_a(), b, 2) == 0);
  CHECK(cuntz_witness_gap(tent_a(), b, 1) == q("1/16"));
  CHECK(cuntz_witness_gap(PLFunction::zero(k02()), b, 3) == 0);
  CHECK_THROWS_AS(cuntz_witness_gap(b, b, 0), PreconditionError);
  CHECK_THROWS_AS(cuntz_witness_gap(b, tent_a(), 1), PreconditionError);
}

TEST_CASE("distance ramp") {
  const PLFunction r = distance_ramp(k02(), region("[1,1]"), q("1/2"));
  CHECK(r.eval(1) == 0);
  CHECK(r.eval(q("3/4")) == q("1/2"));
  CHECK(r.eval(0) == 1);
}
