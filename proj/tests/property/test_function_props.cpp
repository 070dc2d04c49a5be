#include <algorithm>

#include "sweep.hpp"
#include "wbk/cuntz.hpp"
#include "wbk/error.hpp"
#include "wbk/pl_function.hpp"

using namespace wbk;
using props::Gen;
using props::sweep;

namespace {

Space space_1d(Gen& g) { return app::random_compact_space(g, 1); }

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Breakpoints, their midpoints, and a few 1/64 grid points inside the space.
std::vector<Rational> sample_points(Gen& g, const PLFunction& f, const std::vector<const Region*>& extra = {}) {
  std::vector<const Region*> rs = extra;
  rs.push_back(&f.space().region());
  std::vector<Rational> pts = props::coordinates_on_axis(rs);
  const auto& bp = f.breakpoints();
  pts.insert(pts.end(), bp.begin(), bp.end());
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    Rational m = (bp[i] + bp[i + 1]) / 2;
    m.canonicalize();
    pts.push_back(m);
  }
  for (int i = 0; i < 16; ++i) pts.push_back(g.grid(0, 128, 64));
  std::vector<Rational> inside;
  for (const Rational& x : pts) {
    const Rational p[1] = {x};
    if (f.space().region().contains(p)) inside.push_back(x);
  }
  return inside;
}

}  // namespace

TEST_CASE("cutdown support is the strict superlevel set") {
  sweep(11, 300, [](Gen& g) {
    const PLFunction f = app::random_pl(g, space_1d(g));
    const Rational eps = g.grid(1, 17, 16);
    const PLFunction c = cutdown(f, eps);
    CHECK(open_support(c) == superlevel(f, eps));
    for (const Rational& x : sample_points(g, f)) {
      const Rational d = f.eval(x) - eps;
      CHECK(c.eval(x) == (d > 0 ? d : Rational(0)));
    }
  });
}

TEST_CASE("superlevel sets shrink as the level rises") {
  sweep(12, 300, [](Gen& g) {
    const PLFunction f = app::random_pl(g, space_1d(g));
    const Rational t1 = g.grid(0, 16, 16);
    const Rational t2 = t1 + g.grid(1, 8, 16);
    CHECK(is_subset(superlevel(f, t2), superlevel(f, t1)));
    CHECK(is_open_in(superlevel(f, t1), f.space()));
  });
}

TEST_CASE("superlevel membership matches pointwise evaluation") {
  sweep(13, 300, [](Gen& g) {
    const PLFunction f = app::random_pl(g, space_1d(g));
    const Rational t = g.grid(0, 16, 16);
    const Region s = superlevel(f, t);
    for (const Rational& x : sample_points(g, f, {&s})) {
      const Rational p[1] = {x};
      CHECK(s.contains(p) == (f.eval(x) > t));
    }
  });
}

TEST_CASE("arithmetic agrees pointwise") {
  sweep(14, 200, [](Gen& g) {
    const Space k = space_1d(g);
    const PLFunction f = app::random_pl(g, k);
    const PLFunction h = app::random_pl(g, k);
    const Rational s = g.grid(0, 16);
    const Rational c = g.grid(0, 16);
    const PLFunction sum_fh = add(f, h);
    const PLFunction min_fh = pointwise_min(f, h);
    const PLFunction scaled = scale(f, s);
    const PLFunction capped = min_const(f, c);
    for (const Rational& x : sample_points(g, f)) {
      CHECK(sum_fh.eval(x) == f.eval(x) + h.eval(x));
      CHECK(min_fh.eval(x) == std::min(f.eval(x), h.eval(x)));
      CHECK(scaled.eval(x) == s * f.eval(x));
      CHECK(capped.eval(x) == std::min(f.eval(x), c));
    }
    CHECK(max_over(f, k.region()) == f.sup());
    CHECK(min_over(sum_fh, k.region()) >= min_over(f, k.region()));
  });
}

TEST_CASE("urysohn witnesses satisfy their postconditions") {
  long built = 0;
  sweep(15, 200, [&](Gen& g) {
    const Space k = space_1d(g);
    const Region v = app::random_open_in(g, k);
    const Region u = app::random_inner(g, v, k);
    if (!compactly_contained(u, v, k)) {
      CHECK_THROWS_AS(urysohn(u, v, k), NotCompactlyContained);
      return;
    }
    const PLFunction e = urysohn(u, v, k);
    ++built;
    CHECK(e.sup() <= 1);
    const Region cu = relative_closure(u, k);
    if (!cu.empty()) CHECK(min_over(e, cu) == 1);
    const Region cs = relative_closure(open_support(e), k);
    CHECK(is_subset(cs, v));
    CHECK(is_compact(cs));
  });
  CHECK(built > 50);
}

TEST_CASE("witness gap is bounded by C/n and non-increasing") {
  sweep(16, 150, [](Gen& g) {
    const PLFunction b = app::random_pl(g, space_1d(g));
    const PLFunction a = app::random_way_below(g, b);
    const Rational c = linear_domination_constant(a, b);
    Rational prev = cuntz_witness_gap(a, b, 1);
    for (long n = 1; n <= 256; n *= 2) {
      const Rational gap_n = cuntz_witness_gap(a, b, n);
      CHECK(gap_n <= c / n);
      CHECK(gap_n <= prev);
      prev = gap_n;
    }
  });
}

TEST_CASE("scalar way-below deciders agree and imply comparison") {
  sweep(17, 400, [](Gen& g) {
    const Space k = space_1d(g);
    const PLFunction fb = app::random_pl(g, k);
    const PLFunction fa = g.coin() ? app::random_way_below(g, fb) : app::random_pl(g, k);
    const CuntzClass a(PositiveElement::scalar(fa));
    const CuntzClass b(PositiveElement::scalar(fb));
    const bool wb = way_below_support(a, b, k);
    CHECK(gp_constant(a, b, k).has_value() == wb);
    const auto eps = way_below_epsilon(a, b, k);
    CHECK(eps.has_value() == wb);
    if (wb) {
      CHECK(cuntz_leq(a, b));
      CHECK(is_subset(open_support(fa), superlevel(fb, *eps)));
    }
    CHECK_NOTHROW(is_compact_class(a, k));
  });
}

TEST_CASE("tensor support matches the product of factor values") {
  sweep(18, 20, [](Gen& g) {
    const PLFunction f1 = app::random_pl(g, space_1d(g));
    const PLFunction f2 = app::random_pl(g, space_1d(g));
    const PositiveElement t = PositiveElement::tensor({f1, f2});
    const Region s = support(t);
    // 100 x 100 grid on [0,2]^2 at spacing 1/50, shifted by a seeded offset.
    const Rational ox = g.grid(0, 49, 2500), oy = g.grid(0, 49, 2500);
    long mismatches = 0;
    for (int i = 0; i < 100; ++i) {
      const Rational x = ox + frac(i, 50);
      const Rational px[1] = {x};
      if (!f1.space().region().contains(px)) continue;
      for (int j = 0; j < 100; ++j) {
        const Rational y = oy + frac(j, 50);
        const Rational py[1] = {y};
        if (!f2.space().region().contains(py)) continue;
        const Rational xy[2] = {x, y};
        if ((f1.eval(x) * f2.eval(y) > 0) != s.contains(xy)) ++mismatches;
        if (t.eval(xy) != f1.eval(x) * f2.eval(y)) ++mismatches;
      }
    }
    CHECK(mismatches == 0);
  });
}

TEST_CASE("tensor comparison follows factor comparisons") {
  sweep(19, 150, [](Gen& g) {
    const PLFunction b1 = app::random_pl(g, space_1d(g));
    const PLFunction b2 = app::random_pl(g, space_1d(g));
    const CuntzClass a1(PositiveElement::scalar(app::random_way_below(g, b1)));
    const CuntzClass a2(PositiveElement::scalar(app::random_way_below(g, b2)));
    const CuntzClass c1(PositiveElement::scalar(b1)), c2(PositiveElement::scalar(b2));
    CHECK(tensor_leq_lemma(a1, c1, a2, c2));
  });
}
