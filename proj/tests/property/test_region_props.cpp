#include <algorithm>
#include <random>

#include "sweep.hpp"
#include "wbk/region.hpp"

using namespace wbk;
using props::Flags;
using props::Gen;
using props::sweep;

namespace {

/// Same point set, different box list: every box is cut once along a random
/// axis and a covered sub-box is thrown in, then the list is shuffled.
std::vector<Box> recut(Gen& g, const std::vector<Box>& boxes) {
  std::vector<Box> out;
  for (const Box& b : boxes) {
    const std::size_t k = g.below(b.dim());
    const Interval& iv = b.iv[k];
    if (!iv.lo.is_finite() || !iv.hi.is_finite() || iv.lo == iv.hi) {
      out.push_back(b);
      continue;
    }
    Rational cut = (iv.lo.value() + iv.hi.value()) / 2;
    cut.canonicalize();
    Box left = b, right = b;
    const bool cut_left_closed = g.coin();
    left.iv[k].hi = Scalar(cut);
    left.iv[k].hi_open = !cut_left_closed;
    right.iv[k].lo = Scalar(cut);
    right.iv[k].lo_open = cut_left_closed;
    out.push_back(left);
    out.push_back(right);
    if (g.coin()) {
      Box inner = b;
      inner.iv[k] = Interval::point(cut);
      out.push_back(inner);
    }
  }
  std::shuffle(out.begin(), out.end(), std::mt19937_64(g.raw()));
  return out;
}

std::vector<Box> raw_boxes(Gen& g, std::size_t dim, std::size_t max_boxes = 4) {
  std::vector<Box> out;
  const std::size_t n = g.between(1, max_boxes);
  for (std::size_t i = 0; i < n; ++i) out.push_back(app::random_box(g, dim, Flags::any));
  return out;
}

}  // namespace

TEST_CASE("canonical form is a function of the point set") {
  sweep(1, 400, [](Gen& g) {
    const std::size_t dim = g.between(1, 2);
    const auto l1 = raw_boxes(g, dim);
    const auto l2 = recut(g, l1);
    const Region r1 = normalize(dim, l1);
    REQUIRE(props::same_points(r1, l1));
    REQUIRE(props::same_points(r1, l2));
    CHECK(r1 == normalize(dim, l2));
    CHECK(r1 == normalize(dim, r1.boxes()));
  });
}

TEST_CASE("closure laws") {
  sweep(2, 300, [](Gen& g) {
    const std::size_t dim = g.between(1, 2);
    const Region a = app::random_region(g, dim, Flags::any);
    const Region b = app::random_region(g, dim, Flags::any);
    const Region ca = closure(a);
    CHECK(closure(ca) == ca);
    CHECK(is_subset(a, ca));
    CHECK(is_closed(ca));
    CHECK(closure(unite(a, b)) == unite(ca, closure(b)));
    const Region ab = intersect(a, b);
    CHECK(is_subset(closure(ab), ca));
    CHECK(interior(a) == complement(closure(complement(a))));
    CHECK(is_open(interior(a)));
    CHECK(interior(interior(a)) == interior(a));
  });
}

TEST_CASE("boolean identities") {
  sweep(3, 300, [](Gen& g) {
    const std::size_t dim = g.between(1, 2);
    const Region a = app::random_region(g, dim, Flags::any);
    const Region b = app::random_region(g, dim, Flags::any);
    CHECK(complement(unite(a, b)) == intersect(complement(a), complement(b)));
    CHECK(subtract(a, b) == intersect(a, complement(b)));
    CHECK(complement(complement(a)) == a);
    CHECK(unite(subtract(a, b), intersect(a, b)) == a);
    CHECK(is_subset(a, b) == subtract(a, b).empty());
  });
}

TEST_CASE("product of closures is the closure of the product") {
  sweep(4, 200, [](Gen& g) {
    const Region a = app::random_region(g, g.between(1, 2), Flags::any, 3);
    const Region b = app::random_region(g, 1, Flags::any, 3);
    CHECK(closure(product(a, b)) == product(closure(a), closure(b)));
    CHECK(interior(product(a, b)) == product(interior(a), interior(b)));
  });
}

TEST_CASE("morphology duality and monotonicity") {
  sweep(5, 200, [](Gen& g) {
    const std::size_t dim = g.between(1, 2);
    const Region a = app::random_region(g, dim, Flags::any, 3);
    const Rational delta = g.grid(1, 8);
    const Region d = dilate(a, delta);
    const Region e = erode(a, delta);
    CHECK(e == complement(dilate(complement(a), delta)));
    CHECK(is_subset(e, a));
    CHECK(is_subset(a, d));
    CHECK(is_subset(a, erode(d, delta)));
    CHECK(is_subset(dilate(e, delta), a));
  });
}

TEST_CASE("is_compact iff closed and bounded") {
  sweep(6, 300, [](Gen& g) {
    const std::size_t dim = g.between(1, 2);
    Region a = app::random_region(g, dim, Flags::any);
    if (g.chance(1, 4)) {
      Box ray = Box{std::vector<Interval>(dim, Interval::whole_line())};
      ray.iv[0] = Interval{Scalar(Rational(0)), false, Scalar::pos_infinity(), true};
      a = unite(a, Region::from_box(ray));
    }
    CHECK(is_compact(a) == (closure(a) == a && a.bounded()));
  });
}

TEST_CASE("compact containment is preserved by enlarging the outer set") {
  long positives = 0;
  sweep(7, 300, [&](Gen& g) {
    const std::size_t dim = g.between(1, 2);
    const Space k = app::random_compact_space(g, dim);
    const Region v = app::random_open_in(g, k);
    const Region u = app::random_inner(g, v, k);
    const Region w = unite(v, app::random_open_in(g, k));
    if (!compactly_contained(u, v, k)) return;
    ++positives;
    CHECK(compactly_contained(u, w, k));
    CHECK(is_subset(relative_closure(u, k), w));
  });
  CHECK(positives > 100);
}

TEST_CASE("exhaustion stages increase and stay inside V") {
  sweep(8, 150, [](Gen& g) {
    const std::size_t dim = g.between(1, 2);
    const Space k = app::random_compact_space(g, dim);
    const Region v = app::random_open_in(g, k);
    Region prev(dim);
    for (unsigned n = 1; n <= 16; n *= 2) {
      const Region s = exhaustion_stage(v, k, n);
      CHECK(is_subset(prev, s));
      CHECK(is_subset(s, v));
      CHECK(is_open_in(s, k));
      CHECK(compactly_contained(s, v, k));
      prev = s;
    }
  });
}
