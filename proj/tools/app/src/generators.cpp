#include "wbk/app/generators.hpp"

#include <algorithm>

namespace wbk::app {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Rational Gen::grid(std::size_t lo_k, std::size_t hi_k, long denom) {
  Rational r(static_cast<long>(between(lo_k, hi_k)), denom);
  r.canonicalize();
  return r;
}

namespace {

Rational eighths(std::size_t k) {
  Rational r(static_cast<long>(k), 8);
  r.canonicalize();
  return r;
}

}  // namespace

Box random_box(Gen& g, std::size_t dim, Flags flags) {
  Box b;
  for (std::size_t k = 0; k < dim; ++k) {
    if (flags == Flags::any && g.chance(1, 8)) {
      b.iv.push_back(Interval::point(g.grid(0, 16)));
      continue;
    }
    const std::size_t lo = g.below(16);
    const std::size_t hi = g.between(lo + 1, 16);
    Interval iv = Interval::closed(eighths(lo), eighths(hi));
    switch (flags) {
      case Flags::closed: break;
      case Flags::open: iv.lo_open = iv.hi_open = true; break;
      case Flags::any:
        iv.lo_open = g.coin();
        iv.hi_open = g.coin();
        break;
    }
    b.iv.push_back(std::move(iv));
  }
  return b;
}

Region random_region(Gen& g, std::size_t dim, Flags flags, std::size_t max_boxes) {
  std::vector<Box> boxes;
  const std::size_t n = g.between(1, max_boxes);
  for (std::size_t i = 0; i < n; ++i) boxes.push_back(random_box(g, dim, flags));
  return normalize(dim, boxes);
}

Space random_compact_space(Gen& g, std::size_t dim, std::size_t max_boxes) {
  return Space(random_region(g, dim, Flags::closed, max_boxes));
}

Region random_open_in(Gen& g, const Space& k, std::size_t max_boxes) {
  return intersect(random_region(g, k.dim(), Flags::open, max_boxes), k.region());
}

Region random_inner(Gen& g, const Region& v, const Space& k) {
  const unsigned n = static_cast<unsigned>(g.between(1, 16));
  const Region stage = exhaustion_stage(v, k, n);
  if (g.chance(1, 4)) return stage;
  return intersect(random_open_in(g, k), stage);
}

PLFunction random_pl(Gen& g, const Space& k, std::size_t max_breakpoints) {
  std::vector<Rational> bp;
  for (const Box& b : k.region().boxes()) {
    bp.push_back(b.iv[0].lo.value());
    bp.push_back(b.iv[0].hi.value());
  }
  // Interior breakpoints on the 1/16 grid, kept only inside the space.
  const std::size_t budget = max_breakpoints > bp.size() ? max_breakpoints - bp.size() : 0;
  const std::size_t extra = budget == 0 ? 0 : g.below(budget + 1);
  for (std::size_t i = 0; i < extra; ++i) {
    const Rational x = g.grid(0, 32, 16);
    const Rational pt[1] = {x};
    if (k.region().contains(pt)) bp.push_back(x);
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  std::vector<Rational> val;
  for (std::size_t i = 0; i < bp.size(); ++i) val.push_back(g.chance(1, 3) ? Rational(0) : g.grid(1, 16));
  return PLFunction(k, std::move(bp), std::move(val));
}

PLFunction random_way_below(Gen& g, const PLFunction& b) {
  const Rational top = b.sup();
  if (sgn(top) == 0 || g.chance(1, 16)) return PLFunction::zero(b.space());
  // t in (0, sup b): one of 1/8, ..., 7/8 of the peak.
  Rational t = top * Rational(static_cast<long>(g.between(1, 7)), 8);
  t.canonicalize();
  const PLFunction cap = scale(cutdown(b, t), g.grid(1, 16));
  if (g.chance(1, 4)) return cap;
  return pointwise_min(random_pl(g, b.space()), cap);
}

}  // namespace wbk::app
