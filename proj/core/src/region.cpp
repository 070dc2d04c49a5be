#include "wbk/region.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "grid.hpp"
#include "wbk/error.hpp"

namespace wbk {

using detail::Grid;
using detail::Raster;

// ---------------------------------------------------------------- Interval

Interval Interval::closed(Rational lo, Rational hi) {
  return Interval{Scalar(std::move(lo)), false, Scalar(std::move(hi)), false};
}

Interval Interval::open(Scalar lo, Scalar hi) {
  return Interval{std::move(lo), true, std::move(hi), true};
}

Interval Interval::point(Rational at) {
  Scalar s(std::move(at));
  return Interval{s, false, s, false};
}

Interval Interval::whole_line() {
  return Interval::open(Scalar::neg_infinity(), Scalar::pos_infinity());
}

void Interval::validate() const {
  if (lo.is_pos_inf() || hi.is_neg_inf()) throw PreconditionError("interval endpoint at wrong infinity");
  if ((!lo.is_finite() && !lo_open) || (!hi.is_finite() && !hi_open))
    throw PreconditionError("infinite interval endpoint must be open");
  if (hi < lo) throw PreconditionError("interval with lo > hi: [" + lo.str() + ", " + hi.str() + "]");
  if (lo == hi && (lo_open || hi_open)) throw PreconditionError("empty interval at " + lo.str());
}

bool Interval::contains(const Rational& x) const {
  const Scalar s(x);
  const auto l = lo <=> s;
  const auto h = s <=> hi;
  const bool above = lo_open ? l < 0 : l <= 0;
  const bool below = hi_open ? h < 0 : h <= 0;
  return above && below;
}

bool Box::contains(std::span<const Rational> point) const {
  if (point.size() != iv.size()) throw DimensionMismatch("point dimension differs from box");
  for (std::size_t k = 0; k < iv.size(); ++k)
    if (!iv[k].contains(point[k])) return false;
  return true;
}

bool Box::bounded() const {
  return std::all_of(iv.begin(), iv.end(),
                     [](const Interval& i) { return i.lo.is_finite() && i.hi.is_finite(); });
}

// ---------------------------------------------------------------- Region

namespace {

void require_same_dim(const Region& a, const Region& b, const char* what) {
  if (a.dim() != b.dim())
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
}

Grid grid_for(const Region& a) {
  const std::array<const Region*, 1> rs{&a};
  return Grid::covering(a.dim(), rs);
}

Grid grid_for(const Region& a, const Region& b) {
  const std::array<const Region*, 2> rs{&a, &b};
  return Grid::covering(a.dim(), rs);
}

}  // namespace

Region::Region(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw PreconditionError("region dimension must be positive");
}

Region::Region(std::size_t dim, std::vector<Box> canonical) : dim_(dim), boxes_(std::move(canonical)) {}

Region Region::from_boxes(std::size_t dim, std::span<const Box> boxes) { return normalize(dim, boxes); }

Region Region::from_box(const Box& box) {
  return normalize(box.dim(), std::span<const Box>(&box, 1));
}

Region Region::whole_space(std::size_t dim) {
  Box b;
  b.iv.assign(dim, Interval::whole_line());
  return from_box(b);
}

bool Region::bounded() const {
  return std::all_of(boxes_.begin(), boxes_.end(), [](const Box& b) { return b.bounded(); });
}

bool Region::contains(std::span<const Rational> point) const {
  if (point.size() != dim_) throw DimensionMismatch("point dimension differs from region");
  return std::any_of(boxes_.begin(), boxes_.end(), [&](const Box& b) { return b.contains(point); });
}

Region normalize(std::size_t dim, std::span<const Box> boxes) {
  if (dim == 0) throw PreconditionError("region dimension must be positive");
  for (const Box& b : boxes) {
    if (b.dim() != dim)
      throw DimensionMismatch("box of dimension " + std::to_string(b.dim()) + " in region of dimension " +
                              std::to_string(dim));
    for (const Interval& iv : b.iv) iv.validate();
  }
  if (boxes.empty()) return Region(dim);
  Raster r(Grid::covering(dim, boxes));
  for (const Box& b : boxes) r.paint(b);
  return r.to_region();
}

Region boolean(BoolOp op, const Region& a, const Region& b) {
  require_same_dim(a, b, "boolean");
  const Grid g = grid_for(a, b);
  const Raster ra = detail::rasterize(a, g);
  const Raster rb = detail::rasterize(b, g);
  Raster out(g);
  for (std::size_t f = 0; f < g.size(); ++f) {
    const bool x = ra.at(f), y = rb.at(f);
    switch (op) {
      case BoolOp::unite: out.set(f, x || y); break;
      case BoolOp::intersect: out.set(f, x && y); break;
      case BoolOp::subtract: out.set(f, x && !y); break;
    }
  }
  return out.to_region();
}

Region complement(const Region& a) {
  Raster r = detail::rasterize(a, grid_for(a));
  r.flip();
  return r.to_region();
}

Region closure(const Region& a) {
  Raster r = detail::rasterize(a, grid_for(a));
  r.close();
  return r.to_region();
}

Region interior(const Region& a) {
  Raster r = detail::rasterize(a, grid_for(a));
  r.flip();
  r.close();
  r.flip();
  return r.to_region();
}

bool is_subset(const Region& a, const Region& b) {
  require_same_dim(a, b, "is_subset");
  if (a.empty()) return true;
  const Grid g = grid_for(a, b);
  const Raster ra = detail::rasterize(a, g);
  const Raster rb = detail::rasterize(b, g);
  for (std::size_t f = 0; f < g.size(); ++f)
    if (ra.at(f) && !rb.at(f)) return false;
  return true;
}

bool is_closed(const Region& a) { return closure(a) == a; }

bool is_open(const Region& a) { return interior(a) == a; }

bool is_compact(const Region& a) { return a.bounded() && is_closed(a); }

Region product(const Region& a, const Region& b) {
  const std::size_t d = a.dim() + b.dim();
  std::vector<Box> boxes;
  boxes.reserve(a.boxes().size() * b.boxes().size());
  for (const Box& x : a.boxes()) {
    for (const Box& y : b.boxes()) {
      Box p;
      p.iv = x.iv;
      p.iv.insert(p.iv.end(), y.iv.begin(), y.iv.end());
      boxes.push_back(std::move(p));
    }
  }
  return normalize(d, boxes);
}

namespace {

Region dilate_impl(const Region& a, const Rational& delta) {
  std::vector<Box> boxes = a.boxes();
  for (Box& b : boxes) {
    for (Interval& iv : b.iv) {
      if (iv.lo.is_finite()) iv.lo = Scalar(iv.lo.value() - delta);
      if (iv.hi.is_finite()) iv.hi = Scalar(iv.hi.value() + delta);
    }
  }
  return normalize(a.dim(), boxes);
}

}  // namespace

Region morph(Morph kind, const Region& a, const Rational& delta) {
  if (sgn(delta) <= 0) throw PreconditionError("morphology radius must be positive");
  if (kind == Morph::dilate) return dilate_impl(a, delta);
  return complement(dilate_impl(complement(a), delta));
}

Rational gap(const Region& a, const Region& b) {
  require_same_dim(a, b, "gap");
  if (a.empty() || b.empty()) throw PreconditionError("gap of an empty region");
  if (!is_compact(a) || !is_compact(b)) throw PreconditionError("gap requires compact regions");
  if (!intersect(a, b).empty()) throw PreconditionError("gap requires disjoint regions");
  // Distances between finite unions are attained between box closures.
  std::optional<Rational> best;
  for (const Box& x : a.boxes()) {
    for (const Box& y : b.boxes()) {
      Rational dist = 0;
      for (std::size_t k = 0; k < a.dim(); ++k) {
        const Rational& xl = x.iv[k].lo.value();
        const Rational& xh = x.iv[k].hi.value();
        const Rational& yl = y.iv[k].lo.value();
        const Rational& yh = y.iv[k].hi.value();
        Rational axis = 0;
        if (yl > xh) axis = yl - xh;
        if (xl > yh) axis = xl - yh;
        if (axis > dist) dist = axis;
      }
      if (!best || dist < *best) best = dist;
    }
  }
  return *best;
}

// ---------------------------------------------------------------- Space

bool is_locally_compact(const Region& k) {
  const Region cl = closure(k);
  return intersect(closure(subtract(cl, k)), k).empty();
}

Space::Space(Region region) : region_(std::move(region)) {
  if (!is_locally_compact(region_))
    throw PreconditionError("ambient region is not locally compact (not open in its closure)");
}

Space product(const Space& a, const Space& b) { return Space(product(a.region(), b.region())); }

Region relative_closure(const Region& u, const Space& k) {
  require_same_dim(u, k.region(), "relative_closure");
  if (!is_subset(u, k.region())) throw PreconditionError("relative_closure: U is not contained in K");
  return intersect(closure(u), k.region());
}

bool is_open_in(const Region& u, const Space& k) {
  require_same_dim(u, k.region(), "is_open_in");
  if (!is_subset(u, k.region())) throw PreconditionError("is_open_in: U is not contained in K");
  return intersect(closure(subtract(k.region(), u)), u).empty();
}

bool compactly_contained(const Region& u, const Region& v, const Space& k) {
  require_same_dim(u, v, "compactly_contained");
  if (!is_open_in(u, k)) throw PreconditionError("compactly_contained: U is not open in K");
  if (!is_open_in(v, k)) throw PreconditionError("compactly_contained: V is not open in K");
  if (!is_subset(u, v)) throw PreconditionError("compactly_contained: U is not contained in V");
  const Region cl = relative_closure(u, k);
  return is_compact(cl) && is_subset(cl, v);
}

Region exhaustion_stage(const Region& v, const Space& k, unsigned n) {
  if (n == 0) throw PreconditionError("exhaustion stage index starts at 1");
  const Region padded = unite(v, complement(k.region()));
  return intersect(interior(erode(padded, Rational(1, n))), k.region());
}

ExhaustionResult exhaustion_consistency(const Region& u, const Region& v, const Space& k,
                                        unsigned max_stage) {
  if (max_stage == 0) throw PreconditionError("exhaustion needs at least one stage");
  if (!k.compact()) throw PreconditionError("exhaustion_consistency requires a compact ambient");
  ExhaustionResult res;
  res.compactly_contained = compactly_contained(u, v, k);
  std::optional<Region> previous;
  for (unsigned n = 1; n <= max_stage; ++n) {
    Region stage = exhaustion_stage(v, k, n);
    if (!is_subset(stage, v) || (previous && !is_subset(*previous, stage))) res.chain_valid = false;
    if (is_subset(u, stage)) {
      res.capture_index = n;
      break;
    }
    previous = std::move(stage);
  }
  res.consistent = res.chain_valid && (res.capture_index.has_value() == res.compactly_contained);
  return res;
}

}  // namespace wbk
