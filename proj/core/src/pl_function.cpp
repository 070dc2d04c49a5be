#include "wbk/pl_function.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "wbk/error.hpp"

namespace wbk {

namespace {

Rational lerp(const Rational& x0, const Rational& v0, const Rational& x1, const Rational& v1,
              const Rational& x) {
  Rational r = v0 + (v1 - v0) * (x - x0) / (x1 - x0);
  r.canonicalize();
  return r;
}

/// x in (x0, x1) where the linear piece through (x0,v0), (x1,v1) equals level.
Rational root(const Rational& x0, const Rational& v0, const Rational& x1, const Rational& v1,
              const Rational& level) {
  Rational r = x0 + (level - v0) * (x1 - x0) / (v1 - v0);
  r.canonicalize();
  return r;
}

void require_same_space(const PLFunction& f, const PLFunction& g, const char* what) {
  if (f.space() != g.space()) throw PreconditionError(std::string(what) + ": functions live on different spaces");
}

std::vector<Rational> merged_breakpoints(const PLFunction& f, const PLFunction& g) {
  std::vector<Rational> out;
  out.reserve(f.breakpoints().size() + g.breakpoints().size());
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
             g.breakpoints().end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Points strictly inside pieces where f crosses `level`.
std::vector<Rational> crossings(const PLFunction& f, const Rational& level) {
  std::vector<Rational> out;
  const auto& x = f.breakpoints();
  const auto& v = f.values();
  f.for_each_piece([&](std::size_t i) {
    const int s0 = sgn(v[i] - level);
    const int s1 = sgn(v[i + 1] - level);
    if (s0 * s1 < 0) out.push_back(root(x[i], v[i], x[i + 1], v[i + 1], level));
  });
  return out;
}

template <typename Fn>
PLFunction map_values(const PLFunction& f, Fn&& fn) {
  std::vector<Rational> vals;
  vals.reserve(f.values().size());
  for (const Rational& v : f.values()) vals.push_back(fn(v));
  return PLFunction(f.space(), f.breakpoints(), std::move(vals));
}

void require_support_inclusion(const PLFunction& a, const PLFunction& b, const char* what) {
  require_same_space(a, b, what);
  if (!is_subset(open_support(a), open_support(b)))
    throw PreconditionError(std::string(what) + ": supp a is not contained in supp b");
}

}  // namespace

PLFunction::PLFunction(Space space, std::vector<Rational> breakpoints, std::vector<Rational> values)
    : space_(std::move(space)), bp_(std::move(breakpoints)), val_(std::move(values)) {
  const Region& k = space_.region();
  if (k.dim() != 1) throw PreconditionError("PL functions live on 1D spaces");
  if (k.empty() || !space_.compact()) throw PreconditionError("PL function space must be compact and nonempty");
  if (bp_.size() != val_.size()) throw PreconditionError("breakpoint and value counts differ");
  for (auto& x : bp_) x.canonicalize();
  for (auto& v : val_) {
    v.canonicalize();
    if (sgn(v) < 0) throw PreconditionError("PL function value " + format_rational(v) + " is negative");
  }
  for (std::size_t i = 0; i + 1 < bp_.size(); ++i)
    if (!(bp_[i] < bp_[i + 1])) throw PreconditionError("breakpoints must be strictly increasing");

  const auto& comps = k.boxes();
  component_.resize(bp_.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < bp_.size(); ++i) {
    while (c < comps.size() && Scalar(bp_[i]) > comps[c].iv[0].hi) ++c;
    if (c == comps.size() || !comps[c].iv[0].contains(bp_[i]))
      throw PreconditionError("breakpoint " + format_rational(bp_[i]) + " lies outside the space");
    component_[i] = c;
  }
  for (const Box& comp : comps) {
    for (const Scalar& end : {comp.iv[0].lo, comp.iv[0].hi}) {
      if (!std::binary_search(bp_.begin(), bp_.end(), end.value()))
        throw PreconditionError("component endpoint " + end.str() + " is not a breakpoint");
    }
  }
}

PLFunction PLFunction::constant(const Space& space, const Rational& value) {
  std::vector<Rational> bp;
  for (const Box& b : space.region().boxes()) {
    bp.push_back(b.iv[0].lo.value());
    if (b.iv[0].hi != b.iv[0].lo) bp.push_back(b.iv[0].hi.value());
  }
  std::vector<Rational> val(bp.size(), value);
  return PLFunction(space, std::move(bp), std::move(val));
}

PLFunction PLFunction::zero(const Space& space) { return constant(space, Rational(0)); }

PLFunction PLFunction::tent(const Space& space, const Rational& center, const Rational& half_width,
                            const Rational& height) {
  if (sgn(half_width) <= 0) throw PreconditionError("tent half width must be positive");
  if (sgn(height) < 0) throw PreconditionError("tent height must be nonnegative");
  const PLFunction base = zero(space);
  const std::vector<Rational> knots{center - half_width, center, center + half_width};
  PLFunction refined = base.refined(knots);
  std::vector<Rational> vals;
  for (const Rational& x : refined.breakpoints()) {
    Rational d = abs(x - center);
    Rational v = d >= half_width ? Rational(0) : Rational(height * (1 - d / half_width));
    vals.push_back(v);
  }
  return PLFunction(space, refined.breakpoints(), std::move(vals));
}

Rational PLFunction::eval(const Rational& x) const {
  const auto it = std::lower_bound(bp_.begin(), bp_.end(), x);
  const auto i = static_cast<std::size_t>(it - bp_.begin());
  if (it != bp_.end() && *it == x) return val_[i];
  if (i == 0 || i == bp_.size() || component_[i - 1] != component_[i])
    throw PreconditionError("eval at " + format_rational(x) + " outside the space");
  return lerp(bp_[i - 1], val_[i - 1], bp_[i], val_[i], x);
}

Rational PLFunction::sup() const { return *std::max_element(val_.begin(), val_.end()); }

bool PLFunction::is_zero() const {
  return std::all_of(val_.begin(), val_.end(), [](const Rational& v) { return sgn(v) == 0; });
}

PLFunction PLFunction::refined(std::span<const Rational> extra) const {
  std::vector<Rational> bp = bp_;
  for (const Rational& x : extra)
    if (space_.region().contains(std::span<const Rational>(&x, 1))) bp.push_back(x);
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  if (bp.size() == bp_.size()) return *this;
  std::vector<Rational> val;
  val.reserve(bp.size());
  for (const Rational& x : bp) val.push_back(eval(x));
  return PLFunction(space_, std::move(bp), std::move(val));
}

Rational eval(const PLFunction& f, const Rational& x) { return f.eval(x); }

PLFunction cutdown(const PLFunction& f, const Rational& eps) {
  if (sgn(eps) <= 0) throw PreconditionError("cutdown requires eps > 0");
  const PLFunction r = f.refined(crossings(f, eps));
  return map_values(r, [&](const Rational& v) { return v > eps ? Rational(v - eps) : Rational(0); });
}

Region superlevel(const PLFunction& f, const Rational& t) {
  if (sgn(t) < 0) throw PreconditionError("superlevel requires t >= 0");
  const auto& x = f.breakpoints();
  const auto& v = f.values();
  std::vector<Box> boxes;
  auto add = [&](Interval iv) { boxes.push_back(Box{{std::move(iv)}}); };
  // Isolated points of the space are components with a single breakpoint.
  for (const Box& comp : f.space().region().boxes()) {
    if (comp.iv[0].lo == comp.iv[0].hi && f.eval(comp.iv[0].lo.value()) > t) add(comp.iv[0]);
  }
  f.for_each_piece([&](std::size_t i) {
    const bool in0 = v[i] > t;
    const bool in1 = v[i + 1] > t;
    if (in0 && in1) {
      add(Interval::closed(x[i], x[i + 1]));
    } else if (in0) {
      const Rational r = v[i + 1] == t ? x[i + 1] : root(x[i], v[i], x[i + 1], v[i + 1], t);
      add(Interval{Scalar(x[i]), false, Scalar(r), true});
    } else if (in1) {
      const Rational r = v[i] == t ? x[i] : root(x[i], v[i], x[i + 1], v[i + 1], t);
      add(Interval{Scalar(r), true, Scalar(x[i + 1]), false});
    }
  });
  return normalize(1, boxes);
}

Region open_support(const PLFunction& f) { return superlevel(f, Rational(0)); }

namespace {

template <typename Better>
Rational extremum_over(const PLFunction& f, const Region& c, Better better, const char* what) {
  if (c.dim() != 1) throw DimensionMismatch(std::string(what) + ": region must be 1D");
  if (c.empty()) throw PreconditionError(std::string(what) + ": empty region");
  if (!is_compact(c)) throw PreconditionError(std::string(what) + ": region must be compact");
  if (!is_subset(c, f.space().region())) throw PreconditionError(std::string(what) + ": region leaves the space");
  std::optional<Rational> best;
  auto consider = [&](const Rational& x) {
    Rational v = f.eval(x);
    if (!best || better(v, *best)) best = std::move(v);
  };
  const auto& bp = f.breakpoints();
  for (const Box& b : c.boxes()) {
    const Rational& lo = b.iv[0].lo.value();
    const Rational& hi = b.iv[0].hi.value();
    consider(lo);
    consider(hi);
    for (auto it = std::upper_bound(bp.begin(), bp.end(), lo); it != bp.end() && *it < hi; ++it) consider(*it);
  }
  return *best;
}

}  // namespace

Rational min_over(const PLFunction& f, const Region& c) {
  return extremum_over(f, c, [](const Rational& a, const Rational& b) { return a < b; }, "min_over");
}

Rational max_over(const PLFunction& f, const Region& c) {
  return extremum_over(f, c, [](const Rational& a, const Rational& b) { return a > b; }, "max_over");
}

PLFunction add(const PLFunction& f, const PLFunction& g) {
  require_same_space(f, g, "add");
  std::vector<Rational> bp = merged_breakpoints(f, g);
  std::vector<Rational> val;
  val.reserve(bp.size());
  for (const Rational& x : bp) val.push_back(f.eval(x) + g.eval(x));
  return PLFunction(f.space(), std::move(bp), std::move(val));
}

PLFunction sum(std::span<const PLFunction> fs, const Space& space) {
  PLFunction acc = PLFunction::zero(space);
  for (const PLFunction& f : fs) acc = add(acc, f);
  return acc;
}

PLFunction scale(const PLFunction& f, const Rational& s) {
  if (sgn(s) < 0) throw PreconditionError("scale factor must be nonnegative");
  return map_values(f, [&](const Rational& v) { return Rational(v * s); });
}

PLFunction min_const(const PLFunction& f, const Rational& c) {
  if (sgn(c) < 0) throw PreconditionError("min_const level must be nonnegative");
  const PLFunction r = f.refined(crossings(f, c));
  return map_values(r, [&](const Rational& v) { return v < c ? v : c; });
}

PLFunction pointwise_min(const PLFunction& f, const PLFunction& g) {
  require_same_space(f, g, "pointwise_min");
  const std::vector<Rational> bp = merged_breakpoints(f, g);
  const PLFunction fr = f.refined(bp);
  std::vector<Rational> cross;
  fr.for_each_piece([&](std::size_t i) {
    const Rational& x0 = fr.breakpoints()[i];
    const Rational& x1 = fr.breakpoints()[i + 1];
    const Rational d0 = fr.values()[i] - g.eval(x0);
    const Rational d1 = fr.values()[i + 1] - g.eval(x1);
    if (sgn(d0) * sgn(d1) < 0) cross.push_back(root(x0, d0, x1, d1, Rational(0)));
  });
  const PLFunction r = fr.refined(cross);
  std::vector<Rational> val;
  for (const Rational& x : r.breakpoints()) {
    Rational a = r.eval(x), b = g.eval(x);
    val.push_back(a < b ? a : b);
  }
  return PLFunction(f.space(), r.breakpoints(), std::move(val));
}

PLFunction distance_ramp(const Space& space, const Region& target, const Rational& width) {
  if (sgn(width) <= 0) throw PreconditionError("distance_ramp width must be positive");
  if (target.dim() != 1 || target.empty() || !is_compact(target))
    throw PreconditionError("distance_ramp target must be a compact nonempty 1D region");
  const auto& parts = target.boxes();
  std::vector<Rational> knots;
  for (const Box& b : space.region().boxes()) {
    knots.push_back(b.iv[0].lo.value());
    knots.push_back(b.iv[0].hi.value());
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Rational& lo = parts[i].iv[0].lo.value();
    const Rational& hi = parts[i].iv[0].hi.value();
    knots.insert(knots.end(), {Rational(lo - width), lo, hi, Rational(hi + width)});
    if (i + 1 < parts.size()) knots.push_back(Rational((hi + parts[i + 1].iv[0].lo.value()) / 2));
  }
  std::vector<Rational> bp;
  for (auto& x : knots) {
    x.canonicalize();
    if (space.region().contains(std::span<const Rational>(&x, 1))) bp.push_back(x);
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

  std::vector<Rational> val;
  val.reserve(bp.size());
  for (const Rational& x : bp) {
    std::optional<Rational> dist;
    for (const Box& b : parts) {
      Rational d = 0;
      if (x < b.iv[0].lo.value()) d = b.iv[0].lo.value() - x;
      if (x > b.iv[0].hi.value()) d = x - b.iv[0].hi.value();
      if (!dist || d < *dist) dist = d;
    }
    Rational r = *dist / width;
    val.push_back(r < 1 ? r : Rational(1));
  }
  return PLFunction(space, std::move(bp), std::move(val));
}

PLFunction urysohn(const Region& u, const Region& v, const Space& k) {
  if (k.dim() != 1) throw PreconditionError("urysohn: witnesses are built on 1D spaces");
  if (!k.compact()) throw PreconditionError("urysohn: ambient must be compact");
  if (!compactly_contained(u, v, k))
    throw NotCompactlyContained("urysohn: U is not compactly contained in V; no witness exists");

  const Region core = relative_closure(u, k);
  if (core.empty()) return PLFunction::zero(k);
  const Region outside = relative_closure(subtract(k.region(), v), k);
  if (outside.empty()) return PLFunction::constant(k, Rational(1));

  // e = 1 - min(1, dist(x, cl U) / (delta / 2)).
  const PLFunction ramp = distance_ramp(k, core, gap(core, outside) / 2);
  std::vector<Rational> val;
  for (const Rational& r : ramp.values()) val.push_back(Rational(1 - r));
  PLFunction e(k, ramp.breakpoints(), std::move(val));

  const Region reach = relative_closure(open_support(e), k);
  if (min_over(e, core) != 1 || !is_compact(reach) || !is_subset(reach, v))
    throw Error("internal: urysohn witness failed its postconditions");
  return e;
}

Rational linear_domination_constant(const PLFunction& a, const PLFunction& b) {
  require_support_inclusion(a, b, "linear_domination_constant");
  const std::vector<Rational> bp = merged_breakpoints(a, b);
  // a/b restricted to a linear piece is monotone, and constant on pieces
  // where b vanishes at one end; so the supremum is a breakpoint ratio.
  Rational c = 0;
  for (const Rational& x : bp) {
    const Rational bx = b.eval(x);
    if (sgn(bx) <= 0) continue;
    Rational ratio = a.eval(x) / bx;
    if (ratio > c) c = ratio;
  }
  for (const Rational& x : bp)
    if (a.eval(x) > c * b.eval(x)) throw Error("internal: domination constant failed verification");
  return c;
}

Rational cuntz_witness_gap(const PLFunction& a, const PLFunction& b, long n) {
  if (n <= 0) throw PreconditionError("cuntz_witness_gap requires n >= 1");
  require_support_inclusion(a, b, "cuntz_witness_gap");
  const Rational level(1, n);
  const PLFunction br = b.refined(merged_breakpoints(a, b));
  const PLFunction bf = br.refined(crossings(br, level));
  const auto& x = bf.breakpoints();

  // Objective a * (1 - n b) on {b <= 1/n}; quadratic on each piece.
  Rational best = 0;
  auto q = [&](const Rational& bv) { return Rational(1 - n * bv); };
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Rational bv = bf.values()[i];
    if (bv > level) continue;
    Rational val = a.eval(x[i]) * q(bv);
    if (val > best) best = val;
  }
  bf.for_each_piece([&](std::size_t i) {
    if (bf.values()[i] > level || bf.values()[i + 1] > level) return;
    const Rational a0 = a.eval(x[i]);
    const Rational da = a.eval(x[i + 1]) - a0;
    const Rational q0 = q(bf.values()[i]);
    const Rational dq = q(bf.values()[i + 1]) - q0;
    if (sgn(da) * sgn(dq) >= 0) return;
    Rational s = -(da * q0 + dq * a0) / (2 * da * dq);
    s.canonicalize();
    if (sgn(s) <= 0 || s >= 1) return;
    Rational val = (a0 + da * s) * (q0 + dq * s);
    if (val > best) best = val;
  });
  best.canonicalize();
  return best;
}

}  // namespace wbk
