#pragma once

#include <span>
#include <vector>

#include "wbk/region.hpp"
#include "wbk/scalar.hpp"

namespace wbk {

/// Nonnegative piecewise-linear function on a compact 1D space (a finite
/// union of closed intervals and points). The function interpolates
/// linearly between consecutive breakpoints lying in the same component.
/// Every component endpoint is a breakpoint.
class PLFunction {
 public:
  PLFunction(Space space, std::vector<Rational> breakpoints, std::vector<Rational> values);

  static PLFunction zero(const Space& space);
  static PLFunction constant(const Space& space, const Rational& value);
  /// height * max(0, 1 - |x - center| / half_width), restricted to `space`.
  static PLFunction tent(const Space& space, const Rational& center, const Rational& half_width,
                         const Rational& height);

  const Space& space() const { return space_; }
  const std::vector<Rational>& breakpoints() const { return bp_; }
  const std::vector<Rational>& values() const { return val_; }

  /// Throws PreconditionError when x lies outside the space.
  Rational eval(const Rational& x) const;
  Rational sup() const;
  bool is_zero() const;

  /// Same function with extra breakpoints; points outside the space are ignored.
  PLFunction refined(std::span<const Rational> extra) const;

  /// Calls fn(i) for each i such that [bp[i], bp[i+1]] is a linear piece.
  template <typename Fn>
  void for_each_piece(Fn&& fn) const {
    for (std::size_t i = 0; i + 1 < bp_.size(); ++i)
      if (component_[i] == component_[i + 1]) fn(i);
  }

  friend bool operator==(const PLFunction&, const PLFunction&) = default;

 private:
  Space space_;
  std::vector<Rational> bp_;
  std::vector<Rational> val_;
  std::vector<std::size_t> component_;
};

Rational eval(const PLFunction& f, const Rational& x);

/// (f - eps)_+ with breakpoints inserted where f crosses eps. eps > 0.
PLFunction cutdown(const PLFunction& f, const Rational& eps);

/// {x in space : f(x) > t}, open in the space. t >= 0.
Region superlevel(const PLFunction& f, const Rational& t);

/// {x : f(x) != 0} = superlevel(f, 0).
Region open_support(const PLFunction& f);

/// Exact minimum (maximum) of f over a compact nonempty C inside the space.
Rational min_over(const PLFunction& f, const Region& c);
Rational max_over(const PLFunction& f, const Region& c);

PLFunction add(const PLFunction& f, const PLFunction& g);
PLFunction sum(std::span<const PLFunction> fs, const Space& space);
/// s * f for s >= 0.
PLFunction scale(const PLFunction& f, const Rational& s);
/// min(f, c) for c >= 0, with breakpoints at the crossings.
PLFunction min_const(const PLFunction& f, const Rational& c);
/// Pointwise minimum of two functions on the same space.
PLFunction pointwise_min(const PLFunction& f, const PLFunction& g);

/// min(1, dist(x, target) / width) on the space, with the L-infinity
/// distance to a compact nonempty 1D target. width > 0.
PLFunction distance_ramp(const Space& space, const Region& target, const Rational& width);

/// Multiplier witness for U ⊂⊂ V in K: 0 <= e <= 1, e = 1 on the closure of
/// U in K, and the closure of its open support lies inside V. With
/// delta = gap(cl_K U, cl_K(K \ V)) the witness is
/// clamp(1 - dist(x, cl_K U) / (delta / 2), 0, 1). Throws
/// NotCompactlyContained when U is not compactly contained in V.
PLFunction urysohn(const Region& u, const Region& v, const Space& k);

/// Least C with a <= C * b everywhere. Requires supp a ⊆ supp b.
Rational linear_domination_constant(const PLFunction& a, const PLFunction& b);

/// sup |a - a * min(n * b, 1)|: the distance from a to v_n b v_n^* with
/// v_n = sqrt(a * min(n, 1 / b)). Requires supp a ⊆ supp b and n >= 1.
Rational cuntz_witness_gap(const PLFunction& a, const PLFunction& b, long n);

}  // namespace wbk
