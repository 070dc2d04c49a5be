#pragma once

#include <cstdint>
#include <random>

#include "wbk/pl_function.hpp"
#include "wbk/region.hpp"

namespace wbk::app {

/// splitmix64 finalizer; used to derive independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Deterministic draws for instance generation. Every coordinate is a
/// multiple of 1/8 in [0, 2] unless a finer grid is asked for.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }
  /// Uniform-ish integer in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (rng_() & 1u) != 0; }
  /// Probability num/den.
  bool chance(unsigned num, unsigned den) { return below(den) < num; }
  /// k / denom for k in [lo_k, hi_k].
  Rational grid(std::size_t lo_k, std::size_t hi_k, long denom = 8);

 private:
  std::mt19937_64 rng_;
};

enum class Flags { any, closed, open };

/// One box with endpoints in {0..16}/8; under Flags::any some axes may
/// degenerate to a point.
Box random_box(Gen& g, std::size_t dim, Flags flags);

/// Union of 1..max_boxes random boxes.
Region random_region(Gen& g, std::size_t dim, Flags flags, std::size_t max_boxes = 4);

/// Compact ambient: union of 1..max_boxes closed boxes.
Space random_compact_space(Gen& g, std::size_t dim, std::size_t max_boxes = 3);

/// Random open-in-K region: random open boxes intersected with K.
Region random_open_in(Gen& g, const Space& k, std::size_t max_boxes = 3);

/// Random U with cl_K U inside V: an open-in-K region intersected with an
/// exhaustion stage of V. Often, but not always, nonempty.
Region random_inner(Gen& g, const Region& v, const Space& k);

/// Nonnegative PL function on a compact 1D space with at most
/// `max_breakpoints` breakpoints (component endpoints always included)
/// and values in {0..16}/8. Zero values are drawn with probability 1/3.
PLFunction random_pl(Gen& g, const Space& k, std::size_t max_breakpoints = 8);

/// a with closure(supp a) inside supp b: min(random, s * (b - t)_+).
PLFunction random_way_below(Gen& g, const PLFunction& b);

}  // namespace wbk::app
