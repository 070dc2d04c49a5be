#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wbk/scalar.hpp"

namespace wbk {

/// One axis of a box. Endpoints may be infinite, in which case they are open.
/// A degenerate interval (lo == hi) is a closed point.
struct Interval {
  Scalar lo;
  bool lo_open = false;
  Scalar hi;
  bool hi_open = false;

  static Interval closed(Rational lo, Rational hi);
  static Interval open(Scalar lo, Scalar hi);
  static Interval point(Rational at);
  static Interval whole_line();

  /// Throws PreconditionError when the interval is empty or violates the
  /// endpoint conventions.
  void validate() const;
  bool contains(const Rational& x) const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Box {
  std::vector<Interval> iv;

  std::size_t dim() const { return iv.size(); }
  bool contains(std::span<const Rational> point) const;
  bool bounded() const;

  friend bool operator==(const Box&, const Box&) = default;
};

/// A finite union of boxes in R^d held in canonical form: two regions are
/// equal as point sets iff they compare equal structurally.
///
/// Canonical form is computed on the coordinate-compressed grid. Every
/// endpoint value per axis splits the line into points and open cells, the
/// products of these atoms partition R^d, and a region is a set of atoms.
/// Coordinates across which membership never changes are dropped, then the
/// atoms are re-emitted as maximal disjoint boxes by a greedy sweep in
/// lexicographic atom order.
class Region {
 public:
  /// Empty region of the given dimension (d >= 1).
  explicit Region(std::size_t dim);

  /// Canonicalizes the union of `boxes`; every box must have dimension `dim`.
  static Region from_boxes(std::size_t dim, std::span<const Box> boxes);
  static Region from_box(const Box& box);
  static Region whole_space(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  bool empty() const { return boxes_.empty(); }
  bool bounded() const;
  bool contains(std::span<const Rational> point) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  friend class RegionBuilder;
  Region(std::size_t dim, std::vector<Box> canonical);

  std::size_t dim_;
  std::vector<Box> boxes_;
};

/// normalize(boxes) from the region algebra: canonical region equal to the
/// union of the input boxes.
Region normalize(std::size_t dim, std::span<const Box> boxes);

enum class BoolOp { unite, intersect, subtract };

Region boolean(BoolOp op, const Region& a, const Region& b);
inline Region unite(const Region& a, const Region& b) { return boolean(BoolOp::unite, a, b); }
inline Region intersect(const Region& a, const Region& b) {
  return boolean(BoolOp::intersect, a, b);
}
inline Region subtract(const Region& a, const Region& b) {
  return boolean(BoolOp::subtract, a, b);
}
/// Complement in R^d.
Region complement(const Region& a);

Region closure(const Region& a);
Region interior(const Region& a);

bool is_subset(const Region& a, const Region& b);
bool is_closed(const Region& a);
bool is_open(const Region& a);
/// Closed in R^d and bounded. The empty region is compact.
bool is_compact(const Region& a);

/// Cartesian product, living in R^(dim a + dim b).
Region product(const Region& a, const Region& b);

enum class Morph { dilate, erode };

/// Minkowski sum with (dilate) or erosion by (erode) the closed L-infinity
/// cube of radius delta > 0. erode(A) == complement(dilate(complement(A))).
Region morph(Morph kind, const Region& a, const Rational& delta);
inline Region dilate(const Region& a, const Rational& delta) {
  return morph(Morph::dilate, a, delta);
}
inline Region erode(const Region& a, const Rational& delta) {
  return morph(Morph::erode, a, delta);
}

/// Exact L-infinity distance between two compact, nonempty, disjoint regions.
Rational gap(const Region& a, const Region& b);

/// A region designated as ambient topological space. Construction checks
/// local compactness: the region must be open in its own closure, i.e. the
/// intersection of a closed and an open region.
class Space {
 public:
  explicit Space(Region region);

  const Region& region() const { return region_; }
  std::size_t dim() const { return region_.dim(); }
  bool compact() const { return is_compact(region_); }

  friend bool operator==(const Space&, const Space&) = default;

 private:
  Region region_;
};

bool is_locally_compact(const Region& k);

Space product(const Space& a, const Space& b);

/// Closure of U in the subspace topology of K. Requires U ⊆ K.
Region relative_closure(const Region& u, const Space& k);

/// True iff U is open in K, decided as closure(K \ U) ∩ U = ∅. Requires U ⊆ K.
bool is_open_in(const Region& u, const Space& k);

/// U ⊂⊂ V in K: the closure of U in K is compact and contained in V.
/// Throws PreconditionError unless U and V are open in K and U ⊆ V.
bool compactly_contained(const Region& u, const Region& v, const Space& k);

/// Stage n of the canonical open exhaustion of V:
/// interior(erode(V ∪ (R^d \ K), 1/n)) ∩ K.
Region exhaustion_stage(const Region& v, const Space& k, unsigned n);

struct ExhaustionResult {
  bool consistent = false;
  bool compactly_contained = false;
  /// First n <= N with U ⊆ V_n.
  std::optional<unsigned> capture_index;
  /// V_n ⊆ V_{n+1} ⊆ V held for every stage that was built.
  bool chain_valid = true;
};

/// Compares capture by a finite stage of the exhaustion of V against
/// compactly_contained(U, V, K). Requires K compact, U and V open in K and
/// U ⊆ V.
ExhaustionResult exhaustion_consistency(const Region& u, const Region& v, const Space& k,
                                        unsigned max_stage);

}  // namespace wbk
