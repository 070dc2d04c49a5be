#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wbk/region.hpp"

namespace wbk {

/// Only way to build a Region from boxes already in canonical form.
class RegionBuilder {
 public:
  static Region adopt(std::size_t dim, std::vector<Box> canonical) {
    return Region(dim, std::move(canonical));
  }
};

namespace detail {

/// Coordinate-compressed grid. Along an axis with sorted coordinates
/// c_0 < ... < c_{m-1} there are 2m+1 atoms: index 2i+1 is the point {c_i},
/// index 2i the open cell (c_{i-1}, c_i) with c_{-1} = -inf and c_m = +inf.
/// Flat indices put the last axis fastest.
class Grid {
 public:
  explicit Grid(std::vector<std::vector<Rational>> coords);

  /// Smallest grid on which every box of every input is a union of atoms.
  static Grid covering(std::size_t dim, std::span<const Region* const> regions);
  static Grid covering(std::size_t dim, std::span<const Box> boxes);

  std::size_t dim() const { return coords_.size(); }
  std::size_t size() const { return size_; }
  std::size_t extent(std::size_t axis) const { return extent_[axis]; }
  std::size_t stride(std::size_t axis) const { return stride_[axis]; }
  const std::vector<Rational>& coords(std::size_t axis) const { return coords_[axis]; }
  std::size_t index_along(std::size_t flat, std::size_t axis) const {
    return (flat / stride_[axis]) % extent_[axis];
  }

  /// Inclusive atom range covered by `iv` on `axis`.
  std::pair<std::size_t, std::size_t> atom_range(std::size_t axis, const Interval& iv) const;
  /// Interval spanned by the inclusive atom range [lo, hi] on `axis`.
  Interval span_of(std::size_t axis, std::size_t lo, std::size_t hi) const;
  /// A point inside the atom, used by probes.
  Rational representative(std::size_t axis, std::size_t atom) const;

 private:
  std::vector<std::vector<Rational>> coords_;
  std::vector<std::size_t> extent_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

/// Calls fn(flat) for every atom of the index box [lo, hi] (inclusive).
template <typename Fn>
void for_each_atom(const Grid& g, std::span<const std::size_t> lo, std::span<const std::size_t> hi,
                   Fn&& fn) {
  const std::size_t d = g.dim();
  std::vector<std::size_t> idx(lo.begin(), lo.end());
  while (true) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < d; ++k) flat += idx[k] * g.stride(k);
    fn(flat);
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (idx[k] < hi[k]) {
        ++idx[k];
        break;
      }
      idx[k] = lo[k];
      if (k == 0) return;
    }
    if (d == 0) return;
  }
}

class Raster {
 public:
  explicit Raster(Grid grid) : grid_(std::move(grid)), cells_(grid_.size(), 0) {}

  const Grid& grid() const { return grid_; }
  bool at(std::size_t flat) const { return cells_[flat] != 0; }
  void set(std::size_t flat, bool v) { cells_[flat] = v ? 1 : 0; }
  std::span<const std::uint8_t> cells() const { return cells_; }

  void paint(const Box& box);
  void paint(const Region& region);
  void flip();
  /// Closure in R^d: every included open cell adds its finite neighbours,
  /// one axis at a time.
  void close();
  bool any() const;

  /// Canonical region: drop redundant coordinates, then greedy merge.
  Region to_region() const;

 private:
  Raster minimized() const;
  std::vector<Box> greedy_boxes() const;

  Grid grid_;
  std::vector<std::uint8_t> cells_;
};

Raster rasterize(const Region& r, const Grid& g);

}  // namespace detail
}  // namespace wbk
