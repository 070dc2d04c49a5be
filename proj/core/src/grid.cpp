#include "grid.hpp"

#include <algorithm>

#include "wbk/error.hpp"

namespace wbk::detail {

namespace {

void collect(std::vector<std::vector<Rational>>& coords, const Box& box) {
  for (std::size_t k = 0; k < box.dim(); ++k) {
    const Interval& iv = box.iv[k];
    if (iv.lo.is_finite()) coords[k].push_back(iv.lo.value());
    if (iv.hi.is_finite()) coords[k].push_back(iv.hi.value());
  }
}

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::size_t coord_index(const std::vector<Rational>& coords, const Rational& x) {
  const auto it = std::lower_bound(coords.begin(), coords.end(), x);
  if (it == coords.end() || *it != x) throw Error("internal: coordinate missing from grid");
  return static_cast<std::size_t>(it - coords.begin());
}

}  // namespace

Grid::Grid(std::vector<std::vector<Rational>> coords) : coords_(std::move(coords)) {
  const std::size_t d = coords_.size();
  extent_.resize(d);
  stride_.resize(d);
  for (std::size_t k = 0; k < d; ++k) extent_[k] = 2 * coords_[k].size() + 1;
  std::size_t s = 1;
  for (std::size_t k = d; k-- > 0;) {
    stride_[k] = s;
    s *= extent_[k];
  }
  size_ = s;
}

Grid Grid::covering(std::size_t dim, std::span<const Region* const> regions) {
  std::vector<std::vector<Rational>> coords(dim);
  for (const Region* r : regions)
    for (const Box& b : r->boxes()) collect(coords, b);
  for (auto& c : coords) sort_unique(c);
  return Grid(std::move(coords));
}

Grid Grid::covering(std::size_t dim, std::span<const Box> boxes) {
  std::vector<std::vector<Rational>> coords(dim);
  for (const Box& b : boxes) collect(coords, b);
  for (auto& c : coords) sort_unique(c);
  return Grid(std::move(coords));
}

std::pair<std::size_t, std::size_t> Grid::atom_range(std::size_t axis, const Interval& iv) const {
  const auto& c = coords_[axis];
  std::size_t lo = 0;
  std::size_t hi = 2 * c.size();
  if (iv.lo.is_finite()) {
    const std::size_t i = coord_index(c, iv.lo.value());
    lo = iv.lo_open ? 2 * i + 2 : 2 * i + 1;
  }
  if (iv.hi.is_finite()) {
    const std::size_t i = coord_index(c, iv.hi.value());
    hi = iv.hi_open ? 2 * i : 2 * i + 1;
  }
  return {lo, hi};
}

Interval Grid::span_of(std::size_t axis, std::size_t lo, std::size_t hi) const {
  const auto& c = coords_[axis];
  Interval iv;
  if (lo == 0) {
    iv.lo = Scalar::neg_infinity();
    iv.lo_open = true;
  } else if (lo % 2 == 1) {
    iv.lo = Scalar(c[(lo - 1) / 2]);
    iv.lo_open = false;
  } else {
    iv.lo = Scalar(c[lo / 2 - 1]);
    iv.lo_open = true;
  }
  if (hi == 2 * c.size()) {
    iv.hi = Scalar::pos_infinity();
    iv.hi_open = true;
  } else if (hi % 2 == 1) {
    iv.hi = Scalar(c[(hi - 1) / 2]);
    iv.hi_open = false;
  } else {
    iv.hi = Scalar(c[hi / 2]);
    iv.hi_open = true;
  }
  return iv;
}

Rational Grid::representative(std::size_t axis, std::size_t atom) const {
  const auto& c = coords_[axis];
  if (c.empty()) return Rational(0);
  if (atom % 2 == 1) return c[(atom - 1) / 2];
  if (atom == 0) return c.front() - 1;
  if (atom == 2 * c.size()) return c.back() + 1;
  Rational mid = (c[atom / 2 - 1] + c[atom / 2]) / 2;
  mid.canonicalize();
  return mid;
}

void Raster::paint(const Box& box) {
  const std::size_t d = grid_.dim();
  std::vector<std::size_t> lo(d), hi(d);
  for (std::size_t k = 0; k < d; ++k) {
    auto [l, h] = grid_.atom_range(k, box.iv[k]);
    if (l > h) return;
    lo[k] = l;
    hi[k] = h;
  }
  for_each_atom(grid_, lo, hi, [&](std::size_t f) { cells_[f] = 1; });
}

void Raster::paint(const Region& region) {
  for (const Box& b : region.boxes()) paint(b);
}

void Raster::flip() {
  for (auto& c : cells_) c = c ? 0 : 1;
}

void Raster::close() {
  const std::size_t d = grid_.dim();
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t ext = grid_.extent(k);
    const std::size_t st = grid_.stride(k);
    // Additions land on odd (point) indices of axis k, which never spread
    // further along k, so one in-place pass suffices.
    for (std::size_t f = 0; f < cells_.size(); ++f) {
      if (!cells_[f]) continue;
      const std::size_t i = grid_.index_along(f, k);
      if (i % 2 == 1) continue;
      if (i > 0) cells_[f - st] = 1;
      if (i + 1 < ext) cells_[f + st] = 1;
    }
  }
}

bool Raster::any() const {
  return std::any_of(cells_.begin(), cells_.end(), [](std::uint8_t c) { return c != 0; });
}

Raster Raster::minimized() const {
  const std::size_t d = grid_.dim();
  std::vector<std::vector<bool>> keep(d);
  bool dropped = false;
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t m = grid_.coords(k).size();
    keep[k].assign(m, false);
    const std::size_t st = grid_.stride(k);
    for (std::size_t f = 0; f < cells_.size(); ++f) {
      const std::size_t i = grid_.index_along(f, k);
      if (i % 2 == 0) continue;
      const std::size_t c = (i - 1) / 2;
      if (keep[k][c]) continue;
      if (cells_[f - st] != cells_[f] || cells_[f + st] != cells_[f]) keep[k][c] = true;
    }
    for (std::size_t c = 0; c < m; ++c) dropped = dropped || !keep[k][c];
  }
  if (!dropped) return *this;

  std::vector<std::vector<Rational>> coords(d);
  std::vector<std::vector<std::size_t>> old_atom(d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto& c = grid_.coords(k);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!keep[k][i]) continue;
      old_atom[k].push_back(2 * i);
      old_atom[k].push_back(2 * i + 1);
      coords[k].push_back(c[i]);
    }
    old_atom[k].push_back(2 * c.size());
  }
  Raster out{Grid(std::move(coords))};
  const Grid& ng = out.grid_;
  for (std::size_t f = 0; f < out.cells_.size(); ++f) {
    std::size_t of = 0;
    for (std::size_t k = 0; k < d; ++k) of += old_atom[k][ng.index_along(f, k)] * grid_.stride(k);
    out.cells_[f] = cells_[of];
  }
  return out;
}

std::vector<Box> Raster::greedy_boxes() const {
  const std::size_t d = grid_.dim();
  std::vector<std::uint8_t> covered(cells_.size(), 0);
  std::vector<Box> boxes;
  std::vector<std::size_t> lo(d), hi(d);
  auto free_atom = [&](std::size_t f) { return cells_[f] && !covered[f]; };

  for (std::size_t start = 0; start < cells_.size(); ++start) {
    if (!free_atom(start)) continue;
    for (std::size_t k = 0; k < d; ++k) lo[k] = hi[k] = grid_.index_along(start, k);
    for (std::size_t k = 0; k < d; ++k) {
      while (hi[k] + 1 < grid_.extent(k)) {
        std::vector<std::size_t> slab_lo = lo, slab_hi = hi;
        slab_lo[k] = slab_hi[k] = hi[k] + 1;
        bool ok = true;
        for_each_atom(grid_, slab_lo, slab_hi, [&](std::size_t f) { ok = ok && free_atom(f); });
        if (!ok) break;
        ++hi[k];
      }
    }
    for_each_atom(grid_, lo, hi, [&](std::size_t f) { covered[f] = 1; });
    Box b;
    b.iv.reserve(d);
    for (std::size_t k = 0; k < d; ++k) b.iv.push_back(grid_.span_of(k, lo[k], hi[k]));
    boxes.push_back(std::move(b));
  }
  return boxes;
}

Region Raster::to_region() const {
  return RegionBuilder::adopt(grid_.dim(), minimized().greedy_boxes());
}

Raster rasterize(const Region& r, const Grid& g) {
  Raster out(g);
  out.paint(r);
  return out;
}

}  // namespace wbk::detail
