#include "wbk/poset.hpp"

#include <string>

#include "wbk/error.hpp"

namespace wbk {

namespace {

// Subset enumeration is exponential; this bound keeps it at ~10^6 subsets.
constexpr std::size_t kMaxEnumerable = 20;

using Mask = std::uint32_t;

std::optional<std::size_t> sup_mask(const FinitePoset& p, Mask s) {
  const std::size_t n = p.size();
  std::optional<std::size_t> best;
  for (std::size_t u = 0; u < n; ++u) {
    bool upper = true;
    for (std::size_t i = 0; i < n && upper; ++i)
      if ((s >> i) & 1u) upper = p.leq(i, u);
    if (!upper) continue;
    if (!best || p.leq(u, *best)) best = u;
  }
  if (!best) return std::nullopt;
  // best is minimal among those seen later; confirm it is below every upper bound.
  for (std::size_t u = 0; u < n; ++u) {
    bool upper = true;
    for (std::size_t i = 0; i < n && upper; ++i)
      if ((s >> i) & 1u) upper = p.leq(i, u);
    if (upper && !p.leq(*best, u)) return std::nullopt;
  }
  return best;
}

bool directed(const FinitePoset& p, Mask s) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!((s >> i) & 1u)) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!((s >> j) & 1u)) continue;
      bool bounded = false;
      for (std::size_t k = 0; k < n && !bounded; ++k)
        bounded = ((s >> k) & 1u) && p.leq(i, k) && p.leq(j, k);
      if (!bounded) return false;
    }
  }
  return true;
}

void check_ids(const FinitePoset& p, std::size_t x, std::size_t y) {
  if (x >= p.size() || y >= p.size()) throw PreconditionError("poset element id out of range");
  if (p.size() > kMaxEnumerable) throw PreconditionError("poset too large for subset enumeration");
}

bool way_below(const FinitePoset& p, std::size_t x, std::size_t y, bool only_directed) {
  check_ids(p, x, y);
  const Mask limit = Mask{1} << p.size();
  for (Mask s = 1; s < limit; ++s) {
    if (only_directed && !directed(p, s)) continue;
    const auto top = sup_mask(p, s);
    if (!top || !p.leq(y, *top)) continue;
    bool dominated = false;
    for (std::size_t i = 0; i < p.size() && !dominated; ++i)
      dominated = ((s >> i) & 1u) && p.leq(x, i);
    if (!dominated) return false;
  }
  return true;
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::vector<bool>> relation)
    : n_(relation.size()), rel_(n_ * n_, 0) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (relation[i].size() != n_) throw PreconditionError("poset relation must be square");
    for (std::size_t j = 0; j < n_; ++j) rel_[i * n_ + j] = relation[i][j] ? 1 : 0;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (!leq(i, i)) throw PreconditionError("poset relation is not reflexive at " + std::to_string(i));
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && leq(i, j) && leq(j, i))
        throw PreconditionError("poset relation is not antisymmetric at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
      for (std::size_t k = 0; k < n_; ++k)
        if (leq(i, j) && leq(j, k) && !leq(i, k)) throw PreconditionError("poset relation is not transitive");
    }
  }
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = true;
  return FinitePoset(std::move(m));
}

FinitePoset FinitePoset::diamond() {
  std::vector<std::vector<bool>> m(4, std::vector<bool>(4, false));
  for (std::size_t i = 0; i < 4; ++i) {
    m[i][i] = true;
    m[0][i] = true;
    m[i][3] = true;
  }
  return FinitePoset(std::move(m));
}

FinitePoset FinitePoset::closure_of(std::vector<std::vector<bool>> rel) {
  const std::size_t n = rel.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rel[i].size() != n) throw PreconditionError("relation must be square");
    rel[i][i] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  return FinitePoset(std::move(rel));
}

std::vector<std::vector<bool>> FinitePoset::matrix() const {
  std::vector<std::vector<bool>> m(n_, std::vector<bool>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = leq(i, j);
  return m;
}

std::optional<std::size_t> sup(const FinitePoset& p, std::span<const std::size_t> subset) {
  if (subset.empty()) throw PreconditionError("sup of an empty subset");
  if (p.size() > 32) throw PreconditionError("poset too large");
  Mask s = 0;
  for (std::size_t i : subset) {
    if (i >= p.size()) throw PreconditionError("poset element id out of range");
    s |= Mask{1} << i;
  }
  return sup_mask(p, s);
}

bool way_below_literal(const FinitePoset& p, std::size_t x, std::size_t y) {
  return way_below(p, x, y, false);
}

bool way_below_directed(const FinitePoset& p, std::size_t x, std::size_t y) {
  return way_below(p, x, y, true);
}

std::vector<std::size_t> compact_elements(const FinitePoset& p, WayBelowVariant variant) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const bool c = variant == WayBelowVariant::literal ? way_below_literal(p, x, x) : way_below_directed(p, x, x);
    if (c) out.push_back(x);
  }
  return out;
}

}  // namespace wbk
