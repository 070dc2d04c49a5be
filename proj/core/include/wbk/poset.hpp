#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wbk {

/// Finite partial order on the ids 0..n-1. Construction validates
/// reflexivity, antisymmetry and transitivity.
class FinitePoset {
 public:
  /// relation[i][j] means i <= j.
  explicit FinitePoset(std::vector<std::vector<bool>> relation);

  static FinitePoset chain(std::size_t n);
  /// bottom = 0, a = 1, b = 2, top = 3.
  static FinitePoset diamond();
  /// Reflexive-transitive closure of `rel`; throws if the closure is not
  /// antisymmetric.
  static FinitePoset closure_of(std::vector<std::vector<bool>> rel);

  std::size_t size() const { return n_; }
  bool leq(std::size_t x, std::size_t y) const { return rel_[x * n_ + y] != 0; }
  std::vector<std::vector<bool>> matrix() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> rel_;
};

/// Least upper bound of a nonempty subset, if it exists.
std::optional<std::size_t> sup(const FinitePoset& p, std::span<const std::size_t> subset);

/// x << y in the literal sequence reading: every nonempty S whose supremum
/// exists and is >= y contains some s >= x. Sequences in a finite poset are
/// replaced by their (finite) sets of values.
bool way_below_literal(const FinitePoset& p, std::size_t x, std::size_t y);

/// Same quantification restricted to directed subsets.
bool way_below_directed(const FinitePoset& p, std::size_t x, std::size_t y);

enum class WayBelowVariant { literal, directed };

/// {x : x << x} under the chosen reading.
std::vector<std::size_t> compact_elements(const FinitePoset& p,
                                          WayBelowVariant variant = WayBelowVariant::directed);

}  // namespace wbk
