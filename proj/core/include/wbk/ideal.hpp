#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wbk/pl_function.hpp"
#include "wbk/region.hpp"

namespace wbk {

/// Closed ideal C_0(U) of C(K): the functions vanishing outside the open
/// carrier U. Generators are kept when the ideal was built from them.
class Ideal {
 public:
  /// Throws PreconditionError unless the carrier is open in the ambient.
  Ideal(Space ambient, Region carrier);

  const Space& ambient() const { return ambient_; }
  const Region& carrier() const { return carrier_; }
  const std::optional<std::vector<PLFunction>>& generators() const { return generators_; }
  bool is_zero() const { return carrier_.empty(); }

  /// A function belongs to C_0(U) iff its open support lies in U.
  bool contains(const PLFunction& f) const;

 private:
  friend Ideal ideal_from_generators(std::vector<PLFunction> generators, const Space& k);

  Space ambient_;
  Region carrier_;
  std::optional<std::vector<PLFunction>> generators_;
};

/// F = K \ ∪ supp g_i, the common zero set. Every generator is checked to
/// vanish on F.
Region vanishing_locus(std::span<const PLFunction> generators, const Space& k);

/// Ideal generated by the functions; carrier = ∪ supp g_i.
Ideal ideal_from_generators(std::vector<PLFunction> generators, const Space& k);

/// min(1, dist(x, K \ U)) on a compact 1D ambient: a single generator whose
/// open support is exactly the carrier.
PLFunction canonical_generator(const Ideal& ideal);

struct Properness {
  bool carrier_is_not_ambient = false;
  bool locus_nonempty = false;
  /// Sum of generators has minimum 0 on K. Only available for 1D ambients
  /// or ideals that carry generators.
  std::optional<bool> sum_not_strictly_positive;
};

Properness properness(const Ideal& ideal);

/// I != C(K). All available characterizations are computed; throws if they
/// disagree.
bool is_proper(const Ideal& ideal);

bool ideal_compactly_contained(const Ideal& i, const Ideal& j);

/// I1 ⊗ I2 = C_0(U1 × U2) over K1 × K2.
Ideal ideal_tensor(const Ideal& i1, const Ideal& i2);

}  // namespace wbk
