#include "wbk/ideal.hpp"

#include "wbk/error.hpp"

namespace wbk {

Ideal::Ideal(Space ambient, Region carrier) : ambient_(std::move(ambient)), carrier_(std::move(carrier)) {
  if (!is_open_in(carrier_, ambient_)) throw PreconditionError("ideal carrier is not open in its ambient");
}

bool Ideal::contains(const PLFunction& f) const {
  if (f.space() != ambient_) throw PreconditionError("function does not live on the ideal's ambient");
  return is_subset(open_support(f), carrier_);
}

Region vanishing_locus(std::span<const PLFunction> generators, const Space& k) {
  Region supports(k.dim());
  for (const PLFunction& g : generators) {
    if (g.space() != k) throw PreconditionError("vanishing_locus: generator lives on another space");
    supports = unite(supports, open_support(g));
  }
  Region locus = subtract(k.region(), supports);
  if (!locus.empty()) {
    for (const PLFunction& g : generators)
      if (sgn(max_over(g, locus)) != 0) throw Error("internal: generator does not vanish on its locus");
  }
  return locus;
}

Ideal ideal_from_generators(std::vector<PLFunction> generators, const Space& k) {
  Region carrier = subtract(k.region(), vanishing_locus(generators, k));
  Ideal ideal(k, std::move(carrier));
  ideal.generators_ = std::move(generators);
  return ideal;
}

PLFunction canonical_generator(const Ideal& ideal) {
  const Space& k = ideal.ambient();
  if (k.dim() != 1 || !k.compact()) throw PreconditionError("canonical_generator needs a compact 1D ambient");
  const Region locus = subtract(k.region(), ideal.carrier());
  if (locus.empty()) return PLFunction::constant(k, Rational(1));
  if (ideal.carrier().empty()) return PLFunction::zero(k);
  return distance_ramp(k, locus, Rational(1));
}

Properness properness(const Ideal& ideal) {
  const Space& k = ideal.ambient();
  Properness p;
  p.carrier_is_not_ambient = ideal.carrier() != k.region();
  p.locus_nonempty = !subtract(k.region(), ideal.carrier()).empty();
  if (ideal.generators()) {
    const PLFunction s = sum(*ideal.generators(), k);
    p.sum_not_strictly_positive = sgn(min_over(s, k.region())) == 0;
  } else if (k.dim() == 1 && k.compact()) {
    p.sum_not_strictly_positive = sgn(min_over(canonical_generator(ideal), k.region())) == 0;
  }
  return p;
}

bool is_proper(const Ideal& ideal) {
  const Properness p = properness(ideal);
  if (p.carrier_is_not_ambient != p.locus_nonempty ||
      (p.sum_not_strictly_positive && *p.sum_not_strictly_positive != p.locus_nonempty))
    throw Error("internal: properness characterizations disagree");
  return p.locus_nonempty;
}

bool ideal_compactly_contained(const Ideal& i, const Ideal& j) {
  if (i.ambient() != j.ambient()) throw PreconditionError("ideals live on different ambients");
  return compactly_contained(i.carrier(), j.carrier(), i.ambient());
}

Ideal ideal_tensor(const Ideal& i1, const Ideal& i2) {
  return Ideal(product(i1.ambient(), i2.ambient()), product(i1.carrier(), i2.carrier()));
}

}  // namespace wbk
