#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wbk/pl_function.hpp"
#include "wbk/region.hpp"

namespace wbk {

/// A positive element of C(K) in the commutative model: either a single
/// PL function, or an elementary tensor h(x_1, ..., x_k) = f_1(x_1) ... f_k(x_k)
/// on the product of the factor spaces.
class PositiveElement {
 public:
  static PositiveElement scalar(PLFunction f);
  static PositiveElement tensor(std::vector<PLFunction> factors);

  bool is_tensor() const { return factors_.size() > 1; }
  const std::vector<PLFunction>& factors() const { return factors_; }
  /// Product of the factor spaces.
  Space ambient() const;
  std::size_t dim() const { return factors_.size(); }

  Rational eval(std::span<const Rational> point) const;
  bool is_zero() const;
  Rational sup() const;

  friend bool operator==(const PositiveElement&, const PositiveElement&) = default;

 private:
  explicit PositiveElement(std::vector<PLFunction> factors) : factors_(std::move(factors)) {}
  std::vector<PLFunction> factors_;
};

/// f ⊗ g, flattening nested tensors.
PositiveElement tensor(const PositiveElement& f, const PositiveElement& g);

/// Open support. For tensors this is the product of the factor supports.
Region support(const PositiveElement& e);

/// Cuntz class [a], represented by an element and its open support.
class CuntzClass {
 public:
  explicit CuntzClass(PositiveElement rep);

  const PositiveElement& element() const { return rep_; }
  const Region& support() const { return support_; }
  Space ambient() const { return rep_.ambient(); }

 private:
  PositiveElement rep_;
  Region support_;
};

/// [a] <= [b] iff supp a ⊆ supp b.
bool cuntz_leq(const CuntzClass& a, const CuntzClass& b);

/// [a1] <= [b1] and [a2] <= [b2] imply [a1 ⊗ a2] <= [b1 ⊗ b2]; returns the
/// tensor comparison. Throws PreconditionError when a factor comparison fails.
bool tensor_leq_lemma(const CuntzClass& a1, const CuntzClass& b1, const CuntzClass& a2,
                      const CuntzClass& b2);

/// [a] << [b] decided by closure(supp a) ⊆ supp b in K.
bool way_below_support(const CuntzClass& a, const CuntzClass& b, const Space& k);

/// Constant c > 0 with a(x) > 0 => b(x) > c, or nullopt when none exists.
/// Scalar case: half the minimum of b over the closure of supp a. Tensor
/// case: the product of the factor constants.
std::optional<Rational> gp_constant(const CuntzClass& a, const CuntzClass& b, const Space& k);

/// eps > 0 with [a] <= [(b - eps)_+], i.e. supp a ⊆ {b > eps}, or nullopt.
/// Tensor case: product of factor epsilons, certified factor by factor.
std::optional<Rational> way_below_epsilon(const CuntzClass& a, const CuntzClass& b, const Space& k);

/// [a] << [a]. Runs both the closure test and the eps-level test and throws
/// if they disagree.
bool is_compact_class(const CuntzClass& a, const Space& k);

/// One factor of a module inner product: the pointwise product f * g of two
/// PL functions on the same space (piecewise quadratic).
class ProductFactor {
 public:
  ProductFactor(PLFunction f, PLFunction g);
  const PLFunction& left() const { return f_; }
  const PLFunction& right() const { return g_; }
  Rational eval(const Rational& x) const { return f_.eval(x) * g_.eval(x); }
  /// supp f ∩ supp g.
  Region support() const;

 private:
  PLFunction f_;
  PLFunction g_;
};

/// <f_1 ⊗ f_2, g_1 ⊗ g_2> = (f_1 g_1) ⊗ (f_2 g_2) in the real commutative model.
class InnerProduct {
 public:
  explicit InnerProduct(std::vector<ProductFactor> factors) : factors_(std::move(factors)) {}
  const std::vector<ProductFactor>& factors() const { return factors_; }
  Rational eval(std::span<const Rational> point) const;
  Region support() const;
  bool is_zero() const { return support().empty(); }

 private:
  std::vector<ProductFactor> factors_;
};

InnerProduct module_inner(const PositiveElement& s, const PositiveElement& t);

/// Checks that e1 ⊗ e2 witnesses U1 × U2 ⊂⊂ V1 × V2 in K1 × K2: values in
/// [0, 1], product equal to 1 on the closure of U1 × U2, and support with
/// compact closure inside V1 × V2. False means a theorem violation.
bool tensor_witness_check(const PLFunction& e1, const Region& u1, const Region& v1,
                          const PLFunction& e2, const Region& u2, const Region& v2,
                          const Space& k1, const Space& k2);

struct ContainmentFact {
  std::string label;
  Region subset;
  Region superset;
  bool holds = false;
};

struct SamplingAudit {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t hits = 0;  // samples inside supp(a1 ⊗ a2)
  std::size_t violations = 0;
};

struct WayBelowCertificate {
  bool verdict = false;
  std::string reason;
  std::optional<Rational> eps1, eps2, eps;
  std::optional<Rational> c1, c2, c;
  std::vector<ContainmentFact> facts;
  SamplingAudit audit;
};

struct AuditOptions {
  std::uint64_t seed = 0x5eed;
  std::size_t samples = 10000;
};

/// Certificate for [a1] << [b1], [a2] << [b2] => [a1 ⊗ a2] << [b1 ⊗ b2]:
/// factor epsilons and constants, the two links of the domination chain
/// [a1⊗a2] <= [(b1-eps1)_+ ⊗ (b2-eps2)_+] <= [(b1⊗b2 - eps1 eps2)_+], and a
/// sampling audit of the membership implications on K1 × K2.
/// Throws PreconditionError on a zero b_i or mismatched spaces.
WayBelowCertificate theorem_4_2(const CuntzClass& a1, const CuntzClass& b1, const CuntzClass& a2,
                                const CuntzClass& b2, const Space& k1, const Space& k2,
                                const AuditOptions& audit = {});

/// Re-verifies the arithmetic identities and every recorded containment.
bool recheck(const WayBelowCertificate& cert);

}  // namespace wbk
