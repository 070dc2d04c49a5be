#include "wbk/cuntz.hpp"

#include <random>

#include "wbk/error.hpp"

namespace wbk {

namespace {

Space product_space(const std::vector<PLFunction>& factors) {
  Region r = factors.front().space().region();
  for (std::size_t i = 1; i < factors.size(); ++i) r = product(r, factors[i].space().region());
  return Space(std::move(r));
}

void require_ambient(const CuntzClass& a, const CuntzClass& b, const Space& k, const char* what) {
  if (a.element().dim() != b.element().dim())
    throw PreconditionError(std::string(what) + ": elements have different tensor ranks");
  for (std::size_t i = 0; i < a.element().dim(); ++i) {
    if (a.element().factors()[i].space() != b.element().factors()[i].space())
      throw PreconditionError(std::string(what) + ": factor spaces differ");
  }
  if (a.ambient() != k) throw PreconditionError(std::string(what) + ": ambient space mismatch");
}

/// Positive constant used when a is zero: every c > 0 works vacuously.
Rational vacuous_constant(const PositiveElement& b) {
  const Rational s = b.sup();
  return sgn(s) > 0 ? Rational(s / 2) : Rational(1);
}

/// min of b over the closure of supp a in the factor's space; a nonzero.
Rational factor_floor(const PLFunction& a, const PLFunction& b) {
  return min_over(b, relative_closure(open_support(a), a.space()));
}

}  // namespace

// ---------------------------------------------------------------- elements

PositiveElement PositiveElement::scalar(PLFunction f) { return PositiveElement({std::move(f)}); }

PositiveElement PositiveElement::tensor(std::vector<PLFunction> factors) {
  if (factors.size() < 2) throw PreconditionError("a tensor needs at least two factors");
  return PositiveElement(std::move(factors));
}

Space PositiveElement::ambient() const { return product_space(factors_); }

Rational PositiveElement::eval(std::span<const Rational> point) const {
  if (point.size() != factors_.size()) throw DimensionMismatch("point dimension differs from tensor rank");
  Rational v = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) v *= factors_[i].eval(point[i]);
  return v;
}

bool PositiveElement::is_zero() const {
  for (const PLFunction& f : factors_)
    if (f.is_zero()) return true;
  return false;
}

Rational PositiveElement::sup() const {
  Rational v = 1;
  for (const PLFunction& f : factors_) v *= f.sup();
  return v;
}

PositiveElement tensor(const PositiveElement& f, const PositiveElement& g) {
  std::vector<PLFunction> fs = f.factors();
  fs.insert(fs.end(), g.factors().begin(), g.factors().end());
  return PositiveElement::tensor(std::move(fs));
}

Region support(const PositiveElement& e) {
  Region r = open_support(e.factors().front());
  for (std::size_t i = 1; i < e.factors().size(); ++i) r = product(r, open_support(e.factors()[i]));
  return r;
}

CuntzClass::CuntzClass(PositiveElement rep) : rep_(std::move(rep)), support_(wbk::support(rep_)) {}

// ---------------------------------------------------------------- deciders

bool cuntz_leq(const CuntzClass& a, const CuntzClass& b) {
  require_ambient(a, b, b.ambient(), "cuntz_leq");
  return is_subset(a.support(), b.support());
}

bool tensor_leq_lemma(const CuntzClass& a1, const CuntzClass& b1, const CuntzClass& a2,
                      const CuntzClass& b2) {
  if (!cuntz_leq(a1, b1) || !cuntz_leq(a2, b2))
    throw PreconditionError("tensor_leq_lemma: factor comparison [a_i] <= [b_i] fails");
  return cuntz_leq(CuntzClass(tensor(a1.element(), a2.element())),
                   CuntzClass(tensor(b1.element(), b2.element())));
}

bool way_below_support(const CuntzClass& a, const CuntzClass& b, const Space& k) {
  require_ambient(a, b, k, "way_below_support");
  return is_subset(relative_closure(a.support(), k), b.support());
}

std::optional<Rational> gp_constant(const CuntzClass& a, const CuntzClass& b, const Space& k) {
  require_ambient(a, b, k, "gp_constant");
  if (a.element().is_zero()) return vacuous_constant(b.element());
  Rational c = 1;
  const auto& af = a.element().factors();
  const auto& bf = b.element().factors();
  for (std::size_t i = 0; i < af.size(); ++i) {
    const Rational floor = factor_floor(af[i], bf[i]);
    if (sgn(floor) <= 0) return std::nullopt;
    c *= floor / 2;
  }
  c.canonicalize();
  return c;
}

std::optional<Rational> way_below_epsilon(const CuntzClass& a, const CuntzClass& b, const Space& k) {
  require_ambient(a, b, k, "way_below_epsilon");
  if (a.element().is_zero()) return vacuous_constant(b.element());
  Rational eps = 1;
  const auto& af = a.element().factors();
  const auto& bf = b.element().factors();
  for (std::size_t i = 0; i < af.size(); ++i) {
    const Rational floor = factor_floor(af[i], bf[i]);
    if (sgn(floor) <= 0) return std::nullopt;
    const Rational e = floor / 2;
    if (!is_subset(open_support(af[i]), superlevel(bf[i], e)))
      throw Error("internal: factor epsilon failed its superlevel containment");
    eps *= e;
  }
  eps.canonicalize();
  return eps;
}

bool is_compact_class(const CuntzClass& a, const Space& k) {
  const bool by_closure = way_below_support(a, a, k);
  bool by_level = true;
  if (!a.element().is_zero()) {
    Region levels(1);
    bool first = true;
    for (const PLFunction& f : a.element().factors()) {
      const Rational floor = factor_floor(f, f);
      if (sgn(floor) <= 0) {
        by_level = false;
        break;
      }
      Region s = superlevel(f, floor / 2);
      levels = first ? std::move(s) : product(levels, s);
      first = false;
    }
    by_level = by_level && levels == a.support();
  }
  if (by_closure != by_level) throw Error("internal: compactness checks disagree");
  return by_closure;
}

// ---------------------------------------------------------------- inner products

ProductFactor::ProductFactor(PLFunction f, PLFunction g) : f_(std::move(f)), g_(std::move(g)) {
  if (f_.space() != g_.space()) throw PreconditionError("module_inner: factor spaces differ");
}

Region ProductFactor::support() const { return intersect(open_support(f_), open_support(g_)); }

Rational InnerProduct::eval(std::span<const Rational> point) const {
  if (point.size() != factors_.size()) throw DimensionMismatch("point dimension differs from tensor rank");
  Rational v = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) v *= factors_[i].eval(point[i]);
  return v;
}

Region InnerProduct::support() const {
  Region r = factors_.front().support();
  for (std::size_t i = 1; i < factors_.size(); ++i) r = product(r, factors_[i].support());
  return r;
}

InnerProduct module_inner(const PositiveElement& s, const PositiveElement& t) {
  if (s.dim() != t.dim()) throw PreconditionError("module_inner: tensor shapes differ");
  std::vector<ProductFactor> fs;
  for (std::size_t i = 0; i < s.dim(); ++i) fs.emplace_back(s.factors()[i], t.factors()[i]);
  return InnerProduct(std::move(fs));
}

bool tensor_witness_check(const PLFunction& e1, const Region& u1, const Region& v1,
                          const PLFunction& e2, const Region& u2, const Region& v2,
                          const Space& k1, const Space& k2) {
  if (e1.space() != k1 || e2.space() != k2)
    throw PreconditionError("tensor_witness_check: witness does not live on its ambient");
  if (e1.sup() > 1 || e2.sup() > 1) return false;
  const Region c1 = relative_closure(u1, k1);
  const Region c2 = relative_closure(u2, k2);
  if (!c1.empty() && !c2.empty() && min_over(e1, c1) * min_over(e2, c2) != 1) return false;
  const Space k = product(k1, k2);
  const Region reach = relative_closure(product(open_support(e1), open_support(e2)), k);
  return is_compact(reach) && is_subset(reach, product(v1, v2));
}

// ---------------------------------------------------------------- Theorem 4.2

namespace {

Rational sample_point(const Region& r, std::mt19937_64& rng) {
  const auto& boxes = r.boxes();
  const Box& b = boxes[rng() % boxes.size()];
  const Rational& lo = b.iv[0].lo.value();
  const Rational& hi = b.iv[0].hi.value();
  if (lo == hi) return lo;
  Rational x = lo + (hi - lo) * Rational(static_cast<long>(rng() % 1025), 1024);
  x.canonicalize();
  return x;
}

ContainmentFact fact(std::string label, Region sub, Region super) {
  const bool holds = is_subset(sub, super);
  return ContainmentFact{std::move(label), std::move(sub), std::move(super), holds};
}

}  // namespace

WayBelowCertificate theorem_4_2(const CuntzClass& a1, const CuntzClass& b1, const CuntzClass& a2,
                                const CuntzClass& b2, const Space& k1, const Space& k2,
                                const AuditOptions& audit) {
  for (const CuntzClass* c : {&a1, &b1, &a2, &b2})
    if (c->element().is_tensor()) throw PreconditionError("theorem_4_2 takes scalar factors");
  require_ambient(a1, b1, k1, "theorem_4_2");
  require_ambient(a2, b2, k2, "theorem_4_2");
  if (b1.element().is_zero() || b2.element().is_zero())
    throw PreconditionError("theorem_4_2: degenerate zero b_i");

  WayBelowCertificate cert;
  cert.audit.seed = audit.seed;
  const CuntzClass* as[2] = {&a1, &a2};
  const CuntzClass* bs[2] = {&b1, &b2};
  const Space* ks[2] = {&k1, &k2};
  std::optional<Rational>* eps[2] = {&cert.eps1, &cert.eps2};
  std::optional<Rational>* cs[2] = {&cert.c1, &cert.c2};
  std::vector<Region> levels;

  for (int i = 0; i < 2; ++i) {
    const std::string idx = std::to_string(i + 1);
    const bool wb = way_below_support(*as[i], *bs[i], *ks[i]);
    *eps[i] = way_below_epsilon(*as[i], *bs[i], *ks[i]);
    *cs[i] = gp_constant(*as[i], *bs[i], *ks[i]);
    if (wb != eps[i]->has_value() || wb != cs[i]->has_value())
      throw Error("internal: way-below deciders disagree on factor " + idx);
    cert.facts.push_back(fact("closure(supp a" + idx + ") in supp b" + idx,
                              relative_closure(as[i]->support(), *ks[i]), bs[i]->support()));
    if (!wb) {
      cert.verdict = false;
      cert.reason = "factor " + idx + " not compactly contained";
      return cert;
    }
    levels.push_back(superlevel(bs[i]->element().factors()[0], **eps[i]));
    cert.facts.push_back(fact("supp a" + idx + " in {b" + idx + " > eps" + idx + "}", as[i]->support(),
                              levels.back()));
  }
  cert.eps = *cert.eps1 * *cert.eps2;
  cert.c = *cert.c1 * *cert.c2;
  cert.eps->canonicalize();
  cert.c->canonicalize();

  // Link 1: [a1 ⊗ a2] <= [(b1 - eps1)_+ ⊗ (b2 - eps2)_+].
  const Region tensor_support = support(tensor(a1.element(), a2.element()));
  const Region level_box = product(levels[0], levels[1]);
  cert.facts.push_back(fact("supp(a1 x a2) in {b1 > eps1} x {b2 > eps2}", tensor_support, level_box));

  // Link 2 by factorization: b_i > eps_i on {b_i > eps_i} and b_i >= eps_i on
  // its closure, so b1 b2 > eps1 eps2 on the product of the level sets.
  bool link2 = true;
  for (int i = 0; i < 2; ++i) {
    const PLFunction& b = bs[i]->element().factors()[0];
    if (!levels[i].empty() && min_over(b, closure(levels[i])) < **eps[i]) link2 = false;
  }

  std::mt19937_64 rng(audit.seed);
  const Region& k1r = k1.region();
  const Region& k2r = k2.region();
  const Region near1 = a1.support().empty() ? k1r : relative_closure(a1.support(), k1);
  const Region near2 = a2.support().empty() ? k2r : relative_closure(a2.support(), k2);
  const PLFunction& fa1 = a1.element().factors()[0];
  const PLFunction& fa2 = a2.element().factors()[0];
  const PLFunction& fb1 = b1.element().factors()[0];
  const PLFunction& fb2 = b2.element().factors()[0];
  for (std::size_t s = 0; s < audit.samples; ++s) {
    const Rational x = sample_point(rng() % 2 ? near1 : k1r, rng);
    const Rational y = sample_point(rng() % 2 ? near2 : k2r, rng);
    const Rational h = fa1.eval(x) * fa2.eval(y);
    const Rational kv = fb1.eval(x) * fb2.eval(y);
    const bool in_levels = levels[0].contains(std::span<const Rational>(&x, 1)) &&
                           levels[1].contains(std::span<const Rational>(&y, 1));
    const Rational pt[2] = {x, y};
    const bool positive = sgn(h) > 0;
    bool bad = false;
    bad = bad || (positive && !in_levels);
    bad = bad || (in_levels && !(kv > *cert.eps));
    bad = bad || (positive && !(kv > *cert.c));
    bad = bad || (positive != tensor_support.contains(pt));
    cert.audit.hits += positive ? 1 : 0;
    cert.audit.violations += bad ? 1 : 0;
  }
  cert.audit.samples = audit.samples;

  bool facts_hold = true;
  for (const ContainmentFact& f : cert.facts) facts_hold = facts_hold && f.holds;
  cert.verdict = facts_hold && link2 && cert.audit.violations == 0;
  if (!facts_hold) cert.reason = "a recorded containment fails";
  else if (!link2) cert.reason = "factorization lemma fails";
  else if (cert.audit.violations) cert.reason = "sampling audit found violations";
  else cert.reason = "[a1 x a2] << [b1 x b2] with eps = eps1 eps2";
  return cert;
}

bool recheck(const WayBelowCertificate& cert) {
  for (const ContainmentFact& f : cert.facts)
    if (is_subset(f.subset, f.superset) != f.holds) return false;
  if (!cert.verdict) return true;
  if (!cert.eps || !cert.eps1 || !cert.eps2 || !cert.c || !cert.c1 || !cert.c2) return false;
  if (*cert.eps != *cert.eps1 * *cert.eps2) return false;
  if (*cert.c != *cert.c1 * *cert.c2) return false;
  for (const ContainmentFact& f : cert.facts)
    if (!f.holds) return false;
  return cert.audit.violations == 0;
}

}  // namespace wbk
