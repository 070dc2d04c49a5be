#include "runners.hpp"

#include <algorithm>
#include <set>

#include "wbk/cuntz.hpp"
#include "wbk/error.hpp"
#include "wbk/ideal.hpp"
#include "wbk/json.hpp"

namespace wbk::app {

using io::Json;

namespace {

constexpr int kRejectionCap = 64;

struct Triple {
  Region u, v;
  Space k;
};

Json encode(const Triple& t) {
  return {{"U", io::encode(t.u)}, {"V", io::encode(t.v)}, {"K", io::encode(t.k.region())}};
}

/// Nonempty V open in K, by rejection; falls back to V = K.
std::pair<Space, Region> ambient_and_v(Gen& g, std::size_t dim) {
  Space k = random_compact_space(g, dim);
  for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
    Region v = random_open_in(g, k);
    if (!v.empty()) return {std::move(k), std::move(v)};
  }
  Region whole = k.region();
  return {std::move(k), std::move(whole)};
}

/// Nonempty U ⊂⊂ V in K by rejection; falls back to U = ∅, which always
/// qualifies.
Triple positive_triple(Gen& g, std::size_t dim) {
  auto [k, v] = ambient_and_v(g, dim);
  for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
    Region u = random_inner(g, v, k);
    if (!u.empty() && compactly_contained(u, v, k)) return {std::move(u), std::move(v), std::move(k)};
  }
  return {Region(dim), std::move(v), std::move(k)};
}

/// U ⊆ V open in K with U not compactly contained in V.
Triple negative_triple(Gen& g, std::size_t dim) {
  for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
    auto [k, v] = ambient_and_v(g, dim);
    Region u = g.coin() ? v : intersect(v, random_open_in(g, k));
    if (!compactly_contained(u, v, k)) return {std::move(u), std::move(v), std::move(k)};
  }
  // Shrinkage fallback: the smallest non-example.
  Box unit;
  unit.iv.assign(dim, Interval::closed(0, 1));
  Box open_unit;
  open_unit.iv.assign(dim, Interval::open(Scalar(Rational(0)), Scalar(Rational(1))));
  return {Region::from_box(open_unit), Region::from_box(open_unit), Space(Region::from_box(unit))};
}

Outcome fail(Outcome o, std::string why) {
  o.pass = false;
  if (o.message.empty()) o.message = std::move(why);
  return o;
}

PLFunction nonzero_pl(Gen& g, const Space& k) {
  for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
    PLFunction f = random_pl(g, k);
    if (!f.is_zero()) return f;
  }
  return PLFunction::constant(k, 1);
}

CuntzClass cls(const PLFunction& f) { return CuntzClass(PositiveElement::scalar(f)); }

/// Finite endpoints of the boxes of a 1D region.
std::set<Rational> endpoints(const Region& r) {
  std::set<Rational> out;
  for (const Box& b : r.boxes()) {
    if (b.iv[0].lo.is_finite()) out.insert(b.iv[0].lo.value());
    if (b.iv[0].hi.is_finite()) out.insert(b.iv[0].hi.value());
  }
  return out;
}

/// Breakpoints of both functions plus midpoints of consecutive ones.
std::vector<Rational> probe_points(const PLFunction& a, const PLFunction& b) {
  std::vector<Rational> xs = a.breakpoints();
  xs.insert(xs.end(), b.breakpoints().begin(), b.breakpoints().end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Rational mid = (xs[i] + xs[i + 1]) / 2;
    mid.canonicalize();
    const Rational pt[1] = {mid};
    if (a.space().region().contains(pt)) xs.push_back(mid);
  }
  return xs;
}

}  // namespace

Outcome run_prop32(Gen& g) {
  const std::size_t d1 = g.between(1, 2), d2 = g.between(1, 2);
  const Triple t1 = positive_triple(g, d1);
  const Triple t2 = positive_triple(g, d2);
  Outcome o;
  o.instance = {{"kind", "prop32"}, {"factors", Json::array({encode(t1), encode(t2)})}};
  o.tallies["nonempty_U"] = (!t1.u.empty() && !t2.u.empty()) ? 1 : 0;
  o.tallies["product_dim_" + std::to_string(d1 + d2)] = 1;

  const Region u = product(t1.u, t2.u), v = product(t1.v, t2.v);
  const Space k = product(t1.k, t2.k);
  if (!compactly_contained(u, v, k)) return fail(std::move(o), "U1 x U2 not compactly contained in V1 x V2");
  if (closure(u) != product(closure(t1.u), closure(t2.u)))
    return fail(std::move(o), "closure of a product differs from the product of closures");
  if (relative_closure(u, k) != product(relative_closure(t1.u, t1.k), relative_closure(t2.u, t2.k)))
    return fail(std::move(o), "relative closure does not factor");
  const Ideal i = ideal_tensor(Ideal(t1.k, t1.u), Ideal(t2.k, t2.u));
  const Ideal j = ideal_tensor(Ideal(t1.k, t1.v), Ideal(t2.k, t2.v));
  if (!ideal_compactly_contained(i, j)) return fail(std::move(o), "I1 x I2 not compactly contained in J1 x J2");
  return o;
}

Outcome run_thm41(Gen& g, bool positive) {
  Outcome o;
  if (positive) {
    const Triple t1 = positive_triple(g, 1);
    const Triple t2 = positive_triple(g, 1);
    o.instance = {{"kind", "thm41"}, {"positive", true}, {"factors", Json::array({encode(t1), encode(t2)})}};
    o.tallies["positive"] = 1;
    PLFunction e1 = PLFunction::zero(t1.k), e2 = PLFunction::zero(t2.k);
    try {
      e1 = urysohn(t1.u, t1.v, t1.k);
      e2 = urysohn(t2.u, t2.v, t2.k);
    } catch (const NotCompactlyContained& e) {
      return fail(std::move(o), std::string("urysohn refused a compactly contained pair: ") + e.what());
    }
    if (!tensor_witness_check(e1, t1.u, t1.v, e2, t2.u, t2.v, t1.k, t2.k))
      return fail(std::move(o), "tensor witness check failed");
    return o;
  }
  const Triple t = negative_triple(g, 1);
  o.instance = {{"kind", "thm41"}, {"positive", false}, {"factors", Json::array({encode(t)})}};
  o.tallies["negative"] = 1;
  if (compactly_contained(t.u, t.v, t.k)) return fail(std::move(o), "negative instance is compactly contained");
  try {
    urysohn(t.u, t.v, t.k);
  } catch (const NotCompactlyContained&) {
    return o;
  }
  return fail(std::move(o), "urysohn produced a witness without compact containment");
}

Outcome run_thm42(Gen& g, std::uint64_t audit_seed) {
  const Space k1 = random_compact_space(g, 1, 2);
  const Space k2 = random_compact_space(g, 1, 2);
  const PLFunction b1 = nonzero_pl(g, k1), b2 = nonzero_pl(g, k2);
  const PLFunction a1 = random_way_below(g, b1), a2 = random_way_below(g, b2);
  Outcome o;
  o.instance = {{"kind", "thm42"},
                {"a1", io::encode(a1)},
                {"b1", io::encode(b1)},
                {"a2", io::encode(a2)},
                {"b2", io::encode(b2)},
                {"audit_seed", audit_seed}};
  if (!way_below_support(cls(a1), cls(b1), k1) || !way_below_support(cls(a2), cls(b2), k2))
    return fail(std::move(o), "generator produced a pair that is not way-below");
  const WayBelowCertificate cert = theorem_4_2(cls(a1), cls(b1), cls(a2), cls(b2), k1, k2, {audit_seed, 10000});
  o.tallies["zero_factor"] = (a1.is_zero() || a2.is_zero()) ? 1 : 0;
  o.tallies["audit_samples"] = static_cast<long>(cert.audit.samples);
  o.tallies["audit_hits"] = static_cast<long>(cert.audit.hits);
  o.tallies["audit_violations"] = static_cast<long>(cert.audit.violations);
  o.instance["certificate"] = io::encode(cert);
  if (!cert.verdict) return fail(std::move(o), "certificate rejected: " + cert.reason);
  if (!cert.eps || *cert.eps != *cert.eps1 * *cert.eps2) return fail(std::move(o), "eps != eps1 eps2");
  if (cert.audit.samples != 10000 || cert.audit.violations != 0) return fail(std::move(o), "sampling audit failed");
  if (!recheck(cert)) return fail(std::move(o), "certificate does not recheck");
  return o;
}

Outcome run_appendix_a(Gen& g) {
  const Space k = random_compact_space(g, 1);
  std::vector<PLFunction> gens;
  const std::size_t n = g.between(0, 4);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(random_pl(g, k));
  Outcome o;
  Json gj = Json::array();
  for (const PLFunction& f : gens) gj.push_back(io::encode(f));
  o.instance = {{"kind", "appendixA"}, {"ambient", io::encode(k.region())}, {"generators", gj}};

  const Region f = vanishing_locus(gens, k);
  const Ideal ideal = ideal_from_generators(gens, k);
  const Properness p = properness(ideal);
  if (!p.sum_not_strictly_positive) return fail(std::move(o), "sum characterization unavailable");
  if (p.carrier_is_not_ambient != p.locus_nonempty || p.locus_nonempty != *p.sum_not_strictly_positive)
    return fail(std::move(o), "properness characterizations disagree");
  if (f != subtract(k.region(), ideal.carrier())) return fail(std::move(o), "vanishing locus is not K minus the carrier");
  if (!f.empty()) {
    for (const PLFunction& gen : gens) {
      if (max_over(gen, f) != 0) return fail(std::move(o), "a generator is nonzero on F");
      for (const Rational& x : endpoints(f))
        if (gen.eval(x) != 0) return fail(std::move(o), "a generator is nonzero at an endpoint of F");
    }
  }
  o.tallies[p.locus_nonempty ? "proper" : "not_proper"] = 1;
  return o;
}

Outcome run_exhaustion(Gen& g) {
  const std::size_t dim = g.chance(1, 3) ? 2 : 1;
  // Half the instances are built to be compactly contained; the rest mix
  // random sub-regions of V with U = V.
  Triple t = g.coin() ? positive_triple(g, dim) : [&] {
    auto [k, v] = ambient_and_v(g, dim);
    Region u = g.coin() ? intersect(v, random_open_in(g, k)) : v;
    return Triple{std::move(u), std::move(v), std::move(k)};
  }();
  const Region& u = t.u;
  const Region& v = t.v;
  const Space& k = t.k;
  Outcome o;
  o.instance = {{"kind", "region-ll"}, {"U", io::encode(u)}, {"V", io::encode(v)}, {"K", io::encode(k.region())}};
  const ExhaustionResult r = exhaustion_consistency(u, v, k, 64);
  o.tallies[r.compactly_contained ? "contained" : "not_contained"] = 1;
  if (r.capture_index) o.tallies["capture_index_sum"] = *r.capture_index;
  if (!r.chain_valid) return fail(std::move(o), "exhaustion chain is not increasing inside V");
  if (!r.consistent) return fail(std::move(o), "finite capture disagrees with compact containment");
  return o;
}

Outcome run_agreement(Gen& g, bool adversarial) {
  const Space k = random_compact_space(g, 1);
  PLFunction b = nonzero_pl(g, k);
  PLFunction a = PLFunction::zero(k);
  bool shares_endpoint = false;
  if (adversarial) {
    // Clip b by a tent centred on an endpoint of supp b.
    const std::set<Rational> ends = endpoints(open_support(b));
    std::vector<Rational> pool(ends.begin(), ends.end());
    const Rational e = pool[g.below(pool.size())];
    a = pointwise_min(b, PLFunction::tent(k, e, g.grid(1, 8), g.grid(1, 16)));
    shares_endpoint = endpoints(open_support(a)).count(e) > 0;
  } else {
    switch (g.below(4)) {
      case 0: a = random_pl(g, k); break;
      case 1: a = random_way_below(g, b); break;
      case 2: a = b; break;
      default: a = pointwise_min(random_pl(g, k), b); break;
    }
  }
  Outcome o;
  o.instance = {{"kind", "cuntz-ll"},
                {"a", io::encode(PositiveElement::scalar(a))},
                {"b", io::encode(PositiveElement::scalar(b))},
                {"adversarial", adversarial}};
  if (adversarial) {
    if (!shares_endpoint) return fail(std::move(o), "adversarial pair does not share a support endpoint");
    o.tallies["adversarial"] = 1;
  }
  const bool wb = way_below_support(cls(a), cls(b), k);
  const auto gp = gp_constant(cls(a), cls(b), k);
  const auto eps = way_below_epsilon(cls(a), cls(b), k);
  o.tallies[wb ? "way_below" : "not_way_below"] = 1;
  if (wb != gp.has_value() || wb != eps.has_value()) return fail(std::move(o), "deciders disagree");
  if (wb) {
    if (!is_subset(open_support(a), superlevel(b, *eps))) return fail(std::move(o), "eps fails supp a ⊆ {b > eps}");
    for (const Rational& x : probe_points(a, b))
      if (sgn(a.eval(x)) > 0 && !(b.eval(x) > *gp)) return fail(std::move(o), "GP constant violated at a probe");
  } else if (!a.is_zero() && min_over(b, relative_closure(open_support(a), k)) != 0) {
    return fail(std::move(o), "negative verdict without a zero of b on cl supp a");
  }
  return o;
}

}  // namespace wbk::app
