#include "wbk/app/check.hpp"

namespace wbk::app {

using io::Json;

namespace {

Json optional_rational(const std::optional<Rational>& r) { return r ? io::encode(*r) : Json(nullptr); }

CheckResult check_region(const RegionInstance& r) {
  CheckResult out;
  out.holds = compactly_contained(r.u, r.v, r.k);
  const Region cl = relative_closure(r.u, r.k);
  Json cert = {{"relation", "U << V in K"},
               {"closure_of_U", io::encode(cl)},
               {"closure_compact", is_compact(cl)},
               {"closure_inside_V", is_subset(cl, r.v)}};
  if (r.k.compact()) {
    const ExhaustionResult ex = exhaustion_consistency(r.u, r.v, r.k, 64);
    cert["exhaustion"] = {{"stages", 64},
                          {"capture_index", ex.capture_index ? Json(*ex.capture_index) : Json(nullptr)},
                          {"consistent", ex.consistent}};
  }
  if (out.holds && r.k.dim() == 1) {
    cert["witness"] = io::encode(urysohn(r.u, r.v, r.k));
  }
  out.certificate = std::move(cert);
  return out;
}

CheckResult check_cuntz(const CuntzInstance& c) {
  const CuntzClass a(c.a), b(c.b);
  const Space k = c.b.ambient();
  CheckResult out;
  out.holds = way_below_support(a, b, k);
  const auto gp = gp_constant(a, b, k);
  const auto eps = way_below_epsilon(a, b, k);
  if (out.holds != gp.has_value() || out.holds != eps.has_value())
    throw Error("internal: way-below deciders disagree");
  Json cert = {{"relation", "[a] << [b]"},
               {"leq", cuntz_leq(a, b)},
               {"support_a", io::encode(a.support())},
               {"support_b", io::encode(b.support())},
               {"closure_of_support_a", io::encode(relative_closure(a.support(), k))},
               {"gp_constant", optional_rational(gp)},
               {"eps", optional_rational(eps)}};
  if (eps && !c.a.is_tensor()) cert["superlevel_b_eps"] = io::encode(superlevel(c.b.factors()[0], *eps));
  if (c.a.dim() == 2 && !c.b.factors()[0].is_zero() && !c.b.factors()[1].is_zero()) {
    const auto cls = [](const PLFunction& f) { return CuntzClass(PositiveElement::scalar(f)); };
    const auto& af = c.a.factors();
    const auto& bf = c.b.factors();
    const WayBelowCertificate t = theorem_4_2(cls(af[0]), cls(bf[0]), cls(af[1]), cls(bf[1]), bf[0].space(), bf[1].space());
    if (t.verdict && !out.holds) throw Error("internal: tensor certificate contradicts the support decider");
    cert["tensor_certificate"] = io::encode(t);
  }
  out.certificate = std::move(cert);
  return out;
}

CheckResult check_poset(const PosetInstance& p) {
  const bool literal = way_below_literal(p.poset, p.x, p.y);
  const bool directed = way_below_directed(p.poset, p.x, p.y);
  CheckResult out;
  out.holds = directed;
  out.certificate = {{"relation", "x << y"},
                     {"leq", p.poset.leq(p.x, p.y)},
                     {"literal", literal},
                     {"directed", directed}};
  return out;
}

CheckResult check_ideal(const IdealInstance& i) {
  CheckResult out;
  out.holds = ideal_compactly_contained(i.i, i.j);
  const Properness pi = properness(i.i);
  out.certificate = {{"relation", "I << J"},
                     {"carrier_I", io::encode(i.i.carrier())},
                     {"carrier_J", io::encode(i.j.carrier())},
                     {"closure_of_carrier_I", io::encode(relative_closure(i.i.carrier(), i.i.ambient()))},
                     {"I_proper", pi.carrier_is_not_ambient},
                     {"vanishing_locus_I", io::encode(subtract(i.i.ambient().region(), i.i.carrier()))}};
  return out;
}

}  // namespace

std::optional<Relation> parse_relation(std::string_view name) {
  if (name == "region-ll") return Relation::region;
  if (name == "cuntz-ll") return Relation::cuntz;
  if (name == "poset-ll") return Relation::poset;
  if (name == "ideal-ll") return Relation::ideal;
  return std::nullopt;
}

CheckResult run_check(Relation rel, const Instance& inst) {
  static constexpr std::size_t expected[] = {0, 1, 2, 3};
  if (inst.index() != expected[static_cast<int>(rel)])
    throw UsageError("instance kind '" + std::string(kind_of(inst)) + "' does not match the subcommand");
  switch (rel) {
    case Relation::region: return check_region(std::get<RegionInstance>(inst));
    case Relation::cuntz: return check_cuntz(std::get<CuntzInstance>(inst));
    case Relation::poset: return check_poset(std::get<PosetInstance>(inst));
    case Relation::ideal: return check_ideal(std::get<IdealInstance>(inst));
  }
  throw UsageError("unknown relation");
}

}  // namespace wbk::app
