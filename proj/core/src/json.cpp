#include "wbk/json.hpp"

#include <string>

#include "wbk/error.hpp"

namespace wbk::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return a;
}

bool bool_field(const Json& j, const char* key) {
  const Json& b = field(j, key);
  if (!b.is_boolean()) throw ParseError(std::string("field '") + key + "' must be a boolean");
  return b.get<bool>();
}

Scalar decode_scalar(const Json& j) {
  if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
  if (!j.is_string()) throw ParseError("expected a rational string");
  return Scalar::parse(j.get<std::string>());
}

std::vector<Rational> decode_rationals(const Json& a) {
  std::vector<Rational> out;
  for (const Json& x : a) out.push_back(decode_rational(x));
  return out;
}

Json encode_optional(const std::optional<Rational>& r) { return r ? encode(*r) : Json(nullptr); }

}  // namespace

Json encode(const Rational& r) { return format_rational(r); }

Json encode(const Scalar& s) { return s.str(); }

Json encode(const Region& r) {
  Json boxes = Json::array();
  for (const Box& b : r.boxes()) {
    Json iv = Json::array();
    for (const Interval& i : b.iv)
      iv.push_back({{"lo", encode(i.lo)}, {"lo_open", i.lo_open}, {"hi", encode(i.hi)}, {"hi_open", i.hi_open}});
    boxes.push_back({{"iv", std::move(iv)}});
  }
  return {{"dim", r.dim()}, {"boxes", std::move(boxes)}};
}

Json encode(const PLFunction& f) {
  Json bp = Json::array(), val = Json::array();
  for (const Rational& x : f.breakpoints()) bp.push_back(encode(x));
  for (const Rational& v : f.values()) val.push_back(encode(v));
  return {{"space", encode(f.space().region())}, {"bp", std::move(bp)}, {"val", std::move(val)}};
}

Json encode(const PositiveElement& e) {
  Json fs = Json::array();
  for (const PLFunction& f : e.factors()) fs.push_back(encode(f));
  return {{"kind", e.is_tensor() ? "tensor" : "scalar"}, {"factors", std::move(fs)}};
}

Json encode(const FinitePoset& p) { return {{"n", p.size()}, {"leq", p.matrix()}}; }

Json encode(const Ideal& i) {
  Json j = {{"ambient", encode(i.ambient().region())}, {"carrier", encode(i.carrier())}};
  if (i.generators()) {
    Json gs = Json::array();
    for (const PLFunction& g : *i.generators()) gs.push_back(encode(g));
    j["generators"] = std::move(gs);
  }
  return j;
}

Json encode(const WayBelowCertificate& c) {
  Json facts = Json::array();
  for (const ContainmentFact& f : c.facts)
    facts.push_back({{"label", f.label}, {"subset", encode(f.subset)}, {"superset", encode(f.superset)},
                     {"holds", f.holds}});
  return {{"verdict", c.verdict},
          {"reason", c.reason},
          {"eps1", encode_optional(c.eps1)},
          {"eps2", encode_optional(c.eps2)},
          {"eps", encode_optional(c.eps)},
          {"c1", encode_optional(c.c1)},
          {"c2", encode_optional(c.c2)},
          {"c", encode_optional(c.c)},
          {"containments", std::move(facts)},
          {"audit",
           {{"seed", c.audit.seed},
            {"samples", c.audit.samples},
            {"hits", c.audit.hits},
            {"violations", c.audit.violations}}}};
}

Rational decode_rational(const Json& j) {
  const Scalar s = decode_scalar(j);
  if (!s.is_finite()) throw ParseError("expected a finite rational");
  return s.value();
}

Region decode_region(const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) throw ParseError("region 'dim' must be a positive integer");
  const std::size_t dim = d.get<std::size_t>();
  std::vector<Box> boxes;
  for (const Json& b : array_field(j, "boxes")) {
    Box box;
    for (const Json& iv : array_field(b, "iv")) {
      box.iv.push_back(Interval{decode_scalar(field(iv, "lo")), bool_field(iv, "lo_open"),
                                decode_scalar(field(iv, "hi")), bool_field(iv, "hi_open")});
    }
    boxes.push_back(std::move(box));
  }
  return normalize(dim, boxes);
}

Space decode_space(const Json& j) { return Space(decode_region(j)); }

PLFunction decode_pl_function(const Json& j) {
  return PLFunction(decode_space(field(j, "space")), decode_rationals(array_field(j, "bp")),
                    decode_rationals(array_field(j, "val")));
}

PositiveElement decode_positive_element(const Json& j) {
  const Json& kind = field(j, "kind");
  std::vector<PLFunction> fs;
  for (const Json& f : array_field(j, "factors")) fs.push_back(decode_pl_function(f));
  if (kind == "scalar") {
    if (fs.size() != 1) throw ParseError("scalar element needs exactly one factor");
    return PositiveElement::scalar(std::move(fs.front()));
  }
  if (kind == "tensor") return PositiveElement::tensor(std::move(fs));
  throw ParseError("element 'kind' must be \"scalar\" or \"tensor\"");
}

FinitePoset decode_poset(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_unsigned()) throw ParseError("poset 'n' must be a nonnegative integer");
  const Json& rows = array_field(j, "leq");
  if (rows.size() != n.get<std::size_t>()) throw ParseError("poset 'leq' must have n rows");
  std::vector<std::vector<bool>> m;
  for (const Json& row : rows) {
    if (!row.is_array()) throw ParseError("poset 'leq' rows must be arrays");
    std::vector<bool> r;
    for (const Json& x : row) {
      if (!x.is_boolean()) throw ParseError("poset 'leq' entries must be booleans");
      r.push_back(x.get<bool>());
    }
    m.push_back(std::move(r));
  }
  return FinitePoset(std::move(m));
}

Ideal decode_ideal(const Json& j) {
  Space ambient = decode_space(field(j, "ambient"));
  if (j.contains("generators")) {
    std::vector<PLFunction> gs;
    for (const Json& g : array_field(j, "generators")) gs.push_back(decode_pl_function(g));
    return ideal_from_generators(std::move(gs), ambient);
  }
  return Ideal(std::move(ambient), decode_region(field(j, "carrier")));
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace wbk::io
