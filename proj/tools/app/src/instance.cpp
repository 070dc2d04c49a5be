#include "wbk/app/instance.hpp"

#include <fstream>
#include <sstream>

namespace wbk::app {

using io::Json;

namespace {

const Json& need(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("instance is missing field '") + key + "'");
  return *it;
}

std::size_t element_id(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

Instance decode_instance(const Json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  const Json& kind = need(j, "kind");
  if (!kind.is_string()) throw ParseError("field 'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "region-ll")
    return RegionInstance{io::decode_region(need(j, "U")), io::decode_region(need(j, "V")), io::decode_space(need(j, "K"))};
  if (k == "cuntz-ll")
    return CuntzInstance{io::decode_positive_element(need(j, "a")), io::decode_positive_element(need(j, "b"))};
  if (k == "poset-ll") {
    PosetInstance p{io::decode_poset(need(j, "poset")), element_id(j, "x"), element_id(j, "y")};
    if (p.x >= p.poset.size() || p.y >= p.poset.size()) throw ParseError("poset element id out of range");
    return p;
  }
  if (k == "ideal-ll") return IdealInstance{io::decode_ideal(need(j, "I")), io::decode_ideal(need(j, "J"))};
  if (k == "function") {
    FunctionInstance f{io::decode_pl_function(need(j, "f")), {}};
    if (const auto it = j.find("levels"); it != j.end()) {
      if (!it->is_array()) throw ParseError("field 'levels' must be an array");
      for (const Json& l : *it) f.levels.push_back(io::decode_rational(l));
    }
    return f;
  }
  throw ParseError("unknown instance kind '" + k + "'");
}

Json encode_instance(const Instance& inst) {
  struct Encoder {
    Json operator()(const RegionInstance& r) const {
      return {{"kind", "region-ll"}, {"U", io::encode(r.u)}, {"V", io::encode(r.v)}, {"K", io::encode(r.k.region())}};
    }
    Json operator()(const CuntzInstance& c) const {
      return {{"kind", "cuntz-ll"}, {"a", io::encode(c.a)}, {"b", io::encode(c.b)}};
    }
    Json operator()(const PosetInstance& p) const {
      return {{"kind", "poset-ll"}, {"poset", io::encode(p.poset)}, {"x", p.x}, {"y", p.y}};
    }
    Json operator()(const IdealInstance& i) const {
      return {{"kind", "ideal-ll"}, {"I", io::encode(i.i)}, {"J", io::encode(i.j)}};
    }
    Json operator()(const FunctionInstance& f) const {
      Json levels = Json::array();
      for (const Rational& l : f.levels) levels.push_back(io::encode(l));
      return {{"kind", "function"}, {"f", io::encode(f.f)}, {"levels", std::move(levels)}};
    }
  };
  return std::visit(Encoder{}, inst);
}

std::string_view kind_of(const Instance& inst) {
  static constexpr std::string_view names[] = {"region-ll", "cuntz-ll", "poset-ll", "ideal-ll", "function"};
  return names[inst.index()];
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return io::parse(buf.str());
}

}  // namespace wbk::app
