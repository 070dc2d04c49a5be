#pragma once

#include <nlohmann/json.hpp>

#include "wbk/cuntz.hpp"
#include "wbk/ideal.hpp"
#include "wbk/pl_function.hpp"
#include "wbk/poset.hpp"
#include "wbk/region.hpp"

/// Textual interchange formats. Rationals are strings "p/q" or integer
/// strings; decoding accepts JSON integers as well. Every decode_* throws
/// ParseError for structurally malformed input and lets the value's own
/// PreconditionError through for well-formed but invalid values.
namespace wbk::io {

using Json = nlohmann::json;

Json encode(const Rational& r);
Json encode(const Scalar& s);
Json encode(const Region& r);
Json encode(const PLFunction& f);
Json encode(const PositiveElement& e);
Json encode(const FinitePoset& p);
Json encode(const Ideal& i);
Json encode(const WayBelowCertificate& c);

Rational decode_rational(const Json& j);
Region decode_region(const Json& j);
Space decode_space(const Json& j);
PLFunction decode_pl_function(const Json& j);
PositiveElement decode_positive_element(const Json& j);
FinitePoset decode_poset(const Json& j);
Ideal decode_ideal(const Json& j);

/// Parses text into a document, mapping syntax errors to ParseError.
Json parse(std::string_view text);

}  // namespace wbk::io
