#include "wbk/scalar.hpp"

#include <cctype>
#include <ostream>

#include "wbk/error.hpp"

namespace wbk {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw ParseError("malformed rational '" + std::string(text) + "'");
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(mpz_class(strip_plus(num), 10));
  } else {
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
      throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    r = Rational(mpz_class(strip_plus(num), 10), d);
  }
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const Rational& Scalar::value() const {
  if (!is_finite()) throw PreconditionError("infinite scalar has no rational value");
  return value_;
}

Scalar Scalar::parse(std::string_view text) {
  if (text == "-inf") return neg_infinity();
  if (text == "inf" || text == "+inf") return pos_infinity();
  return Scalar(parse_rational(text));
}

std::string Scalar::str() const {
  switch (kind_) {
    case Kind::neg_inf: return "-inf";
    case Kind::pos_inf: return "inf";
    case Kind::finite: break;
  }
  return format_rational(value_);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.kind_ != b.kind_ || !a.is_finite()) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  return compare(a.value_, b.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace wbk
