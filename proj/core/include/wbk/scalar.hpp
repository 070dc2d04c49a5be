#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wbk {

using Rational = mpq_class;

/// Parses "p/q", "-p/q" or an integer string into a canonical rational.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 1, or a plain integer string.
std::string format_rational(const Rational& value);

std::strong_ordering compare(const Rational& a, const Rational& b);

/// Exact rational extended by the two infinities. Infinite values only
/// ever appear as open interval endpoints.
class Scalar {
 public:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

  Scalar() = default;
  Scalar(Rational value) : value_(std::move(value)) { value_.canonicalize(); }
  Scalar(long value) : value_(value) {}

  static Scalar neg_infinity() { return Scalar(Kind::neg_inf); }
  static Scalar pos_infinity() { return Scalar(Kind::pos_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }

  /// Throws PreconditionError for an infinite scalar.
  const Rational& value() const;

  /// "p/q", an integer string, "-inf" or "inf".
  static Scalar parse(std::string_view text);
  std::string str() const;

  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  explicit Scalar(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::finite;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace wbk
