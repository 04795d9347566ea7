#pragma once

#include <string>
#include <variant>

#include "selberg/matcore/rational.hpp"

namespace selberg {

/// A number that is either an exact rational or a float64.
///
/// Arithmetic stays exact while both operands are exact; mixing in a float
/// operand promotes the result to float. Comparisons between an exact and a
/// float value are done in float.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(long long v) : value_(Rational(v)) {}
  Scalar(Rational v) : value_(std::move(v)) {}
  explicit Scalar(double v) : value_(v) {}

  static Scalar from_double(double v) { return Scalar(v); }
  static Scalar parse(std::string_view text) { return Scalar(parse_rational(text)); }

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }

  /// Throws InvalidArgument on a float scalar.
  const Rational& exact() const;
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Scalar abs() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  /// -1, 0, +1.
  friend int compare(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return compare(a, b) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

  std::string to_string() const;

 private:
  std::variant<Rational, double> value_;
};

}  // namespace selberg
