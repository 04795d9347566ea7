#include "selberg/matcore/scalar.hpp"

#include <cmath>
#include <sstream>

#include "selberg/error.hpp"

namespace selberg {

const Rational& Scalar::exact() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw Error(ErrorCode::InvalidArgument, "exact value requested from a float scalar");
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return selberg::to_double(*r);
  return std::get<double>(value_);
}

int Scalar::sign() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->sign();
  const double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact()) value_ = std::get<Rational>(value_) + std::get<Rational>(o.value_);
  else value_ = to_double() + o.to_double();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact()) value_ = std::get<Rational>(value_) - std::get<Rational>(o.value_);
  else value_ = to_double() - o.to_double();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact()) value_ = std::get<Rational>(value_) * std::get<Rational>(o.value_);
  else value_ = to_double() * o.to_double();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "exact division by zero");
    value_ = std::get<Rational>(value_) / std::get<Rational>(o.value_);
  } else {
    value_ = to_double() / o.to_double();
  }
  return *this;
}

Scalar operator-(const Scalar& a) {
  if (a.is_exact()) return Scalar(Rational(-a.exact()));
  return Scalar(-a.to_double());
}

int compare(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    const int c = a.exact().compare(b.exact());
    return (c > 0) - (c < 0);
  }
  const double x = a.to_double();
  const double y = b.to_double();
  return (x > y) - (x < y);
}

std::string Scalar::to_string() const {
  if (is_exact()) return selberg::to_string(exact());
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(value_);
  return os.str();
}

}  // namespace selberg
