#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace selberg {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Accepts "p/q", an integer "p", or a finite decimal such as "-1.25".
Rational parse_rational(std::string_view text);

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

BigInt numerator_of(const Rational& r);
BigInt denominator_of(const Rational& r);

/// The n-th root of r when r is a perfect n-th power of a rational, else nullopt.
std::optional<Rational> exact_root(const Rational& r, unsigned n);

}  // namespace selberg
