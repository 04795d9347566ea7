#include "selberg/matcore/rational.hpp"

#include <gmp.h>

#include <cctype>

#include "selberg/error.hpp"

namespace selberg {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorCode::Parse, "empty integer in '" + std::string(whole) + "'");
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) throw Error(ErrorCode::Parse, "bad number '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw Error(ErrorCode::Parse, "bad number '" + std::string(whole) + "'");
    }
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const BigInt p = parse_integer(trim(s.substr(0, slash)), s);
    const BigInt q = parse_integer(trim(s.substr(slash + 1)), s);
    if (q == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(s) + "'");
    return Rational(p, q);
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    bool negative = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.remove_prefix(1);
    if (ip.empty() && fp.empty()) throw Error(ErrorCode::Parse, "bad number '" + std::string(s) + "'");
    const BigInt whole = ip.empty() ? BigInt(0) : parse_integer(ip, s);
    const BigInt frac = fp.empty() ? BigInt(0) : parse_integer(fp, s);
    if (!fp.empty() && (fp[0] == '-' || fp[0] == '+')) {
      throw Error(ErrorCode::Parse, "bad number '" + std::string(s) + "'");
    }
    BigInt scale = 1;
    for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
    Rational r = Rational(whole) + Rational(frac, scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(s, s));
}

std::string to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

std::optional<Rational> exact_root(const Rational& r, unsigned n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return r;
  if (r < 0 && n % 2 == 0) return std::nullopt;
  auto root_of = [n](const BigInt& v, BigInt& out) {
    BigInt a = v < 0 ? BigInt(-v) : v;
    const int exact = mpz_root(out.backend().data(), a.backend().data(), n);
    if (v < 0) out = -out;
    return exact != 0;
  };
  BigInt p;
  BigInt q;
  if (!root_of(numerator_of(r), p) || !root_of(denominator_of(r), q)) return std::nullopt;
  return Rational(p, q);
}

}  // namespace selberg
