#include "extremal/rational.hpp"

#include <cmath>

#include "extremal/errors.hpp"

namespace extremal {

BigInt floor_of(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil_of(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num > 0) q += 1;
  return q;
}

std::int64_t ceil_to_int64(const Rational& r) {
  BigInt c = ceil_of(r);
  if (c > BigInt(INT64_MAX) || c < BigInt(INT64_MIN)) throw TooLarge("rational out of 64-bit range");
  return static_cast<std::int64_t>(c);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    for (char c : whole + frac)
      if (c < '0' || c > '9') throw ParseError("bad rational '" + text + "'");
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    Rational r(BigInt(whole) * scale + BigInt(frac), scale);
    return neg ? -r : r;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

long double to_long_double(const Rational& r) { return r.convert_to<long double>(); }

bool ge_with_slack(long double lhs, long double rhs) {
  if (std::isnan(lhs) || std::isnan(rhs)) return false;
  return lhs >= rhs - std::fabs(rhs) * kCertificateSlack;
}

}  // namespace extremal
