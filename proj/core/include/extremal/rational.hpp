#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace extremal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);
std::int64_t ceil_to_int64(const Rational& r);

// "p/q" or "p"; decimals like "0.5" are accepted and converted exactly.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
long double to_long_double(const Rational& r);

// Relative slack used for floating-point certificate comparisons.
inline constexpr long double kCertificateSlack = 1.0L / 1099511627776.0L;  // 2^-40

// lhs >= rhs up to the certificate slack.
bool ge_with_slack(long double lhs, long double rhs);

}  // namespace extremal
