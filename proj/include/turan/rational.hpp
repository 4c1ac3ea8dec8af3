#pragma once

// Exact rational arithmetic for threshold comparisons. Every finite double is
// a dyadic rational, so exact(double) is lossless; parse_decimal keeps "0.1"
// as 1/10 instead of its binary approximation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "turan/error.hpp"

namespace turan {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ratio(long long num, long long den) { return Rational(num, den); }

inline Rational exact(double value) {
  detail::require(std::isfinite(value), "exact: non-finite value");
  return Rational(value);
}

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

inline Rational rpow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

/// Parses "3", "-0.25", "1/10" or "1e-3" exactly.
inline Rational parse_decimal(std::string_view text) {
  auto fail = [&] { throw PreconditionError("not a rational literal: '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) fail();
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  BigInt digits = 0;
  int scale = 0;
  bool any = false, point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      any = true;
      if (point) ++scale;
    } else if (c == '.' && !point) {
      point = true;
    } else {
      break;
    }
  }
  if (!any) fail();
  int exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') fail();
    std::string rest(text.substr(pos + 1));
    if (rest.empty()) fail();
    std::size_t used = 0;
    try {
      exponent = std::stoi(rest, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != rest.size()) fail();
  }
  exponent -= scale;
  Rational value(digits);
  BigInt ten = 10;
  BigInt power = boost::multiprecision::pow(ten, static_cast<unsigned>(std::abs(exponent)));
  if (exponent >= 0) value *= power; else value /= power;
  return negative ? Rational(-value) : value;
}

/// The rational whose shortest decimal spelling round-trips to `value`, so
/// decimal(0.1) == 1/10 while exact(0.1) is the nearest dyadic.
inline Rational decimal(double value) {
  detail::require(std::isfinite(value), "decimal: non-finite value");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return parse_decimal(std::string_view(buf, static_cast<std::size_t>(end - buf)));
}

}  // namespace turan
