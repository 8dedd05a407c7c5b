#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

#include "modknot/error.hpp"

namespace modknot {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Division rounding toward negative infinity. `den` must be nonzero.
inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  BigInt r = num - q * den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

/// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt s = isqrt(n);
  return s * s == n;
}

/// floor((p + sqrt(d)) / q) for d > 0 not a perfect square and q != 0.
/// `root` must be isqrt(d).
inline BigInt floor_surd(const BigInt& p, const BigInt& q, const BigInt& root) {
  if (q > 0) return floor_div(p + root, q);
  // (p + sqrt d)/q is irrational, so floor(-y) = -floor(y) - 1.
  return -floor_div(p + root, BigInt(-q)) - 1;
}

/// Parses an optionally signed decimal integer, surrounding whitespace allowed.
inline BigInt parse_bigint(std::string_view text) {
  std::size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  std::string_view body = text.substr(lo, hi - lo);
  std::size_t start = 0;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) start = 1;
  if (start == body.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = start; i < body.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(body[i])))
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  std::string digits(body.substr(start));
  // cpp_int reads a leading 0 as an octal prefix
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  BigInt value(digits);
  return body[0] == '-' ? BigInt(-value) : value;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace modknot
