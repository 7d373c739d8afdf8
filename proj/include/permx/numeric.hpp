#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permx/error.hpp"

namespace permx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  // r stays integral: after step i it equals C(n - k + i, i).
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt ipow(const BigInt& base, std::uint64_t e) { return boost::multiprecision::pow(base, static_cast<unsigned>(e)); }

inline BigInt floor_of(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt f = num / den;
  if (num < 0 && f * den != num) f -= 1;
  return f;
}

inline BigInt ceil_of(const Rational& q) {
  BigInt f = floor_of(q);
  return Rational(f) == q ? f : f + 1;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline double log2_of(const BigInt& v) {
  if (v <= 0) return -INFINITY;
  const unsigned bits = boost::multiprecision::msb(v);
  if (bits < 1000) return std::log2(v.convert_to<double>());
  const unsigned shift = bits - 60;
  BigInt top = v >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

/// "3/5", "0.6", "-2", "1e-3" are all accepted; decimals are read exactly.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw Error(Errc::MalformedInput, "not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) fail();
    return num / den;
  }
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
  BigInt digits = 0;
  BigInt scale = 1;
  bool any = false, dot = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      digits = digits * 10 + (ch - '0');
      if (dot) scale *= 10;
      any = true;
    } else if (ch == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) fail();
  Rational value(digits, scale);
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') fail();
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    if (i >= text.size()) fail();
    unsigned e = 0;
    for (; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9' || e > 4000) fail();
      e = e * 10 + static_cast<unsigned>(text[i] - '0');
    }
    BigInt p = ipow(BigInt(10), e);
    value = eneg ? value / Rational(p) : value * Rational(p);
  }
  return neg ? -value : value;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace permx
