#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "fatlas/errors.hpp"

namespace fatlas {

using BigInt = boost::multiprecision::cpp_int;

// Always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  require(den != 0, ErrorCode::InvalidParams, "zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Reduced "p/q" form; integers are written with denominator 1.
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) fail(ErrorCode::ParseError, "empty rational component in '" + std::string(text) + "'");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) fail(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') fail(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    }
    return BigInt(std::string(s.front() == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace fatlas
