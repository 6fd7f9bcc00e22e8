#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace garside {

/// Exact fraction type used for translation numbers and periodicity labels.
/// Always stored reduced, denominator >= 1 (boost::rational maintains both).
using Rational = boost::rational<std::int64_t>;

/// Floor division with sign semantics of mathematical floor (b > 0).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline std::int64_t rational_floor(const Rational& r) {
  return floor_div(r.numerator(), r.denominator());
}

inline std::int64_t rational_ceil(const Rational& r) { return -rational_floor(-r); }

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace garside
