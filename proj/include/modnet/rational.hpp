#pragma once

#include <gmpxx.h>

#include <string>

namespace modnet {

// Arbitrary-precision rational, used everywhere exact arithmetic is required.
using Rational = mpq_class;

enum class ArithmeticMode { kExact, kFloat };

// Parses "3", "-2/7", "0.125" or "1.5e-3" into an exact rational.
// Throws DataError on malformed input.
Rational parse_rational(const std::string& token);

// Renders r as "a" for integers and "a/b" otherwise (canonical form).
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

// Conversion helper so templated code can run on Rational or double.
template <typename T>
T value_cast(const Rational& r);

template <>
inline Rational value_cast<Rational>(const Rational& r) {
  return r;
}

template <>
inline double value_cast<double>(const Rational& r) {
  return r.get_d();
}

}  // namespace modnet
