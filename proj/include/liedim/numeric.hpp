#pragma once

// Exact arithmetic aliases used throughout the library.  Counts are
// arbitrary-precision integers, coefficients are exact rationals; no
// floating point appears anywhere in a dimension or bound computation.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace liedim {

using BigCount = boost::multiprecision::cpp_int;
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an exact enumeration would outgrow its configured cap.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Renders "p" when the denominator is 1, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "p" or "p/q" with optional leading '-'.  Throws on anything else.
inline Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

// Smallest integer >= r, for nonnegative r.  Bounds assembled from rational
// slopes are rounded up so they stay upper bounds.
inline BigCount ceil_nonneg(const Rat& r) {
  if (r < 0) throw std::domain_error("ceil_nonneg: negative value");
  const Int num = rat_num(r), den = rat_den(r);
  return (num + den - 1) / den;
}

}  // namespace liedim
