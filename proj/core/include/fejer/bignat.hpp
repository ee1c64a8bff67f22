#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace fejer {

/// Unbounded natural number. Rate formulas compose moduli repeatedly and
/// overflow 64-bit quickly, so all rate arithmetic runs on this type.
using BigNat = boost::multiprecision::cpp_int;

using BigRat = boost::multiprecision::cpp_rational;

/// v < 1/(k+1), evaluated exactly (v is a finite double, k a natural number).
/// This is the comparison behind every "< 1/(k+1)" threshold in the library;
/// doing it in rational arithmetic avoids spurious flips when k is huge.
inline bool lt_inv(double v, const BigNat& k) {
  if (v <= 0.0) return true;
  if (v >= 1.0) return false;
  return BigRat(v) * (k + 1) < 1;
}

/// v <= 1/(k+1), exact.
inline bool le_inv(double v, const BigNat& k) {
  if (v <= 0.0) return true;
  return BigRat(v) * (k + 1) <= 1;
}

/// 1/(k+1) as a double, rounded toward zero on underflow.
inline double inv_threshold(const BigNat& k) {
  double kk = k.convert_to<double>();
  if (kk == std::numeric_limits<double>::infinity()) return 0.0;
  return 1.0 / (kk + 1.0);
}

inline std::string to_string(const BigNat& v) { return v.str(); }

/// Truncated subtraction on naturals: a - b, floored at 0.
inline BigNat truncated_sub(const BigNat& a, const BigNat& b) {
  return a >= b ? BigNat(a - b) : BigNat(0);
}

}  // namespace fejer
