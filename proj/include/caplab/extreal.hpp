#pragma once

#include <cmath>
#include <limits>

// Arithmetic helpers for the extended half-line [0, inf]. Capacity values are
// plain doubles where +infinity is a legal value; the product convention
// inf * 0 = 0 is enforced here and nowhere else.
namespace caplab::ext {

inline constexpr double inf = std::numeric_limits<double>::infinity();

inline bool is_inf(double x) { return std::isinf(x); }

// Product with inf * 0 = 0 (both orders).
inline double mul(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

// True for a valid extended-real capacity value: finite nonnegative or +inf.
inline bool valid_value(double x) { return x >= 0.0 && !std::isnan(x); }

}  // namespace caplab::ext
