#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "caplab/errors.hpp"

namespace caplab {

using mask_t = std::uint32_t;

// A finite ground set {0, ..., n-1}; the sigma-field is the full power set,
// subsets are encoded as n-bit masks. n is capped at 24 so a capacity table
// (2^n entries) stays addressable.
struct FiniteSpace {
  int n = 0;
  std::vector<std::string> point_names;  // optional display labels

  FiniteSpace() = default;
  explicit FiniteSpace(int n_, std::vector<std::string> names = {})
      : n(n_), point_names(std::move(names)) {
    if (n < 1 || n > 24)
      throw PreconditionError("FiniteSpace: n must be in [1, 24], got " + std::to_string(n));
    if (!point_names.empty() && static_cast<int>(point_names.size()) != n)
      throw PreconditionError("FiniteSpace: point_names size must equal n");
  }

  mask_t full_mask() const { return static_cast<mask_t>((1u << n) - 1u); }
  std::size_t subset_count() const { return std::size_t{1} << n; }

  bool operator==(const FiniteSpace& o) const { return n == o.n; }
};

inline int popcount(mask_t m) { return std::popcount(m); }

inline mask_t bit(int i) { return mask_t{1} << i; }

// Members of a mask as point indices, ascending.
inline std::vector<int> mask_points(mask_t m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

inline mask_t mask_from_points(const std::vector<int>& pts, int n) {
  mask_t m = 0;
  for (int i : pts) {
    if (i < 0 || i >= n)
      throw PreconditionError("subset point index " + std::to_string(i) + " out of range for n=" +
                              std::to_string(n));
    m |= bit(i);
  }
  return m;
}

inline std::string mask_to_string(mask_t m) {
  std::string s = "{";
  bool first = true;
  for (int i : mask_points(m)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace caplab
