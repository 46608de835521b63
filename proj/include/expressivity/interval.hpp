#pragma once

#include <algorithm>

namespace expressivity {

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  double magnitude() const noexcept { return std::max(-lo, hi); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline constexpr Interval kUnitInterval{0.0, 1.0};

}  // namespace expressivity
