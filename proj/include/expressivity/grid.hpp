#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "expressivity/network.hpp"

namespace expressivity {

/// Floating-point type used to evaluate the network on the detection grid.
enum class Precision { Double, Single };

std::string to_string(Precision p);
Precision precision_from_string(const std::string& name);

inline constexpr std::size_t kDefaultGridCount = 100000;
inline constexpr double kDefaultSlopeThreshold = 0.5;

/// Finite-difference region detector on x_n = (n - 1) / grid_count,
/// n = 1..grid_count.
///
/// For n = 1..grid_count-2 the chord slopes g_n, g_{n+1} of consecutive grid
/// cells are compared; d = |g_{n+1} - g_n| >= threshold marks x_{n+1} as a
/// region boundary and closes the current run, otherwise the run grows by one.
/// The trailing run is closed after the loop. Returns the longest run divided
/// by grid_count.
double grid_fineness(const Network& net, std::size_t grid_count = kDefaultGridCount,
                     double threshold = kDefaultSlopeThreshold, Precision precision = Precision::Double);

/// The same detector applied to precomputed samples F(x_n) on the grid.
double grid_fineness_from_samples(std::span<const double> values, double threshold);

}  // namespace expressivity
