#pragma once

#include "expressivity/interval.hpp"
#include "expressivity/network.hpp"
#include "expressivity/pwl.hpp"

namespace expressivity {

/// Exact piecewise-linear form of a scalar-in, scalar-out network on `domain`.
///
/// All units of a layer share one partition of the domain. A linear layer maps
/// per-piece (slope, intercept) pairs without touching the partition; an
/// activation splits a piece wherever some unit's pre-activation crosses an
/// activation breakpoint (the crossing is the root of that unit's line on the
/// piece). The result is canonical.
PiecewiseLinear1D trace_exact(const Network& net, Interval domain = kUnitInterval);

/// Same as trace_exact but for output coordinate `output` of a network whose
/// input is restricted to the line base + t * e_axis, t in `domain`.
PiecewiseLinear1D trace_axis(const Network& net, const std::vector<double>& base, std::size_t axis,
                             std::size_t output, Interval domain = kUnitInterval);

}  // namespace expressivity
