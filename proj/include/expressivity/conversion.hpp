#pragma once

#include <vector>

#include "expressivity/interval.hpp"
#include "expressivity/network.hpp"

namespace expressivity {

/// Per-layer interval bounds of the pre-activations of a ReLU network over an
/// input box (plain interval arithmetic). Entry l holds one interval per unit
/// of layer l + 1. Throws BoundingError if any bound is not finite.
std::vector<std::vector<Interval>> preactivation_bounds(const Network& relu_net,
                                                        const std::vector<Interval>& input_box);

/// How the two replacement units of one ReLU are formed.
struct ConversionPlan {
  double kink = 0.0;            // t0, a breakpoint of the target activation
  double left_slope = 0.0;      // s-, slope left of t0
  double right_slope = 0.0;     // s+, slope right of t0
  bool mirrored = true;         // second unit is sigma(t0 - delta z); else a linear carrier
  double carrier_center = 0.0;  // carrier unit computes sigma(center + delta_c z)
  double carrier_slope = 0.0;
  double neighbour_gap = 0.0;   // distance from t0 to nearest other breakpoint (inf if none)
  double carrier_gap = 0.0;     // distance from the carrier center to its piece ends
};

ConversionPlan plan_conversion(const ActivationSpec& target);

/// Rewrites a ReLU network so it uses `target` as activation and computes the
/// same function on `input_box`.
///
/// Each hidden ReLU unit z -> max(0, z) becomes two units,
/// u+ = sigma(t0 + delta z) and u- = sigma(t0 - delta z), around a kink t0 of
/// sigma with slopes s- and s+. As long as delta |z| stays within the two
/// pieces adjacent to t0,
///   A = u+ - sigma(t0) and B = u- - sigma(t0)
/// satisfy A + B = (s+ - s-) delta |z| and A - B = (s+ + s-) delta z, which the
/// next layer combines back into max(0, z). If every kink has s+ + s- = 0 the
/// second unit instead sits inside a piece of nonzero slope and carries z
/// linearly. Per layer, delta = 0.5 * gap / (max reachable |z| + 1).
///
/// Depth is unchanged, each hidden width doubles, and the parameter count is
/// at most 4M.
Network relu_to_pwl(const Network& relu_net, const ActivationSpec& target,
                    const std::vector<Interval>& input_box);

}  // namespace expressivity
