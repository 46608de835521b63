#include "expressivity/conversion.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "expressivity/error.hpp"

namespace expressivity {

std::vector<std::vector<Interval>> preactivation_bounds(const Network& net,
                                                        const std::vector<Interval>& input_box) {
  if (input_box.size() != net.input_dim()) {
    throw ShapeError("input box has " + std::to_string(input_box.size()) +
                     " coordinates, network expects " + std::to_string(net.input_dim()));
  }
  std::vector<std::vector<Interval>> bounds;
  std::vector<Interval> current = input_box;
  for (std::size_t l = 0; l < net.depth(); ++l) {
    const Layer& layer = net.layer(l);
    std::vector<Interval> pre(layer.outputs);
    for (std::size_t j = 0; j < layer.outputs; ++j) {
      double lo = layer.biases[j];
      double hi = layer.biases[j];
      for (std::size_t i = 0; i < layer.inputs; ++i) {
        const double w = layer.weight(j, i);
        const double a = w * current[i].lo;
        const double b = w * current[i].hi;
        lo += std::min(a, b);
        hi += std::max(a, b);
      }
      if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw BoundingError("pre-activation of unit " + std::to_string(j + 1) + " in layer " +
                            std::to_string(l + 1) + " is unbounded on the input box");
      }
      pre[j] = {lo, hi};
    }
    bounds.push_back(pre);
    current.resize(pre.size());
    for (std::size_t j = 0; j < pre.size(); ++j) {
      current[j] = {std::max(0.0, pre[j].lo), std::max(0.0, pre[j].hi)};
    }
  }
  return bounds;
}

ConversionPlan plan_conversion(const ActivationSpec& target) {
  const auto& bps = target.breakpoints();
  const auto& slopes = target.slopes();
  if (bps.empty()) throw NoKinkError("target activation has no breakpoint");
  constexpr double kInf = std::numeric_limits<double>::infinity();

  auto gap_around = [&](std::size_t k) {
    double gap = kInf;
    if (k > 0) gap = std::min(gap, bps[k] - bps[k - 1]);
    if (k + 1 < bps.size()) gap = std::min(gap, bps[k + 1] - bps[k]);
    return gap;
  };

  ConversionPlan plan;
  for (std::size_t k = 0; k < bps.size(); ++k) {
    if (slopes[k] + slopes[k + 1] != 0.0) {
      plan.kink = bps[k];
      plan.left_slope = slopes[k];
      plan.right_slope = slopes[k + 1];
      plan.mirrored = true;
      plan.neighbour_gap = gap_around(k);
      return plan;
    }
  }

  // Every kink is symmetric (|z|-like): keep the first kink and carry z
  // through the middle of a piece with nonzero slope.
  plan.kink = bps[0];
  plan.left_slope = slopes[0];
  plan.right_slope = slopes[1];
  plan.mirrored = false;
  plan.neighbour_gap = gap_around(0);
  for (std::size_t m = 0; m < slopes.size(); ++m) {
    if (slopes[m] == 0.0) continue;
    plan.carrier_slope = slopes[m];
    if (m == 0) {
      plan.carrier_center = bps[0] - 1.0;
      plan.carrier_gap = 1.0;
    } else if (m == bps.size()) {
      plan.carrier_center = bps.back() + 1.0;
      plan.carrier_gap = 1.0;
    } else {
      plan.carrier_center = 0.5 * (bps[m - 1] + bps[m]);
      plan.carrier_gap = 0.5 * (bps[m] - bps[m - 1]);
    }
    return plan;
  }
  throw NoKinkError("target activation has no piece with nonzero slope");
}

namespace {

double step_for(double gap, double reach) {
  if (std::isinf(gap)) return 1.0;
  return 0.5 * gap / (reach + 1.0);
}

}  // namespace

Network relu_to_pwl(const Network& net, const ActivationSpec& target,
                    const std::vector<Interval>& input_box) {
  if (!net.activation().is_relu() && !(net.activation() == ActivationSpec::relu_as_generic())) {
    throw ConfigError("relu_to_pwl expects a ReLU network");
  }
  const ConversionPlan plan = plan_conversion(target);
  const auto bounds = preactivation_bounds(net, input_box);
  const double ds = plan.right_slope - plan.left_slope;

  const double center_plus = target(plan.kink);
  const double center_minus = plan.mirrored ? center_plus : target(plan.carrier_center);

  std::vector<Layer> layers;
  layers.reserve(net.depth());
  // a_prev[i] = alpha * (u+_i - center_plus) + beta * (u-_i - center_minus)
  double alpha = 0.0;
  double beta = 0.0;
  for (std::size_t l = 0; l < net.depth(); ++l) {
    const Layer& src = net.layer(l);
    const bool first = l == 0;
    const bool hidden = l + 1 < net.depth();
    const std::size_t in = first ? src.inputs : 2 * src.inputs;

    // Effective pre-activation z_j as an affine map of the converted inputs.
    Layer eff(in, src.outputs);
    for (std::size_t j = 0; j < src.outputs; ++j) {
      double bias = src.biases[j];
      for (std::size_t i = 0; i < src.inputs; ++i) {
        const double w = src.weight(j, i);
        if (first) {
          eff.weight(j, i) = w;
        } else {
          eff.weight(j, 2 * i) = w * alpha;
          eff.weight(j, 2 * i + 1) = w * beta;
          bias -= w * (alpha * center_plus + beta * center_minus);
        }
      }
      eff.biases[j] = bias;
    }

    if (!hidden) {
      layers.push_back(std::move(eff));
      break;
    }

    double reach = 0.0;
    for (const Interval& iv : bounds[l]) reach = std::max(reach, iv.magnitude());
    const double delta = step_for(plan.neighbour_gap, reach);
    const double delta_c = plan.mirrored ? delta : step_for(plan.carrier_gap, reach);

    Layer out(in, 2 * src.outputs);
    for (std::size_t j = 0; j < src.outputs; ++j) {
      for (std::size_t i = 0; i < in; ++i) {
        out.weight(2 * j, i) = delta * eff.weight(j, i);
        out.weight(2 * j + 1, i) = (plan.mirrored ? -delta : delta_c) * eff.weight(j, i);
      }
      out.biases[2 * j] = plan.kink + delta * eff.biases[j];
      out.biases[2 * j + 1] = plan.mirrored ? plan.kink - delta * eff.biases[j]
                                            : plan.carrier_center + delta_c * eff.biases[j];
    }
    layers.push_back(std::move(out));

    if (plan.mirrored) {
      const double sum = plan.right_slope + plan.left_slope;
      alpha = 1.0 / (2.0 * delta * ds) + 1.0 / (2.0 * delta * sum);
      beta = 1.0 / (2.0 * delta * ds) - 1.0 / (2.0 * delta * sum);
    } else {
      alpha = 1.0 / (delta * ds);
      beta = -plan.left_slope / (ds * delta_c * plan.carrier_slope);
    }
  }
  return Network(net.input_dim(), std::move(layers), target);
}

}  // namespace expressivity
