#include "expressivity/trace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "expressivity/error.hpp"

namespace expressivity {

namespace {

// Per-unit lines on a shared partition: lines[u * pieces + k].
struct LayerState {
  std::vector<double> cuts;  // pieces + 1 entries, domain ends included
  std::vector<LinearPiece> lines;
  std::size_t units = 0;

  std::size_t pieces() const { return cuts.size() - 1; }
  LinearPiece& at(std::size_t u, std::size_t k) { return lines[u * pieces() + k]; }
  const LinearPiece& at(std::size_t u, std::size_t k) const { return lines[u * pieces() + k]; }
};

LayerState apply_linear(const LayerState& in, const Layer& layer) {
  LayerState out;
  out.cuts = in.cuts;
  out.units = layer.outputs;
  out.lines.assign(layer.outputs * in.pieces(), LinearPiece{});
  for (std::size_t j = 0; j < layer.outputs; ++j) {
    for (std::size_t k = 0; k < in.pieces(); ++k) {
      double slope = 0.0;
      double intercept = layer.biases[j];
      for (std::size_t i = 0; i < layer.inputs; ++i) {
        const double w = layer.weight(j, i);
        slope += w * in.at(i, k).slope;
        intercept += w * in.at(i, k).intercept;
      }
      out.at(j, k) = {slope, intercept};
    }
  }
  return out;
}

LayerState apply_activation(const LayerState& in, const ActivationSpec& act) {
  const auto& bps = act.breakpoints();
  std::vector<double> cuts{in.cuts.front()};
  // For each new piece, the originating piece index.
  std::vector<std::size_t> origin;
  std::vector<double> hits;
  for (std::size_t k = 0; k < in.pieces(); ++k) {
    const double lo = in.cuts[k];
    const double hi = in.cuts[k + 1];
    const double eps = 1e-12 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
    hits.clear();
    for (std::size_t u = 0; u < in.units; ++u) {
      const LinearPiece z = in.at(u, k);
      if (z.slope == 0.0) continue;
      for (double t : bps) {
        const double x = (t - z.intercept) / z.slope;
        if (x > lo + eps && x < hi - eps) hits.push_back(x);
      }
    }
    std::sort(hits.begin(), hits.end());
    for (double x : hits) {
      if (x - cuts.back() > eps) {
        cuts.push_back(x);
        origin.push_back(k);
      }
    }
    cuts.push_back(hi);
    origin.push_back(k);
  }

  LayerState out;
  out.cuts = std::move(cuts);
  out.units = in.units;
  out.lines.assign(in.units * out.pieces(), LinearPiece{});
  for (std::size_t k = 0; k < out.pieces(); ++k) {
    const double mid = 0.5 * (out.cuts[k] + out.cuts[k + 1]);
    for (std::size_t u = 0; u < in.units; ++u) {
      const LinearPiece z = in.at(u, origin[k]);
      const std::size_t m = act.piece_index(z(mid));
      const double a = act.piece_slope(m);
      out.at(u, k) = {a * z.slope, a * z.intercept + act.piece_intercept(m)};
    }
  }
  return out;
}

}  // namespace

PiecewiseLinear1D trace_exact(const Network& net, Interval domain) {
  if (!net.is_scalar()) {
    throw ShapeError("exact tracing needs a scalar-in, scalar-out network (got " +
                     std::to_string(net.input_dim()) + " -> " + std::to_string(net.output_dim()) + ")");
  }
  LayerState state;
  state.cuts = {domain.lo, domain.hi};
  state.units = 1;
  state.lines = {LinearPiece{1.0, 0.0}};
  for (std::size_t l = 0; l < net.depth(); ++l) {
    state = apply_linear(state, net.layer(l));
    if (l + 1 < net.depth()) state = apply_activation(state, net.activation());
  }
  std::vector<double> bps(state.cuts.begin() + 1, state.cuts.end() - 1);
  return PiecewiseLinear1D(domain, std::move(bps), std::move(state.lines)).canonical();
}

PiecewiseLinear1D trace_axis(const Network& net, const std::vector<double>& base, std::size_t axis,
                             std::size_t output, Interval domain) {
  if (base.size() != net.input_dim() || axis >= net.input_dim() || output >= net.output_dim()) {
    throw ShapeError("axis restriction does not match the network shape");
  }
  std::vector<Layer> layers = net.layers();
  Layer& first = layers.front();
  Layer restricted(1, first.outputs);
  for (std::size_t j = 0; j < first.outputs; ++j) {
    restricted.weight(j, 0) = first.weight(j, axis);
    double b = first.biases[j];
    for (std::size_t i = 0; i < first.inputs; ++i) {
      if (i != axis) b += first.weight(j, i) * base[i];
    }
    restricted.biases[j] = b;
  }
  first = std::move(restricted);
  Layer& last = layers.back();
  Layer row(last.inputs, 1);
  for (std::size_t i = 0; i < last.inputs; ++i) row.weight(0, i) = last.weight(output, i);
  row.biases[0] = last.biases[output];
  last = std::move(row);
  return trace_exact(Network(1, std::move(layers), net.activation()), domain);
}

}  // namespace expressivity
