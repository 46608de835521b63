#include "expressivity/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "expressivity/error.hpp"

namespace expressivity {

std::vector<std::size_t> NetworkShape::hidden_widths() const {
  if (widths.empty()) return {};
  return {widths.begin(), widths.end() - 1};
}

std::size_t NetworkShape::parameter_count() const noexcept {
  std::size_t m = 0;
  std::size_t prev = input_dim;
  for (std::size_t n : widths) {
    m += n * prev + n;
    prev = n;
  }
  return m;
}

std::size_t NetworkShape::hidden_unit_count() const noexcept {
  if (widths.empty()) return 0;
  return std::accumulate(widths.begin(), widths.end() - 1, std::size_t{0});
}

void NetworkShape::validate() const {
  if (input_dim == 0) throw ShapeError("input dimension must be at least 1");
  if (widths.empty()) throw ShapeError("network needs at least one layer");
  for (std::size_t l = 0; l < widths.size(); ++l) {
    if (widths[l] == 0) throw ShapeError("layer " + std::to_string(l + 1) + " has zero width");
  }
}

NetworkShape NetworkShape::from_hidden(std::size_t input_dim, const std::vector<std::size_t>& hidden,
                                       std::size_t output_dim) {
  NetworkShape s{input_dim, hidden};
  s.widths.push_back(output_dim);
  s.validate();
  return s;
}

Layer::Layer(std::size_t in, std::size_t out)
    : inputs(in), outputs(out), weights(in * out, 0.0), biases(out, 0.0) {}

Network::Network(std::size_t input_dim, std::vector<Layer> layers, ActivationSpec activation)
    : layers_(std::move(layers)), activation_(std::move(activation)) {
  shape_.input_dim = input_dim;
  std::size_t prev = input_dim;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const Layer& layer = layers_[l];
    if (layer.inputs != prev) {
      throw ShapeError("layer " + std::to_string(l + 1) + " expects " + std::to_string(layer.inputs) +
                       " inputs but previous layer has " + std::to_string(prev) + " units");
    }
    if (layer.weights.size() != layer.inputs * layer.outputs ||
        layer.biases.size() != layer.outputs) {
      throw ShapeError("layer " + std::to_string(l + 1) + " parameter arrays do not match its shape");
    }
    shape_.widths.push_back(layer.outputs);
    prev = layer.outputs;
  }
  shape_.validate();
}

Network Network::from_params(const NetworkShape& shape, const ParamVector& theta,
                             ActivationSpec activation) {
  shape.validate();
  if (theta.size() != shape.parameter_count()) {
    throw ShapeError("parameter vector has " + std::to_string(theta.size()) + " entries, shape needs " +
                     std::to_string(shape.parameter_count()));
  }
  std::vector<Layer> layers;
  layers.reserve(shape.depth());
  std::size_t prev = shape.input_dim;
  auto it = theta.values.begin();
  for (std::size_t n : shape.widths) {
    Layer layer(prev, n);
    std::copy_n(it, layer.weights.size(), layer.weights.begin());
    it += static_cast<std::ptrdiff_t>(layer.weights.size());
    std::copy_n(it, n, layer.biases.begin());
    it += static_cast<std::ptrdiff_t>(n);
    layers.push_back(std::move(layer));
    prev = n;
  }
  return Network(shape.input_dim, std::move(layers), std::move(activation));
}

Network Network::zeros(const NetworkShape& shape, ActivationSpec activation) {
  return from_params(shape, ParamVector{std::vector<double>(shape.parameter_count(), 0.0)},
                     std::move(activation));
}

ParamVector Network::pack() const {
  ParamVector theta;
  theta.values.reserve(shape_.parameter_count());
  for (const Layer& layer : layers_) {
    theta.values.insert(theta.values.end(), layer.weights.begin(), layer.weights.end());
    theta.values.insert(theta.values.end(), layer.biases.begin(), layer.biases.end());
  }
  return theta;
}

std::vector<double> Network::forward(std::span<const double> x) const {
  if (x.size() != input_dim()) {
    throw ShapeError("input has dimension " + std::to_string(x.size()) + ", network expects " +
                     std::to_string(input_dim()));
  }
  std::vector<double> current(x.begin(), x.end());
  std::vector<double> next;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const Layer& layer = layers_[l];
    next.assign(layer.outputs, 0.0);
    for (std::size_t j = 0; j < layer.outputs; ++j) {
      double acc = layer.biases[j];
      const double* row = layer.weights.data() + j * layer.inputs;
      for (std::size_t i = 0; i < layer.inputs; ++i) acc += row[i] * current[i];
      next[j] = l + 1 < layers_.size() ? activation_(acc) : acc;
    }
    current.swap(next);
  }
  return current;
}

double Network::forward_scalar(double x) const {
  const double in[1] = {x};
  const auto out = forward(in);
  if (out.size() != 1) throw ShapeError("network output is not scalar");
  return out[0];
}

namespace {

template <typename T>
std::vector<T> evaluate_grid_impl(const Network& net, std::span<const T> xs) {
  if (!net.is_scalar()) throw ShapeError("grid evaluation needs a scalar-in, scalar-out network");
  constexpr std::size_t kBlock = 512;
  const auto& layers = net.layers();
  const auto& act = net.activation();

  std::size_t max_width = 1;
  for (const Layer& layer : layers) max_width = std::max(max_width, layer.outputs);

  // Parameters converted once so the single-precision path rounds them the same way each time.
  std::vector<std::vector<T>> weights(layers.size());
  std::vector<std::vector<T>> biases(layers.size());
  for (std::size_t l = 0; l < layers.size(); ++l) {
    weights[l].assign(layers[l].weights.begin(), layers[l].weights.end());
    biases[l].assign(layers[l].biases.begin(), layers[l].biases.end());
  }

  std::vector<T> out(xs.size());
  std::vector<T> cur(max_width * kBlock);
  std::vector<T> nxt(max_width * kBlock);
  for (std::size_t start = 0; start < xs.size(); start += kBlock) {
    const std::size_t count = std::min(kBlock, xs.size() - start);
    std::copy_n(xs.begin() + static_cast<std::ptrdiff_t>(start), count, cur.begin());
    for (std::size_t l = 0; l < layers.size(); ++l) {
      const Layer& layer = layers[l];
      const bool hidden = l + 1 < layers.size();
      for (std::size_t j = 0; j < layer.outputs; ++j) {
        T* dst = nxt.data() + j * kBlock;
        std::fill_n(dst, count, biases[l][j]);
        for (std::size_t i = 0; i < layer.inputs; ++i) {
          const T w = weights[l][j * layer.inputs + i];
          const T* src = cur.data() + i * kBlock;
          for (std::size_t n = 0; n < count; ++n) dst[n] += w * src[n];
        }
        if (hidden) {
          for (std::size_t n = 0; n < count; ++n) dst[n] = act(dst[n]);
        }
      }
      cur.swap(nxt);
    }
    std::copy_n(cur.begin(), count, out.begin() + static_cast<std::ptrdiff_t>(start));
  }
  return out;
}

}  // namespace

std::vector<double> Network::evaluate_grid(std::span<const double> xs) const {
  return evaluate_grid_impl(*this, xs);
}

std::vector<float> Network::evaluate_grid(std::span<const float> xs) const {
  return evaluate_grid_impl(*this, xs);
}

std::optional<std::vector<double>> standardize(std::span<const double> values) {
  if (values.size() < 2) throw ShapeError("standardize needs at least two values");
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / n);
  if (!(sd >= kDegenerateStddev)) return std::nullopt;
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(),
                 [&](double v) { return (v - mean) / sd; });
  return out;
}

}  // namespace expressivity
