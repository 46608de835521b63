#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "expressivity/activation.hpp"

namespace expressivity {

/// Layer widths of a fully connected network.
///
/// `widths` lists n_1..n_L, so the last entry is the output dimension and the
/// network depth L is `widths.size()`. Hidden layers are n_1..n_{L-1}.
struct NetworkShape {
  std::size_t input_dim = 1;
  std::vector<std::size_t> widths;

  std::size_t depth() const noexcept { return widths.size(); }
  std::size_t output_dim() const { return widths.back(); }
  std::vector<std::size_t> hidden_widths() const;
  /// Total parameter count M = sum_l (n_l * n_{l-1} + n_l).
  std::size_t parameter_count() const noexcept;
  /// Hidden unit count S = n_1 + ... + n_{L-1}.
  std::size_t hidden_unit_count() const noexcept;
  void validate() const;

  static NetworkShape from_hidden(std::size_t input_dim, const std::vector<std::size_t>& hidden,
                                  std::size_t output_dim);

  friend bool operator==(const NetworkShape&, const NetworkShape&) = default;
};

/// Flat parameter vector theta.
///
/// Canonical order, frozen so seeds reproduce: for each layer l = 1..L, the
/// weight matrix row-major (w_{j,1} .. w_{j,n_{l-1}} for j = 1..n_l), then the
/// n_l biases.
struct ParamVector {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const ParamVector&, const ParamVector&) = default;
};

struct Layer {
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  std::vector<double> weights;  // outputs x inputs, row-major
  std::vector<double> biases;

  Layer() = default;
  Layer(std::size_t inputs, std::size_t outputs);

  double& weight(std::size_t j, std::size_t i) { return weights[j * inputs + i]; }
  double weight(std::size_t j, std::size_t i) const { return weights[j * inputs + i]; }
};

/// F_theta = f^(L) o g o f^(L-1) o ... o g o f^(1), with one activation g
/// shared by all hidden layers and none after the output layer.
class Network {
public:
  Network(std::size_t input_dim, std::vector<Layer> layers, ActivationSpec activation);

  static Network from_params(const NetworkShape& shape, const ParamVector& theta,
                             ActivationSpec activation);
  static Network zeros(const NetworkShape& shape, ActivationSpec activation);

  ParamVector pack() const;

  const NetworkShape& shape() const noexcept { return shape_; }
  std::size_t input_dim() const noexcept { return shape_.input_dim; }
  std::size_t output_dim() const noexcept { return shape_.output_dim(); }
  std::size_t depth() const noexcept { return layers_.size(); }
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  const Layer& layer(std::size_t l) const { return layers_.at(l); }
  const ActivationSpec& activation() const noexcept { return activation_; }
  bool is_scalar() const noexcept { return input_dim() == 1 && output_dim() == 1; }

  std::vector<double> forward(std::span<const double> x) const;
  double forward_scalar(double x) const;

  /// Batched evaluation of a scalar-in, scalar-out network. Uses the same
  /// accumulation order as forward(), so results are bit-identical to it.
  std::vector<double> evaluate_grid(std::span<const double> xs) const;
  /// Single-precision batched evaluation: parameters are rounded to float and
  /// every operation runs in float.
  std::vector<float> evaluate_grid(std::span<const float> xs) const;

private:
  NetworkShape shape_;
  std::vector<Layer> layers_;
  ActivationSpec activation_;
};

/// (v - mean) / stddev with the population convention (divisor N).
/// Returns nullopt when the stddev is below 1e-12 (constant signal).
std::optional<std::vector<double>> standardize(std::span<const double> values);

inline constexpr double kDegenerateStddev = 1e-12;

}  // namespace expressivity
