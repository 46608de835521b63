#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expressivity/activation.hpp"
#include "expressivity/network.hpp"
#include "expressivity/pwl.hpp"

namespace expressivity {

/// Shape and output map of a folding (sawtooth) ReLU network.
///
/// Hidden layer l has n_l units split into p_l = floor(n_l / n0) groups of n0
/// units plus n_l - p_l * n0 zero-parameter remainder units. The output map is
/// y_k = sum_j w_kj x_j + b_k applied to the folded coordinates; w must be
/// strictly positive. Empty weight/bias vectors default to w = 1, b = 0.
struct FoldSpec {
  std::size_t input_dim = 1;
  std::vector<std::size_t> hidden_widths;
  std::size_t output_dim = 1;
  std::vector<double> output_weights;  // output_dim x input_dim, row-major
  std::vector<double> output_biases;

  std::vector<std::size_t> groups_per_layer() const;
  void validate() const;
};

/// Builds the folding network. Layer 1 computes, for group i = 0..p-1 and
/// coordinate j, p x_j (i = 0) or 2p x_j - 2i (i > 0). Every later hidden layer
/// first sums the previous groups with alternating signs, which yields the
/// tent-like fold h_j(x) in [0, 1], and then applies the same map. The output
/// layer applies the alternating sum followed by the output map. Each fold
/// maps its p pieces [t/p, (t+1)/p] onto [0, 1].
Network build_fold_network(const FoldSpec& spec);

/// The single block h: one hidden layer of `width` units whose output is the
/// alternating sum (n0 outputs, identity output map).
Network fold_block_network(std::size_t input_dim, std::size_t width);

/// prod_l floor(n_l / n0)^(-n0). Throws ConstructionError if some n_l < n0.
double lemma2_bound(std::size_t input_dim, const std::vector<std::size_t>& hidden_widths);
/// prod_l floor(n_l / (2 n0))^(-n0). Throws ConstructionError if some n_l < 2 n0.
double theorem1_bound(std::size_t input_dim, const std::vector<std::size_t>& hidden_widths);

/// Denominator D of a bound 1/D when it fits in 64 bits.
std::optional<std::uint64_t> bound_denominator(std::size_t input_dim,
                                               const std::vector<std::size_t>& hidden_widths,
                                               std::size_t width_divisor);

struct BoundReport {
  std::size_t input_dim = 1;
  std::vector<std::size_t> hidden_widths;
  std::string activation;
  double achieved_fineness = 1.0;
  double bound = 1.0;
  bool attains = false;
  std::vector<std::size_t> groups_per_layer;      // p_l of the half-width fold network
  std::vector<std::size_t> converted_widths;      // hidden widths of the converted network
  std::size_t parameter_count = 0;                // of the converted network
  std::size_t relu_parameter_count = 0;           // of the half-width ReLU network
  bool exact = true;  // false when fineness came from per-axis traces (n0 >= 2)
};

/// Builds the fold network at half widths floor(n_l / 2), converts it to
/// `target` with relu_to_pwl (zero-padding odd widths back to n_l), measures its
/// fineness and compares with theorem1_bound. For n0 = 1 the fineness is
/// traced exactly; for n0 >= 2 the network output is a sum of per-coordinate
/// folds, so the fineness is the product of per-axis traced fineness values.
BoundReport verify_theorem1(std::size_t input_dim, const std::vector<std::size_t>& hidden_widths,
                            const ActivationSpec& target);

/// Product of per-axis fineness values of output 0, each traced along the
/// axis through `base`.
double axis_product_fineness(const Network& net, const std::vector<double>& base);

std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& report);

/// Zero-pads hidden layer widths of `net` up to `widths` (extra units get
/// all-zero parameters and zero outgoing weights).
Network pad_hidden_widths(const Network& net, const std::vector<std::size_t>& widths);

}  // namespace expressivity
