#include "expressivity/construction.hpp"

#include <cmath>
#include <sstream>

#include "expressivity/conversion.hpp"
#include "expressivity/csv.hpp"
#include "expressivity/error.hpp"
#include "expressivity/trace.hpp"

namespace expressivity {

std::vector<std::size_t> FoldSpec::groups_per_layer() const {
  std::vector<std::size_t> p;
  p.reserve(hidden_widths.size());
  for (std::size_t n : hidden_widths) p.push_back(input_dim == 0 ? 0 : n / input_dim);
  return p;
}

void FoldSpec::validate() const {
  if (input_dim == 0) throw ConstructionError("fold network needs input_dim >= 1");
  if (output_dim == 0) throw ConstructionError("fold network needs output_dim >= 1");
  for (std::size_t l = 0; l < hidden_widths.size(); ++l) {
    if (hidden_widths[l] < input_dim) {
      throw ConstructionError("hidden layer " + std::to_string(l + 1) + " has width " +
                              std::to_string(hidden_widths[l]) + " < input_dim " + std::to_string(input_dim));
    }
  }
  if (!output_weights.empty()) {
    if (output_weights.size() != output_dim * input_dim) {
      throw ConstructionError("output weights must have output_dim x input_dim entries");
    }
    for (double w : output_weights) {
      if (!(w > 0.0)) throw ConstructionError("output weights must be strictly positive");
    }
  }
  if (!output_biases.empty() && output_biases.size() != output_dim) {
    throw ConstructionError("output biases must have output_dim entries");
  }
}

namespace {

Network build_fold(std::size_t n0, const std::vector<std::size_t>& widths, std::size_t out_dim,
                   const std::vector<double>& out_w, const std::vector<double>& out_b) {
  std::vector<Layer> layers;
  std::size_t prev_width = n0;
  std::size_t prev_groups = 0;  // 0 marks the raw input
  for (std::size_t n : widths) {
    const std::size_t p = n / n0;
    Layer layer(prev_width, n);
    for (std::size_t i = 0; i < p; ++i) {
      const double coef = i == 0 ? static_cast<double>(p) : 2.0 * static_cast<double>(p);
      for (std::size_t j = 0; j < n0; ++j) {
        const std::size_t u = i * n0 + j;
        if (prev_groups == 0) {
          layer.weight(u, j) = coef;
        } else {
          for (std::size_t ip = 0; ip < prev_groups; ++ip) {
            layer.weight(u, ip * n0 + j) = ip % 2 == 0 ? coef : -coef;
          }
        }
        layer.biases[u] = i == 0 ? 0.0 : -2.0 * static_cast<double>(i);
      }
    }
    layers.push_back(std::move(layer));
    prev_width = n;
    prev_groups = p;
  }

  Layer out(prev_width, out_dim);
  for (std::size_t k = 0; k < out_dim; ++k) {
    for (std::size_t j = 0; j < n0; ++j) {
      const double w = out_w.empty() ? 1.0 : out_w[k * n0 + j];
      if (prev_groups == 0) {
        out.weight(k, j) = w;
      } else {
        for (std::size_t ip = 0; ip < prev_groups; ++ip) {
          out.weight(k, ip * n0 + j) = ip % 2 == 0 ? w : -w;
        }
      }
    }
    out.biases[k] = out_b.empty() ? 0.0 : out_b[k];
  }
  layers.push_back(std::move(out));
  return Network(n0, std::move(layers), ActivationSpec::relu());
}

double bound_value(std::size_t n0, const std::vector<std::size_t>& widths, std::size_t divisor) {
  if (n0 == 0) throw ConstructionError("input_dim must be at least 1");
  for (std::size_t l = 0; l < widths.size(); ++l) {
    if (widths[l] < divisor * n0) {
      throw ConstructionError("hidden layer " + std::to_string(l + 1) + " has width " +
                              std::to_string(widths[l]) + ", bound needs at least " +
                              std::to_string(divisor * n0));
    }
  }
  if (auto den = bound_denominator(n0, widths, divisor); den && *den <= (std::uint64_t{1} << 53)) {
    return 1.0 / static_cast<double>(*den);
  }
  long double value = 1.0L;
  for (std::size_t n : widths) {
    value /= std::pow(static_cast<long double>(n / (divisor * n0)), static_cast<long double>(n0));
  }
  return static_cast<double>(value);
}

}  // namespace

Network build_fold_network(const FoldSpec& spec) {
  spec.validate();
  return build_fold(spec.input_dim, spec.hidden_widths, spec.output_dim, spec.output_weights,
                    spec.output_biases);
}

Network fold_block_network(std::size_t input_dim, std::size_t width) {
  if (input_dim == 0 || width < input_dim) {
    throw ConstructionError("fold block needs width >= input_dim >= 1");
  }
  // Identity output map: output j is the alternating sum of coordinate j.
  std::vector<double> identity(input_dim * input_dim, 0.0);
  for (std::size_t j = 0; j < input_dim; ++j) identity[j * input_dim + j] = 1.0;
  return build_fold(input_dim, {width}, input_dim, identity, {});
}

std::optional<std::uint64_t> bound_denominator(std::size_t n0, const std::vector<std::size_t>& widths,
                                               std::size_t divisor) {
  std::uint64_t den = 1;
  for (std::size_t n : widths) {
    const std::uint64_t p = n / (divisor * n0);
    for (std::size_t e = 0; e < n0; ++e) {
      if (__builtin_mul_overflow(den, p, &den)) return std::nullopt;
    }
  }
  return den;
}

double lemma2_bound(std::size_t input_dim, const std::vector<std::size_t>& hidden_widths) {
  return bound_value(input_dim, hidden_widths, 1);
}

double theorem1_bound(std::size_t input_dim, const std::vector<std::size_t>& hidden_widths) {
  return bound_value(input_dim, hidden_widths, 2);
}

Network pad_hidden_widths(const Network& net, const std::vector<std::size_t>& widths) {
  if (widths.size() + 1 != net.depth()) throw ShapeError("padding needs one width per hidden layer");
  std::vector<Layer> layers;
  std::size_t prev = net.input_dim();
  for (std::size_t l = 0; l < net.depth(); ++l) {
    const Layer& src = net.layer(l);
    const std::size_t outputs = l + 1 < net.depth() ? widths[l] : src.outputs;
    if (outputs < src.outputs) throw ShapeError("padding cannot shrink a layer");
    Layer dst(prev, outputs);
    for (std::size_t j = 0; j < src.outputs; ++j) {
      for (std::size_t i = 0; i < src.inputs; ++i) dst.weight(j, i) = src.weight(j, i);
      dst.biases[j] = src.biases[j];
    }
    layers.push_back(std::move(dst));
    prev = outputs;
  }
  return Network(net.input_dim(), std::move(layers), net.activation());
}

double axis_product_fineness(const Network& net, const std::vector<double>& base) {
  double product = 1.0;
  for (std::size_t axis = 0; axis < net.input_dim(); ++axis) {
    product *= fineness(trace_axis(net, base, axis, 0));
  }
  return product;
}

BoundReport verify_theorem1(std::size_t input_dim, const std::vector<std::size_t>& hidden_widths,
                            const ActivationSpec& target) {
  BoundReport report;
  report.input_dim = input_dim;
  report.hidden_widths = hidden_widths;
  report.activation = target.describe();
  report.bound = theorem1_bound(input_dim, hidden_widths);

  FoldSpec half;
  half.input_dim = input_dim;
  for (std::size_t n : hidden_widths) half.hidden_widths.push_back(n / 2);
  report.groups_per_layer = half.groups_per_layer();
  const Network relu_net = build_fold_network(half);
  report.relu_parameter_count = relu_net.shape().parameter_count();

  const std::vector<Interval> box(input_dim, kUnitInterval);
  const Network converted = pad_hidden_widths(relu_to_pwl(relu_net, target, box), hidden_widths);
  report.converted_widths = converted.shape().hidden_widths();
  report.parameter_count = converted.shape().parameter_count();

  if (input_dim == 1) {
    report.achieved_fineness = fineness(trace_exact(converted));
    report.exact = true;
  } else {
    report.achieved_fineness = axis_product_fineness(converted, std::vector<double>(input_dim, 0.37));
    report.exact = false;
  }
  report.attains = report.achieved_fineness <= report.bound + 1e-12;
  return report;
}

std::string bound_report_csv_header() {
  return "input_dim,hidden_widths,activation,achieved_fineness,bound,attains,groups_per_layer,"
         "converted_widths,parameter_count,relu_parameter_count,exact\n";
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string bound_report_csv_row(const BoundReport& r) {
  std::ostringstream os;
  os << r.input_dim << ',' << join(r.hidden_widths) << ',' << r.activation << ','
     << format_double(r.achieved_fineness) << ',' << format_double(r.bound) << ','
     << (r.attains ? "true" : "false") << ',' << join(r.groups_per_layer) << ','
     << join(r.converted_widths) << ',' << r.parameter_count << ',' << r.relu_parameter_count << ','
     << (r.exact ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace expressivity
