#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace expressivity {

/// Continuous piecewise-linear scalar activation.
///
/// Two kinds exist. `ReLU` is max(0, z); `GenericPWL` is described by strictly
/// increasing breakpoints t_0 < ... < t_{B-1}, one slope per piece (B + 1 of
/// them) and the value at t_0. Adjacent slopes must differ so every listed
/// breakpoint is a real kink. A ReLU activation also exposes its generic
/// description (one breakpoint at 0, slopes 0 and 1, value 0), which is what
/// the tracer and the ReLU converter consume.
class ActivationSpec {
public:
  enum class Kind { ReLU, GenericPWL };

  static ActivationSpec relu();
  static ActivationSpec generic(std::vector<double> breakpoints, std::vector<double> slopes,
                                double value_at_first_breakpoint);
  /// max(-1, min(1, z)) as a generic activation.
  static ActivationSpec hard_tanh();
  /// ReLU spelled out as a GenericPWL; must evaluate identically to relu().
  static ActivationSpec relu_as_generic();

  Kind kind() const noexcept { return kind_; }
  bool is_relu() const noexcept { return kind_ == Kind::ReLU; }

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<double>& slopes() const noexcept { return slopes_; }
  double value_at_first_breakpoint() const noexcept { return breakpoint_values_.front(); }
  double value_at_breakpoint(std::size_t i) const { return breakpoint_values_.at(i); }

  /// Index of the piece containing z; a point on a breakpoint belongs to the right piece.
  std::size_t piece_index(double z) const noexcept;
  std::size_t piece_count() const noexcept { return slopes_.size(); }

  /// sigma(z) = piece_slope(k) * z + piece_intercept(k) on piece k.
  double piece_slope(std::size_t k) const { return slopes_.at(k); }
  double piece_intercept(std::size_t k) const { return intercepts_.at(k); }

  double operator()(double z) const noexcept;
  float operator()(float z) const noexcept;

  std::string describe() const;

  friend bool operator==(const ActivationSpec& a, const ActivationSpec& b) {
    return a.kind_ == b.kind_ && a.breakpoints_ == b.breakpoints_ && a.slopes_ == b.slopes_ &&
           a.breakpoint_values_ == b.breakpoint_values_;
  }

private:
  ActivationSpec(Kind kind, std::vector<double> breakpoints, std::vector<double> slopes,
                 double value_at_first_breakpoint);

  template <typename T>
  T evaluate(T z) const noexcept;

  Kind kind_;
  std::vector<double> breakpoints_;
  std::vector<double> slopes_;
  std::vector<double> breakpoint_values_;
  std::vector<double> intercepts_;
};

}  // namespace expressivity
