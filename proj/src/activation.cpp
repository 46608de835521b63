#include "expressivity/activation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "expressivity/error.hpp"

namespace expressivity {

ActivationSpec::ActivationSpec(Kind kind, std::vector<double> breakpoints,
                               std::vector<double> slopes, double value_at_first_breakpoint)
    : kind_(kind), breakpoints_(std::move(breakpoints)), slopes_(std::move(slopes)) {
  if (breakpoints_.empty()) {
    throw NoKinkError("activation must have at least one breakpoint");
  }
  if (slopes_.size() != breakpoints_.size() + 1) {
    throw ConfigError("activation needs exactly one slope per piece (breakpoints + 1)");
  }
  if (!std::isfinite(value_at_first_breakpoint)) {
    throw ConfigError("activation value at first breakpoint must be finite");
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i])) throw ConfigError("activation breakpoints must be finite");
    if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i])) {
      throw ConfigError("activation breakpoints must be strictly increasing");
    }
  }
  for (std::size_t k = 0; k < slopes_.size(); ++k) {
    if (!std::isfinite(slopes_[k])) throw ConfigError("activation slopes must be finite");
    if (k > 0 && slopes_[k] == slopes_[k - 1]) {
      throw ConfigError("adjacent activation slopes must differ (breakpoint " + std::to_string(k - 1) +
                        " is not a kink)");
    }
  }

  breakpoint_values_.resize(breakpoints_.size());
  breakpoint_values_[0] = value_at_first_breakpoint;
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    breakpoint_values_[i] =
        breakpoint_values_[i - 1] + slopes_[i] * (breakpoints_[i] - breakpoints_[i - 1]);
  }
  intercepts_.resize(slopes_.size());
  intercepts_[0] = breakpoint_values_[0] - slopes_[0] * breakpoints_[0];
  for (std::size_t k = 1; k < slopes_.size(); ++k) {
    intercepts_[k] = breakpoint_values_[k - 1] - slopes_[k] * breakpoints_[k - 1];
  }
}

ActivationSpec ActivationSpec::relu() { return ActivationSpec(Kind::ReLU, {0.0}, {0.0, 1.0}, 0.0); }

ActivationSpec ActivationSpec::generic(std::vector<double> breakpoints, std::vector<double> slopes,
                                       double value_at_first_breakpoint) {
  return ActivationSpec(Kind::GenericPWL, std::move(breakpoints), std::move(slopes),
                        value_at_first_breakpoint);
}

ActivationSpec ActivationSpec::hard_tanh() { return generic({-1.0, 1.0}, {0.0, 1.0, 0.0}, -1.0); }

ActivationSpec ActivationSpec::relu_as_generic() { return generic({0.0}, {0.0, 1.0}, 0.0); }

std::size_t ActivationSpec::piece_index(double z) const noexcept {
  return static_cast<std::size_t>(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), z) -
                                  breakpoints_.begin());
}

template <typename T>
T ActivationSpec::evaluate(T z) const noexcept {
  if (kind_ == Kind::ReLU) return z > T(0) ? z : T(0);
  const std::size_t k = piece_index(static_cast<double>(z));
  // Anchor each piece at a breakpoint so the ReLU-shaped generic spec is exact.
  const std::size_t anchor = k == 0 ? 0 : k - 1;
  return static_cast<T>(breakpoint_values_[anchor]) +
         static_cast<T>(slopes_[k]) * (z - static_cast<T>(breakpoints_[anchor]));
}

double ActivationSpec::operator()(double z) const noexcept { return evaluate(z); }
float ActivationSpec::operator()(float z) const noexcept { return evaluate(z); }

std::string ActivationSpec::describe() const {
  if (kind_ == Kind::ReLU) return "relu";
  if (*this == hard_tanh()) return "hard_tanh";
  std::ostringstream os;
  os << "generic(" << breakpoints_.size() << " kinks)";
  return os.str();
}

}  // namespace expressivity
