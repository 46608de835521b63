#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace expressivity {

/// Target function F* on [0, 1].
///
/// Sin4Pi is sin(4 pi x). Weierstrass is sum_{k=0}^{K} a^k cos(b^k pi x) with
/// 0 < a < 1, b > 1 and a^(K+1) / (1 - a) < 1e-9. For integer b the phase
/// b^k x mod 2 is reduced exactly from the binary expansion of x, so the high
/// frequency terms stay accurate.
struct TargetFunction {
  enum class Kind { Sin4Pi, Weierstrass };

  Kind kind = Kind::Sin4Pi;
  double amplitude_ratio = 0.5;  // a
  double frequency_base = 13.0;  // b
  std::size_t terms = 30;        // K

  static TargetFunction sin4pi() { return {}; }
  static TargetFunction weierstrass(double a = 0.5, double b = 13.0, std::size_t terms = 30);

  void validate() const;
  std::string name() const;
  double operator()(double x) const;
  std::vector<double> sample(std::span<const double> xs) const;
};

/// Parses "sin4pi" / "sin" or "weierstrass" (default parameters).
TargetFunction target_from_name(const std::string& name);

}  // namespace expressivity
