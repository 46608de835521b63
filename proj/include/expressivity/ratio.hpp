#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "expressivity/grid.hpp"
#include "expressivity/network.hpp"
#include "expressivity/sampling.hpp"
#include "expressivity/targets.hpp"

namespace expressivity {

/// eps_k = offset + step * (k - 1), k = 1..count.
struct EpsilonGrid {
  double offset = 0.4;
  double step = 4e-5;
  std::size_t count = 10000;

  double at(std::size_t k0) const noexcept { return offset + step * static_cast<double>(k0); }
  std::vector<double> values() const;

  /// (0.4, 4e-5, 1e4) for sin4pi, (0.6, 2e-5, 1e4) for weierstrass.
  static EpsilonGrid defaults_for(const TargetFunction& target);
};

struct RatioConfig {
  std::size_t grid_count = 10000;    // N, samples x_n = (n - 1) / N
  std::size_t theta_draws = 20000;
  EpsilonGrid epsilon;
  std::uint64_t seed = 0;
  std::size_t workers = 1;

  static RatioConfig defaults_for(const TargetFunction& target);
};

struct RatioCurve {
  std::string network;
  std::string target;
  std::size_t draws = 0;
  std::uint64_t seed = 0;
  std::vector<double> epsilons;
  std::vector<double> ratios;
  std::size_t degenerate_draws = 0;  // constant-output draws, counted as failures
  double min_distance = 0.0;         // smallest finite d-hat over all draws
};

/// Mean squared difference (1/N) sum (f_n - g_n)^2.
double empirical_distance(std::span<const double> f_vals, std::span<const double> g_vals);

/// Distance of one parameter draw to the target samples: network outputs on
/// the grid are standardized (the target is not); a constant output yields
/// +infinity so it fails every threshold.
double draw_distance(const Network& net, std::span<const double> xs, std::span<const double> target_vals);

/// Monte Carlo estimate of the ratio of desired parameters R_eps for the
/// architecture of `net` (its parameters are ignored; theta ~ N(0, 1) per
/// draw, draw i from stream (seed, i)). R_eps_k = #{draws with d <= eps_k} / draws.
RatioCurve estimate_ratio_curve(const Network& net, const TargetFunction& target,
                                const RatioConfig& cfg, const std::string& label = "network");

/// Fraction of epsilon values where curve a is at least curve b.
double dominance_fraction(const RatioCurve& a, const RatioCurve& b);

/// `# key=value` header lines, then `epsilon,ratio` rows.
std::string to_csv(const RatioCurve& curve);

struct FinenessSearchConfig {
  std::size_t draws = 1000;
  std::size_t grid_count = kDefaultGridCount;
  double threshold = kDefaultSlopeThreshold;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  Distribution distribution = Distribution::Uniform01;
  Precision precision = Precision::Double;
};

struct FinenessSearchReport {
  std::string network;
  std::uint64_t seed = 0;
  std::size_t draws = 0;
  std::size_t grid_count = 0;
  double min_fineness = 1.0;
  std::size_t argmin = 0;
  std::vector<double> per_draw;
  /// Exact-tracer fineness of the argmin draw and its smallest slope jump.
  double exact_fineness_at_argmin = 1.0;
  double min_slope_jump_at_argmin = 0.0;
  bool cross_check_agrees = true;
  std::vector<std::string> notes;
};

/// Random search for min_theta I(F_theta) with the grid detector.
FinenessSearchReport min_fineness_search(const NetworkShape& shape, const FinenessSearchConfig& cfg,
                                         const std::string& label = "network",
                                         const ActivationSpec& activation = ActivationSpec::relu());

/// `# key=value` header lines, `draw_index,fineness` rows and a `min,<value>` footer.
std::string to_csv(const FinenessSearchReport& report);

}  // namespace expressivity
