#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expressivity/activation.hpp"
#include "expressivity/grid.hpp"
#include "expressivity/network.hpp"
#include "expressivity/ratio.hpp"
#include "expressivity/sampling.hpp"
#include "expressivity/targets.hpp"

namespace expressivity::harness {

struct NamedShape {
  std::string name;
  NetworkShape shape;
};

/// The two compared architectures: network1 = 1-4-4-4-4-4-1 (L = 6) and
/// network2 = 1-20-1 (L = 2), both with 22 hidden units.
std::vector<NamedShape> default_networks();

struct RatioSection {
  std::size_t grid_count = 10000;
  std::size_t theta_draws = 20000;
  /// Per-target epsilon grids keyed by target name; missing targets use their defaults.
  std::map<std::string, EpsilonGrid> epsilon;

  EpsilonGrid epsilon_for(const TargetFunction& target) const;
};

struct FinenessSection {
  std::size_t draws = 1000;
  std::size_t grid_count = kDefaultGridCount;
  double threshold = kDefaultSlopeThreshold;
  Distribution distribution = Distribution::Uniform01;
  Precision precision = Precision::Double;
};

struct VerifySection {
  ActivationSpec activation = ActivationSpec::hard_tanh();
  std::size_t oracle_networks = 100;
  std::size_t oracle_grid = kDefaultGridCount;
  double oracle_threshold = kDefaultSlopeThreshold;
  std::size_t corollary_networks = 1000;
  std::size_t refinement_pairs = 200;
};

struct ExperimentConfig {
  std::vector<NamedShape> networks = default_networks();
  std::vector<TargetFunction> targets{TargetFunction::sin4pi(), TargetFunction::weierstrass()};
  RatioSection ratio;
  FinenessSection fineness;
  VerifySection verify;
  std::filesystem::path output_dir = "results";
  std::uint64_t seed = 0;
  std::size_t workers = 1;

  /// Throws ConfigError on an empty network list, duplicate names or bad shapes.
  void validate() const;
};

/// Parses the JSON config. Every key is optional; unknown keys and unknown
/// target names are rejected with a ConfigError that names them.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Command-line overrides applied on top of a config.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::size_t> draws;  // fineness draws and ratio theta draws
  std::optional<std::size_t> grid;   // fineness grid and ratio sample count
};

void apply_overrides(ExperimentConfig& cfg, const Overrides& o);

}  // namespace expressivity::harness
