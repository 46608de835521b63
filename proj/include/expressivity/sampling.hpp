#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "expressivity/network.hpp"

namespace expressivity {

enum class Distribution { StandardNormal, Uniform01 };

std::string to_string(Distribution d);
Distribution distribution_from_string(const std::string& name);

struct SamplerConfig {
  Distribution distribution = Distribution::StandardNormal;
  std::uint64_t seed = 0;
  std::size_t draw_count = 1;
};

/// Stream seed for draw `index` under `base_seed`: splitmix64(base_seed ^ index).
/// Every draw owns its stream, so results never depend on how draws are split
/// across workers.
std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t index) noexcept;

/// Portable random source: mt19937_64 bits mapped to doubles by hand, so a
/// given seed yields the same values with every standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept;
  /// Standard normal via the Marsaglia polar method.
  double standard_normal() noexcept;
  double draw(Distribution d) noexcept {
    return d == Distribution::Uniform01 ? uniform01() : standard_normal();
  }

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// One parameter vector for `shape`, drawn from stream (seed, index).
ParamVector sample_param(const NetworkShape& shape, Distribution d, std::uint64_t seed,
                         std::uint64_t index);

/// cfg.draw_count parameter vectors; draw i comes from stream (cfg.seed, i).
std::vector<ParamVector> sample_params(const NetworkShape& shape, const SamplerConfig& cfg);

}  // namespace expressivity
