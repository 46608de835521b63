#include "expressivity/sampling.hpp"

#include <cmath>

#include "expressivity/error.hpp"

namespace expressivity {

std::string to_string(Distribution d) {
  return d == Distribution::Uniform01 ? "uniform01" : "standard_normal";
}

Distribution distribution_from_string(const std::string& name) {
  if (name == "standard_normal" || name == "normal") return Distribution::StandardNormal;
  if (name == "uniform01" || name == "uniform") return Distribution::Uniform01;
  throw ConfigError("unknown distribution '" + name + "'");
}

std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t index) noexcept {
  std::uint64_t z = (base_seed ^ index) + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::uniform01() noexcept {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::standard_normal() noexcept {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

ParamVector sample_param(const NetworkShape& shape, Distribution d, std::uint64_t seed,
                         std::uint64_t index) {
  Rng rng(stream_seed(seed, index));
  ParamVector theta;
  theta.values.resize(shape.parameter_count());
  for (double& v : theta.values) v = rng.draw(d);
  return theta;
}

std::vector<ParamVector> sample_params(const NetworkShape& shape, const SamplerConfig& cfg) {
  shape.validate();
  std::vector<ParamVector> out;
  out.reserve(cfg.draw_count);
  for (std::size_t i = 0; i < cfg.draw_count; ++i) {
    out.push_back(sample_param(shape, cfg.distribution, cfg.seed, i));
  }
  return out;
}

}  // namespace expressivity
