#pragma once

#include <cmath>
#include <vector>

#include "expressivity/network.hpp"
#include "expressivity/sampling.hpp"

namespace testing {

inline expressivity::Network random_relu(const expressivity::NetworkShape& shape, std::uint64_t seed,
                                         std::uint64_t index = 0,
                                         expressivity::Distribution d = expressivity::Distribution::StandardNormal) {
  return expressivity::Network::from_params(shape, expressivity::sample_param(shape, d, seed, index),
                                            expressivity::ActivationSpec::relu());
}

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return xs;
}

// p-tooth tent map on [0, 1]: piece t of [t/p, (t+1)/p] rises for even t and falls for odd t.
inline double tent(std::size_t p, double x) {
  const double t = static_cast<double>(p) * x;
  double k = std::floor(t);
  if (k >= static_cast<double>(p)) k = static_cast<double>(p) - 1;
  const double frac = t - k;
  return static_cast<std::size_t>(k) % 2 == 0 ? frac : 1.0 - frac;
}

}  // namespace testing
