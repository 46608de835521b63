#include "expressivity/grid.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "expressivity/error.hpp"

namespace expressivity {

std::string to_string(Precision p) { return p == Precision::Single ? "single" : "double"; }

Precision precision_from_string(const std::string& name) {
  if (name == "double" || name == "float64") return Precision::Double;
  if (name == "single" || name == "float32") return Precision::Single;
  throw ConfigError("unknown precision '" + name + "'");
}

namespace {

template <typename T>
std::vector<T> unit_grid(std::size_t count) {
  std::vector<T> xs(count);
  for (std::size_t n = 0; n < count; ++n) {
    xs[n] = static_cast<T>(static_cast<double>(n) / static_cast<double>(count));
  }
  return xs;
}

template <typename T>
double detect(std::span<const T> xs, std::span<const T> fs, T threshold) {
  const std::size_t count = fs.size();
  std::size_t run = 0;
  std::size_t longest = 0;
  for (std::size_t n = 0; n + 2 < count; ++n) {
    const T g0 = (fs[n + 1] - fs[n]) / (xs[n + 1] - xs[n]);
    const T g1 = (fs[n + 2] - fs[n + 1]) / (xs[n + 2] - xs[n + 1]);
    const T d = std::abs(g1 - g0);
    if (d < threshold) {
      ++run;
    } else {
      longest = std::max(longest, run);
      run = 0;
    }
  }
  longest = std::max(longest, run);
  return static_cast<double>(longest) / static_cast<double>(count);
}

}  // namespace

double grid_fineness(const Network& net, std::size_t grid_count, double threshold, Precision precision) {
  if (!net.is_scalar()) throw ShapeError("grid fineness needs a scalar-in, scalar-out network");
  if (grid_count < 3) throw ConfigError("grid fineness needs at least 3 grid points");
  if (precision == Precision::Single) {
    const auto xs = unit_grid<float>(grid_count);
    const auto fs = net.evaluate_grid(std::span<const float>(xs));
    return detect<float>(xs, fs, static_cast<float>(threshold));
  }
  const auto xs = unit_grid<double>(grid_count);
  const auto fs = net.evaluate_grid(std::span<const double>(xs));
  return detect<double>(xs, fs, threshold);
}

double grid_fineness_from_samples(std::span<const double> values, double threshold) {
  if (values.size() < 3) throw ConfigError("grid fineness needs at least 3 grid points");
  const auto xs = unit_grid<double>(values.size());
  return detect<double>(xs, values, threshold);
}

}  // namespace expressivity
