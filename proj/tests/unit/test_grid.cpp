#include <catch_amalgamated.hpp>

#include <algorithm>

#include "expressivity/error.hpp"
#include "expressivity/grid.hpp"
#include "expressivity/trace.hpp"
#include "helpers.hpp"

using namespace expressivity;
using Catch::Approx;

namespace {

// Independent transcription of the detector: runs of sub-threshold slope
// changes, longest run over the grid count.
double reference_detector(const std::vector<double>& f, double thr) {
  const std::size_t n = f.size();
  const double h = 1.0 / static_cast<double>(n);
  std::vector<std::size_t> runs;
  std::size_t count = 0;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const double g0 = (f[i + 1] - f[i]) / h;
    const double g1 = (f[i + 2] - f[i + 1]) / h;
    if (std::abs(g1 - g0) < thr) {
      ++count;
    } else {
      runs.push_back(count);
      count = 0;
    }
  }
  runs.push_back(count);
  return static_cast<double>(*std::max_element(runs.begin(), runs.end())) / static_cast<double>(n);
}

}  // namespace

TEST_CASE("detector on samples matches the reference loop", "[grid]") {
  const std::size_t n = 1000;
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) / n;
    f[i] = std::abs(x - 0.3) - 2.0 * std::max(0.0, x - 0.75);
  }
  CHECK(grid_fineness_from_samples(f, 0.5) == reference_detector(f, 0.5));
  CHECK(grid_fineness_from_samples(f, 0.5) == Approx(0.45).margin(3.0 / n));
}

TEST_CASE("a linear function yields (N - 2) / N", "[grid]") {
  Layer h(1, 1);
  h.weights = {1.0};
  h.biases = {1.0};
  Layer o(1, 1);
  o.weights = {3.0};
  o.biases = {0.0};
  const Network net(1, {h, o}, ActivationSpec::relu());
  CHECK(grid_fineness(net, 1000) == Approx(998.0 / 1000.0));
}

TEST_CASE("grid detector agrees with the reference on random networks", "[grid]") {
  const auto shape = NetworkShape::from_hidden(1, {4, 4, 4, 4, 4}, 1);
  for (std::uint64_t i = 0; i < 5; ++i) {
    const Network net = testing::random_relu(shape, 17, i);
    std::vector<double> xs(5000);
    for (std::size_t n = 0; n < xs.size(); ++n) xs[n] = static_cast<double>(n) / 5000.0;
    CHECK(grid_fineness(net, 5000) == reference_detector(net.evaluate_grid(xs), 0.5));
  }
}

TEST_CASE("kinks with jumps of at least twice the threshold are always found", "[grid]") {
  // Kink jump J inside a cell splits into lambda J and (1 - lambda) J; with
  // J >= 1 one of them reaches 0.5. Sweep the kink position across a cell.
  const std::size_t n = 1000;
  for (int s = 0; s <= 20; ++s) {
    const double kink = 0.4 + (static_cast<double>(s) / 20.0) / n;
    Layer h(1, 1);
    h.weights = {1.0};
    h.biases = {-kink};
    Layer o(1, 1);
    o.weights = {1.0};
    o.biases = {0.0};
    const Network net(1, {h, o}, ActivationSpec::relu());
    const double exact = fineness(trace_exact(net));
    CHECK(grid_fineness(net, n) == Approx(exact).margin(3.0 / n));
  }
}

TEST_CASE("a jump just above the threshold can hide inside a cell", "[grid]") {
  // J = 0.6 centred in a cell gives two chord differences of 0.3 each.
  const std::size_t n = 1000;
  const double kink = 0.4005;
  Layer h(1, 1);
  h.weights = {1.0};
  h.biases = {-kink};
  Layer o(1, 1);
  o.weights = {0.6};
  o.biases = {0.0};
  const Network net(1, {h, o}, ActivationSpec::relu());
  CHECK(fineness(trace_exact(net)) == Approx(1.0 - kink));
  CHECK(grid_fineness(net, n) == Approx(998.0 / n));
}

TEST_CASE("grid argument checks", "[grid]") {
  const Network net = Network::zeros(NetworkShape::from_hidden(1, {2}, 1), ActivationSpec::relu());
  CHECK_THROWS(grid_fineness(net, 2));
  CHECK(precision_from_string("single") == Precision::Single);
  CHECK_THROWS_AS(precision_from_string("half"), ConfigError);
}
