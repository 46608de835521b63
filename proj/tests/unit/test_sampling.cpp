#include <catch_amalgamated.hpp>

#include <cmath>

#include "expressivity/error.hpp"
#include "expressivity/sampling.hpp"

using namespace expressivity;

TEST_CASE("normal draws have mean 0 and variance 1", "[sampling]") {
  Rng rng(stream_seed(7, 0));
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.standard_normal();
    sum += z;
    sum_sq += z * z;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  // Five standard errors: sd(mean) = 1/sqrt(n), sd(var) ~ sqrt(2/n).
  CHECK(std::abs(mean) < 5.0 / std::sqrt(n));
  CHECK(std::abs(var - 1.0) < 5.0 * std::sqrt(2.0 / n));
}

TEST_CASE("uniform draws cover [0, 1) with mean 1/2 and variance 1/12", "[sampling]") {
  Rng rng(stream_seed(11, 3));
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0, lo = 1.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    sum_sq += u * u;
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  const double mean = sum / n;
  CHECK(std::abs(mean - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / n));
  CHECK(std::abs(sum_sq / n - mean * mean - 1.0 / 12.0) < 1e-3);
  CHECK(lo < 1e-3);
  CHECK(hi > 1.0 - 1e-3);
}

TEST_CASE("parameter draws are reproducible and independent of the batch", "[sampling]") {
  const auto shape = NetworkShape::from_hidden(1, {4, 4}, 1);
  SamplerConfig cfg{Distribution::StandardNormal, 123, 5};
  const auto a = sample_params(shape, cfg);
  const auto b = sample_params(shape, cfg);
  REQUIRE(a.size() == 5);
  CHECK(a == b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].size() == shape.parameter_count());
    CHECK(a[i] == sample_param(shape, Distribution::StandardNormal, 123, i));
  }
  CHECK(a[0] != a[1]);
  CHECK(sample_param(shape, Distribution::StandardNormal, 124, 0) != a[0]);
}

TEST_CASE("zero draws give an empty sequence", "[sampling]") {
  const auto shape = NetworkShape::from_hidden(1, {3}, 1);
  CHECK(sample_params(shape, SamplerConfig{Distribution::Uniform01, 0, 0}).empty());
}

TEST_CASE("distribution names", "[sampling]") {
  CHECK(distribution_from_string("uniform01") == Distribution::Uniform01);
  CHECK(distribution_from_string(to_string(Distribution::StandardNormal)) == Distribution::StandardNormal);
  CHECK_THROWS_AS(distribution_from_string("cauchy"), ConfigError);
}
