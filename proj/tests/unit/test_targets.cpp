#include <catch_amalgamated.hpp>

#include <numbers>

#include "expressivity/error.hpp"
#include "expressivity/targets.hpp"

using namespace expressivity;
using Catch::Approx;

TEST_CASE("sin target", "[targets]") {
  const auto t = TargetFunction::sin4pi();
  CHECK(t.name() == "sin4pi");
  CHECK(t(0.125) == Approx(1.0));
  CHECK(t(0.375) == Approx(-1.0));
  CHECK(t(0.0) == Approx(0.0).margin(1e-15));
}

TEST_CASE("weierstrass at the integers sums a geometric series", "[targets]") {
  const auto w = TargetFunction::weierstrass();  // a = 1/2, b = 13, K = 30
  const double series = 2.0 - std::ldexp(1.0, -30);  // sum_{k=0}^{30} 2^-k
  CHECK(w(0.0) == Approx(series).epsilon(1e-15));
  CHECK(w(1.0) == Approx(-series).epsilon(1e-15));  // cos(13^k pi) = -1
  CHECK(w(0.5) == Approx(0.0).margin(1e-12));       // cos(13^k pi / 2) = 0
}

TEST_CASE("weierstrass agrees with direct summation at low frequency", "[targets]") {
  const auto w = TargetFunction::weierstrass(0.6, 3.0, 60);
  for (double x : {0.1, 0.2371, 0.5, 0.9}) {
    long double direct = 0.0L;
    long double ak = 1.0L, bk = 1.0L;
    for (int k = 0; k <= 60; ++k) {
      if (k < 20) direct += ak * std::cos(static_cast<long double>(bk) * std::numbers::pi_v<long double> * x);
      ak *= 0.6L;
      bk *= 3.0L;
    }
    // Terms beyond k = 20 contribute at most 0.6^20 / 0.4.
    CHECK(w(x) == Approx(static_cast<double>(direct)).margin(1e-4));
  }
}

TEST_CASE("weierstrass validation and names", "[targets]") {
  CHECK_THROWS_AS(TargetFunction::weierstrass(1.2, 13.0, 30).validate(), ConfigError);
  CHECK_THROWS_AS(TargetFunction::weierstrass(0.5, 13.0, 5).validate(), ConfigError);  // tail too large
  CHECK(target_from_name("weierstrass").kind == TargetFunction::Kind::Weierstrass);
  CHECK(target_from_name("sin").kind == TargetFunction::Kind::Sin4Pi);
  CHECK_THROWS_WITH(target_from_name("cosine"), Catch::Matchers::ContainsSubstring("cosine"));
}
