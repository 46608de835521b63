#include <catch_amalgamated.hpp>

#include "expressivity/construction.hpp"
#include "expressivity/harness/suites.hpp"
#include "expressivity/pwl.hpp"
#include "expressivity/trace.hpp"
#include "helpers.hpp"

using namespace expressivity;
using Catch::Approx;

TEST_CASE("fineness lies in (0, 1] and region lengths add up", "[properties]") {
  const auto shape = NetworkShape::from_hidden(1, {6, 6, 6}, 1);
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto pwl = trace_exact(testing::random_relu(shape, 31, i), {-1.0, 1.0});
    const RegionSet rs = regions(pwl);
    const double f = fineness(rs);
    REQUIRE(f > 0.0);
    REQUIRE(f <= 1.0);
    REQUIRE(rs.total_length() == Approx(2.0));
    REQUIRE(corollary_check(rs).holds);
  }
}

TEST_CASE("fold networks of random widths meet the composition bound exactly", "[properties]") {
  Rng rng(stream_seed(5, 0));
  for (int trial = 0; trial < 100; ++trial) {
    FoldSpec spec;
    const std::size_t depth = 1 + static_cast<std::size_t>(rng.uniform01() * 4);
    for (std::size_t l = 0; l < depth; ++l) spec.hidden_widths.push_back(1 + static_cast<std::size_t>(rng.uniform01() * 6));
    const double got = fineness(trace_exact(build_fold_network(spec)));
    REQUIRE(got == Approx(lemma2_bound(1, spec.hidden_widths)).epsilon(1e-9));
  }
}

TEST_CASE("theorem bound is attained for random widths and activations", "[properties]") {
  Rng rng(stream_seed(6, 0));
  const std::vector<ActivationSpec> acts{ActivationSpec::hard_tanh(), ActivationSpec::relu_as_generic(),
                                         ActivationSpec::generic({0.0}, {0.2, 1.0}, 0.0),
                                         ActivationSpec::generic({-1.0, 0.0, 2.0}, {1.0, -1.0, 0.5, 3.0}, 0.0)};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::size_t> widths;
    const std::size_t depth = 1 + static_cast<std::size_t>(rng.uniform01() * 3);
    for (std::size_t l = 0; l < depth; ++l) widths.push_back(2 + static_cast<std::size_t>(rng.uniform01() * 9));
    const auto& act = acts[static_cast<std::size_t>(trial) % acts.size()];
    const BoundReport rep = verify_theorem1(1, widths, act);
    INFO("activation " << act.describe() << " trial " << trial);
    REQUIRE(rep.attains);
    REQUIRE(rep.achieved_fineness == Approx(rep.bound).epsilon(1e-9));
  }
}

TEST_CASE("refinement pairs satisfy both bounds", "[properties]") {
  const auto r = harness::refinement_suite(100, 2024);
  INFO(harness::format_suite(r));
  CHECK(r.passed());
  CHECK(r.checks == 300);
}

TEST_CASE("refinement needs f to bend at the ends of its domain", "[properties]") {
  // f is flat at 0, the image of every breakpoint of the tent g where g hits 0.
  // f o g is then linear across those breakpoints, so it does not refine g.
  const auto g = PiecewiseLinear1D::from_vertices({0.0, 0.25, 0.5, 0.75, 1.0}, {0.0, 1.0, 0.0, 1.0, 0.0});
  const auto f = PiecewiseLinear1D::from_vertices({0.0, 0.5, 1.0}, {0.0, 0.0, 1.0});
  const auto fg = compose(f, g);
  CHECK_FALSE(check_refinement(fg, g).holds);
  // With a non-zero slope at 0 the refinement comes back.
  const auto f2 = PiecewiseLinear1D::from_vertices({0.0, 0.5, 1.0}, {0.0, 0.1, 1.0});
  const auto ref = check_refinement(compose(f2, g), g);
  CHECK(ref.holds);
  CHECK(ref.r == Approx(0.5));
  CHECK(fineness(compose(f2, g)) <= ref.r * fineness(g) + 1e-12);
}

TEST_CASE("oracle suite passes when every jump is large enough", "[properties]") {
  const std::vector<NetworkShape> shapes{NetworkShape::from_hidden(1, {4, 4, 4, 4, 4}, 1),
                                         NetworkShape::from_hidden(1, {20}, 1)};
  const auto r = harness::oracle_suite(shapes, 40, 20000, 0.5, 3, 1.0);
  INFO(harness::format_suite(r));
  CHECK(r.passed());
}
