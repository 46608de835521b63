#include <catch_amalgamated.hpp>

#include "expressivity/construction.hpp"
#include "expressivity/conversion.hpp"
#include "expressivity/error.hpp"
#include "helpers.hpp"

using namespace expressivity;
using Catch::Approx;

namespace {

void check_equivalent(const Network& relu, const ActivationSpec& target, Interval dom) {
  const Network conv = relu_to_pwl(relu, target, std::vector<Interval>(relu.input_dim(), dom));
  const auto relu_hidden = relu.shape().hidden_widths();
  const auto conv_hidden = conv.shape().hidden_widths();
  REQUIRE(conv_hidden.size() == relu_hidden.size());
  for (std::size_t l = 0; l < relu_hidden.size(); ++l) CHECK(conv_hidden[l] == 2 * relu_hidden[l]);
  CHECK(conv.shape().parameter_count() <= 4 * relu.shape().parameter_count());
  CHECK(conv.activation() == target);
  for (double x : testing::linspace(dom.lo, dom.hi, 10000)) {
    REQUIRE(conv.forward_scalar(x) == Approx(relu.forward_scalar(x)).margin(1e-6));
  }
}

}  // namespace

TEST_CASE("conversion to hard tanh preserves random networks", "[conversion]") {
  for (const auto& hidden : {std::vector<std::size_t>{4, 4, 4, 4, 4}, std::vector<std::size_t>{20}}) {
    const auto shape = NetworkShape::from_hidden(1, hidden, 1);
    for (std::uint64_t i = 0; i < 5; ++i) check_equivalent(testing::random_relu(shape, 21, i), ActivationSpec::hard_tanh(), {0.0, 1.0});
  }
}

TEST_CASE("conversion to asymmetric and many-kink activations", "[conversion]") {
  const auto shape = NetworkShape::from_hidden(1, {6, 6, 6}, 1);
  const Network relu = testing::random_relu(shape, 4);
  check_equivalent(relu, ActivationSpec::generic({0.0}, {0.1, 1.0}, 0.0), {-1.0, 1.0});      // leaky
  check_equivalent(relu, ActivationSpec::generic({-2.0, 0.5, 1.0}, {0.0, 2.0, -1.0, 0.3}, 1.0), {-1.0, 1.0});
  check_equivalent(relu, ActivationSpec::generic({1.0}, {3.0, -0.5}, 0.0), {-1.0, 1.0});
}

TEST_CASE("symmetric kinks use the linear carrier", "[conversion]") {
  // |z| has s+ + s- = 0 at its only kink, so the mirrored pair cannot recover z.
  const auto abs_like = ActivationSpec::generic({0.0}, {-1.0, 1.0}, 0.0);
  const ConversionPlan plan = plan_conversion(abs_like);
  CHECK_FALSE(plan.mirrored);
  CHECK(plan.carrier_slope != 0.0);
  const auto shape = NetworkShape::from_hidden(1, {5, 5}, 1);
  check_equivalent(testing::random_relu(shape, 77), abs_like, {0.0, 1.0});
}

TEST_CASE("relu target is an exact identity", "[conversion]") {
  const auto shape = NetworkShape::from_hidden(1, {4, 4}, 1);
  const Network relu = testing::random_relu(shape, 1);
  const Network conv = relu_to_pwl(relu, ActivationSpec::relu_as_generic(), {kUnitInterval});
  for (double x : testing::linspace(0.0, 1.0, 257)) CHECK(conv.forward_scalar(x) == Approx(relu.forward_scalar(x)).margin(1e-12));
}

TEST_CASE("fold network converted to hard tanh keeps its fineness", "[conversion]") {
  FoldSpec spec;
  spec.hidden_widths = {2, 2, 2, 2, 2};
  const Network relu = build_fold_network(spec);
  check_equivalent(relu, ActivationSpec::hard_tanh(), {0.0, 1.0});
}

TEST_CASE("interval bounds", "[conversion]") {
  Layer h(1, 2);
  h.weights = {2.0, -1.0};
  h.biases = {-1.0, 0.5};
  Layer o(2, 1);
  o.weights = {1.0, -3.0};
  o.biases = {0.0};
  const Network net(1, {h, o}, ActivationSpec::relu());
  const auto b = preactivation_bounds(net, {kUnitInterval});
  REQUIRE(b.size() == 2);
  CHECK(b[0][0] == Interval{-1.0, 1.0});
  CHECK(b[0][1] == Interval{-0.5, 0.5});
  CHECK(b[1][0] == Interval{-1.5, 1.0});  // relu ranges [0, 1] and [0, 0.5]
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(preactivation_bounds(net, {Interval{0.0, inf}}), BoundingError);
}

TEST_CASE("conversion errors", "[conversion]") {
  const Network ht = Network::zeros(NetworkShape::from_hidden(1, {2}, 1), ActivationSpec::hard_tanh());
  CHECK_THROWS(relu_to_pwl(ht, ActivationSpec::hard_tanh(), {kUnitInterval}));
}
