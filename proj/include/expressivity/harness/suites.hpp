#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "expressivity/activation.hpp"
#include "expressivity/construction.hpp"
#include "expressivity/network.hpp"
#include "expressivity/pwl.hpp"

namespace expressivity::harness {

struct SuiteResult {
  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;  // one line per failed check
  std::vector<std::string> notes;      // informational lines

  bool passed() const noexcept { return failures == 0; }
  void fail(std::string witness) {
    ++failures;
    witnesses.push_back(std::move(witness));
  }
};

// Worked example: F with kinks at 1/4 and 2/3, G refining it with extra kinks.
PiecewiseLinear1D golden_f();
PiecewiseLinear1D golden_g();
/// x + 2 relu(x - 1/4) - 3 relu(x - 2/3) as a 1-3-1 ReLU network.
Network golden_network();

/// golden_f has fineness 5/12 and golden_g refines it with r = 5/9.
SuiteResult golden_suite();

/// verify_theorem1 for each (input_dim, hidden widths) shape.
struct BoundCase {
  std::string name;
  std::size_t input_dim = 1;
  std::vector<std::size_t> hidden_widths;
};
SuiteResult theorem1_suite(const std::vector<BoundCase>& cases, const ActivationSpec& activation,
                           std::vector<BoundReport>* reports = nullptr);

/// Whether every piece of `block` (scalar output `output`, traced along
/// coordinate `output` from base 0) maps onto [0, 1] and there are
/// `expected_pieces` of them.
SuiteResult identification_check(const std::string& label, const Network& block, std::size_t expected_pieces);

/// The fold block at each hidden width of each case, plus the fold networks
/// themselves (every maximal region of the whole sawtooth maps onto [0, 1]).
SuiteResult identification_suite(const std::vector<BoundCase>& cases);

/// Fold networks compose: traced fineness equals lemma2_bound, and appending a
/// block of p groups divides the fineness by p.
SuiteResult composition_suite(const std::vector<BoundCase>& cases);

/// Grid detector vs exact tracer on random ReLU networks drawn from N(0, 1).
/// Disagreements beyond 3 / grid fail only when every true slope jump is at
/// least `required_jump`; otherwise they are logged as notes. A kink inside a
/// grid cell splits its jump J into lambda J and (1 - lambda) J over two chord
/// differences, so detection is only guaranteed for J >= 2 threshold.
SuiteResult oracle_suite(const std::vector<NetworkShape>& shapes, std::size_t count, std::size_t grid,
                         double threshold, std::uint64_t seed, double required_jump);

/// |L(F)| >= 1 / I(F) on random ReLU networks, alternating N(0, 1) and U(0, 1)
/// parameters; the input domain is [-1, 1] so uniform draws still bend.
SuiteResult corollary_suite(const std::vector<NetworkShape>& shapes, std::size_t count, std::uint64_t seed);

/// Random (f, g) pairs where g is a fold network onto [0, 1] and f is a fold
/// network or a random piecewise-linear function with non-zero end slopes:
/// f o g refines g with r <= I(f) + 1e-9, and I(f o g) <= r I(g) + 1e-12.
SuiteResult refinement_suite(std::size_t pairs, std::uint64_t seed);

/// Copy of a fold network with all parameters of hidden unit `unit` in layer
/// `layer` set to zero.
Network zero_unit(const Network& net, std::size_t layer, std::size_t unit);

std::string format_suite(const SuiteResult& r);

}  // namespace expressivity::harness
