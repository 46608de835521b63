#include "expressivity/harness/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "expressivity/csv.hpp"
#include "expressivity/error.hpp"
#include "expressivity/grid.hpp"
#include "expressivity/sampling.hpp"
#include "expressivity/trace.hpp"

namespace expressivity::harness {

namespace {

std::string widths_str(const std::vector<std::size_t>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

std::string shape_str(const NetworkShape& shape) {
  std::string s = std::to_string(shape.input_dim);
  for (std::size_t n : shape.widths) s += "-" + std::to_string(n);
  return s;
}

double traced_fineness(const Network& net) {
  if (net.input_dim() == 1) return fineness(trace_exact(net));
  return axis_product_fineness(net, std::vector<double>(net.input_dim(), 0.37));
}

}  // namespace

PiecewiseLinear1D golden_f() {
  return PiecewiseLinear1D::from_vertices({0.0, 0.25, 2.0 / 3.0, 1.0}, {0.0, 0.25, 1.5, 1.5});
}

PiecewiseLinear1D golden_g() {
  return PiecewiseLinear1D::from_vertices({0.0, 1.0 / 9.0, 0.25, 11.0 / 24.0, 2.0 / 3.0, 5.0 / 6.0, 1.0},
                                          {0.0, 0.3, 0.5, 0.2, 0.6, 0.4, 0.9});
}

Network golden_network() {
  Layer hidden(1, 3);
  hidden.weights = {1.0, 1.0, 1.0};
  hidden.biases = {0.0, -0.25, -2.0 / 3.0};
  Layer out(3, 1);
  out.weights = {1.0, 2.0, -3.0};
  out.biases = {0.0};
  return Network(1, {hidden, out}, ActivationSpec::relu());
}

SuiteResult golden_suite() {
  SuiteResult r("golden");
  const double five_twelfths = 5.0 / 12.0;
  const double five_ninths = 5.0 / 9.0;

  auto expect = [&](const std::string& what, double got, double want, double tol) {
    ++r.checks;
    if (std::abs(got - want) > tol) {
      r.fail(what + ": got " + format_double(got) + ", expected " + format_double(want));
    }
  };

  expect("fineness of F", fineness(golden_f()), five_twelfths, 1e-12);
  const RefinementReport ref = check_refinement(golden_g(), golden_f());
  ++r.checks;
  if (!ref.holds) r.fail("G does not refine F: " + ref.witness);
  expect("refinement ratio r", ref.r, five_ninths, 1e-12);

  const Network net = golden_network();
  const PiecewiseLinear1D traced = trace_exact(net);
  expect("traced network fineness", fineness(traced), five_twelfths, 1e-12);
  ++r.checks;
  if (traced.piece_count() != 3) r.fail("traced network has " + std::to_string(traced.piece_count()) + " pieces");
  expect("grid fineness of the network", grid_fineness(net), five_twelfths, 3.0 / kDefaultGridCount);
  return r;
}

SuiteResult theorem1_suite(const std::vector<BoundCase>& cases, const ActivationSpec& activation,
                           std::vector<BoundReport>* reports) {
  SuiteResult r("theorem1");
  for (const auto& c : cases) {
    ++r.checks;
    try {
      const BoundReport rep = verify_theorem1(c.input_dim, c.hidden_widths, activation);
      if (!rep.attains) {
        r.fail(c.name + " n0=" + std::to_string(c.input_dim) + " widths=" + widths_str(c.hidden_widths) +
               " activation=" + rep.activation + ": achieved fineness " + format_double(rep.achieved_fineness) +
               " exceeds bound " + format_double(rep.bound));
      }
      if (reports) reports->push_back(rep);
    } catch (const ConstructionError& e) {
      r.notes.push_back(c.name + ": skipped (" + e.what() + ")");
      --r.checks;
    }
  }
  return r;
}

SuiteResult identification_check(const std::string& label, const Network& block, std::size_t expected_pieces) {
  SuiteResult r("identification");
  const std::vector<double> base(block.input_dim(), 0.0);
  for (std::size_t j = 0; j < block.input_dim(); ++j) {
    ++r.checks;
    const PiecewiseLinear1D h = block.input_dim() == 1 ? trace_exact(block) : trace_axis(block, base, j, j);
    const IdentificationResult id = check_identification(h, kUnitInterval);
    if (!id.holds) {
      r.fail(label + " coordinate " + std::to_string(j) + ": " + id.witness);
    } else if (id.pieces != expected_pieces) {
      r.fail(label + " coordinate " + std::to_string(j) + ": " + std::to_string(id.pieces) +
             " pieces, expected " + std::to_string(expected_pieces));
    }
  }
  return r;
}

SuiteResult identification_suite(const std::vector<BoundCase>& cases) {
  SuiteResult r("identification");
  auto merge = [&](const SuiteResult& part) {
    r.checks += part.checks;
    r.failures += part.failures;
    r.witnesses.insert(r.witnesses.end(), part.witnesses.begin(), part.witnesses.end());
  };
  for (const auto& c : cases) {
    std::vector<std::size_t> seen;
    for (std::size_t n : c.hidden_widths) {
      if (n < c.input_dim || std::find(seen.begin(), seen.end(), n) != seen.end()) continue;
      seen.push_back(n);
      merge(identification_check(c.name + " block n0=" + std::to_string(c.input_dim) + " width=" + std::to_string(n),
                                 fold_block_network(c.input_dim, n), n / c.input_dim));
    }
    if (c.input_dim == 1 && !c.hidden_widths.empty()) {
      FoldSpec spec;
      spec.hidden_widths = c.hidden_widths;
      std::size_t pieces = 1;
      for (std::size_t p : spec.groups_per_layer()) pieces *= p;
      merge(identification_check(c.name + " fold network widths=" + widths_str(c.hidden_widths),
                                 build_fold_network(spec), pieces));
    }
  }
  return r;
}

SuiteResult composition_suite(const std::vector<BoundCase>& cases) {
  SuiteResult r("composition");
  for (const auto& c : cases) {
    if (c.hidden_widths.empty()) continue;
    double prev = 1.0;
    for (std::size_t k = 1; k <= c.hidden_widths.size(); ++k) {
      const std::vector<std::size_t> prefix(c.hidden_widths.begin(), c.hidden_widths.begin() + k);
      FoldSpec spec;
      spec.input_dim = c.input_dim;
      spec.hidden_widths = prefix;
      const double got = traced_fineness(build_fold_network(spec));
      const double bound = lemma2_bound(c.input_dim, prefix);
      const std::string tag = c.name + " n0=" + std::to_string(c.input_dim) + " widths=" + widths_str(prefix);
      ++r.checks;
      if (got > bound + 1e-12) {
        r.fail(tag + ": fineness " + format_double(got) + " exceeds the composition bound " + format_double(bound));
      } else if (std::abs(got - bound) > 1e-9 * bound) {
        r.fail(tag + ": fineness " + format_double(got) + " differs from " + format_double(bound));
      }
      ++r.checks;
      const double p = static_cast<double>(c.hidden_widths[k - 1] / c.input_dim);
      const double step = std::pow(p, static_cast<double>(c.input_dim));
      if (std::abs(got * step - prev) > 1e-9 * prev) {
        r.fail(tag + ": appending a block of " + format_double(p) + " groups took fineness from " +
               format_double(prev) + " to " + format_double(got));
      }
      prev = got;
    }
  }
  return r;
}

SuiteResult oracle_suite(const std::vector<NetworkShape>& shapes, std::size_t count, std::size_t grid,
                         double threshold, std::uint64_t seed, double required_jump) {
  SuiteResult r("oracle");
  if (shapes.empty()) return r;
  const double tol = 3.0 / static_cast<double>(grid);
  std::size_t excused = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const NetworkShape& shape = shapes[i % shapes.size()];
    const Network net =
        Network::from_params(shape, sample_param(shape, Distribution::StandardNormal, seed, i), ActivationSpec::relu());
    const PiecewiseLinear1D exact = trace_exact(net);
    const double want = fineness(exact);
    const double got = grid_fineness(net, grid, threshold);
    const double jump = exact.min_slope_jump();
    ++r.checks;
    if (std::abs(got - want) <= tol) continue;
    std::ostringstream w;
    w << "shape " << shape_str(shape) << " seed " << seed << " draw " << i << ": grid " << format_double(got)
      << " vs exact " << format_double(want) << ", smallest slope jump " << format_double(jump);
    if (jump < required_jump) {
      ++excused;
      r.notes.push_back(w.str() + " (below " + format_double(required_jump) + ")");
    } else {
      r.fail(w.str());
    }
  }
  r.notes.push_back(std::to_string(excused) + " disagreement(s) with a slope jump below " +
                    format_double(required_jump));
  return r;
}

SuiteResult corollary_suite(const std::vector<NetworkShape>& shapes, std::size_t count, std::uint64_t seed) {
  SuiteResult r("corollary");
  if (shapes.empty()) return r;
  const Interval domain{-1.0, 1.0};
  for (std::size_t i = 0; i < count; ++i) {
    const NetworkShape& shape = shapes[i % shapes.size()];
    const Distribution dist = (i / shapes.size()) % 2 == 0 ? Distribution::StandardNormal : Distribution::Uniform01;
    const Network net = Network::from_params(shape, sample_param(shape, dist, seed, i), ActivationSpec::relu());
    const RegionSet rs = regions(trace_exact(net, domain));
    const CorollaryCheck c = corollary_check(rs);
    ++r.checks;
    if (!c.holds) {
      r.fail("shape " + shape_str(shape) + " sampler " + to_string(dist) + " seed " + std::to_string(seed) +
             " draw " + std::to_string(i) + ": " + std::to_string(c.count) + " regions < 1/I = " +
             format_double(c.bound));
    }
  }
  return r;
}

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.uniform01() * static_cast<double>(hi - lo + 1));
}

PiecewiseLinear1D random_fold(Rng& rng, bool random_output) {
  FoldSpec spec;
  const std::size_t depth = pick(rng, 1, 3);
  for (std::size_t l = 0; l < depth; ++l) spec.hidden_widths.push_back(pick(rng, 1, 5));
  if (random_output) {
    spec.output_weights = {0.5 + 1.5 * rng.uniform01()};
    spec.output_biases = {2.0 * rng.uniform01() - 1.0};
  }
  return trace_exact(build_fold_network(spec));
}

// Random vertices on [0, 1] whose end slopes and slope jumps stay away from zero.
PiecewiseLinear1D random_pwl(Rng& rng) {
  for (;;) {
    const std::size_t kinks = pick(rng, 1, 6);
    std::vector<double> xs{0.0};
    for (std::size_t k = 0; k < kinks; ++k) xs.push_back(rng.uniform01());
    xs.push_back(1.0);
    std::sort(xs.begin(), xs.end());
    std::vector<double> ys;
    for (std::size_t k = 0; k < xs.size(); ++k) ys.push_back(2.0 * rng.uniform01() - 1.0);

    bool ok = true;
    std::vector<double> slopes;
    for (std::size_t k = 0; k + 1 < xs.size() && ok; ++k) {
      const double dx = xs[k + 1] - xs[k];
      ok = dx >= 0.02;
      if (ok) slopes.push_back((ys[k + 1] - ys[k]) / dx);
    }
    if (!ok || std::abs(slopes.front()) < 0.1 || std::abs(slopes.back()) < 0.1) continue;
    for (std::size_t k = 0; k + 1 < slopes.size() && ok; ++k) ok = std::abs(slopes[k + 1] - slopes[k]) >= 0.1;
    if (ok) return PiecewiseLinear1D::from_vertices(xs, ys);
  }
}

}  // namespace

SuiteResult refinement_suite(std::size_t pairs, std::uint64_t seed) {
  SuiteResult r("refinement");
  for (std::size_t i = 0; i < pairs; ++i) {
    Rng rng(stream_seed(seed, i));
    const PiecewiseLinear1D g = random_fold(rng, false);
    const bool fold_outer = i % 2 == 0;
    const PiecewiseLinear1D f = fold_outer ? random_fold(rng, true) : random_pwl(rng);
    const PiecewiseLinear1D fg = compose(f, g);

    const double i_f = fineness(f);
    const double i_g = fineness(g);
    const double i_fg = fineness(fg);
    const RefinementReport ref = check_refinement(fg, g);
    const std::string tag = "pair " + std::to_string(i) + " seed " + std::to_string(seed) + " (g: " +
                            std::to_string(g.piece_count()) + " pieces, f: " + (fold_outer ? "fold" : "random") +
                            " with " + std::to_string(f.piece_count()) + " pieces)";
    r.checks += 3;
    if (!ref.holds) {
      r.fail(tag + ": f o g does not refine g: " + ref.witness);
      continue;
    }
    if (ref.r > i_f + 1e-9) {
      r.fail(tag + ": r = " + format_double(ref.r) + " exceeds I(f) = " + format_double(i_f));
    }
    if (i_fg > ref.r * i_g + 1e-12) {
      r.fail(tag + ": I(f o g) = " + format_double(i_fg) + " exceeds r I(g) = " + format_double(ref.r * i_g));
    }
  }
  return r;
}

Network zero_unit(const Network& net, std::size_t layer, std::size_t unit) {
  if (layer + 1 >= net.depth()) throw ShapeError("zero_unit needs a hidden layer index");
  std::vector<Layer> layers = net.layers();
  Layer& l = layers[layer];
  if (unit >= l.outputs) throw ShapeError("zero_unit: unit index out of range");
  for (std::size_t i = 0; i < l.inputs; ++i) l.weight(unit, i) = 0.0;
  l.biases[unit] = 0.0;
  return Network(net.input_dim(), std::move(layers), net.activation());
}

std::string format_suite(const SuiteResult& r) {
  std::ostringstream os;
  os << r.name << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checks - r.failures << "/" << r.checks
     << " checks)\n";
  for (const auto& w : r.witnesses) os << "  failure: " << w << '\n';
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  return os.str();
}

}  // namespace expressivity::harness
