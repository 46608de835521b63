// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "expressivity/construction.hpp"
#include "expressivity/conversion.hpp"
#include "expressivity/csv.hpp"
#include "expressivity/harness/commands.hpp"
#include "expressivity/harness/suites.hpp"
#include "expressivity/network_io.hpp"
#include "expressivity/ratio.hpp"
#include "expressivity/trace.hpp"

namespace fs = std::filesystem;
using namespace expressivity;
using namespace expressivity::harness;

namespace {

constexpr std::uint64_t kSeed = 0;

const std::vector<std::size_t> kNet1{4, 4, 4, 4, 4};
const std::vector<std::size_t> kNet2{20};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (ok ? "" : "[x] ") << what << "; ";
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) { return format_double(v); }

std::vector<NetworkShape> table_shapes() {
  return {NetworkShape::from_hidden(1, kNet1, 1), NetworkShape::from_hidden(1, kNet2, 1)};
}

void criterion1(Outcome& o) {
  const double b1 = theorem1_bound(1, kNet1);
  const double b2 = theorem1_bound(1, kNet2);
  o.require(b1 == 0.03125, "Network 1 bound " + fmt(b1) + " == 0.03125");
  o.require(b2 == 0.1, "Network 2 bound " + fmt(b2) + " == 0.1");
  o.require(bound_denominator(1, kNet1, 2) == std::uint64_t{32}, "Network 1 bound = 1/32 exactly");
  o.require(bound_denominator(1, kNet2, 2) == std::uint64_t{10}, "Network 2 bound = 1/10 exactly");
}

void criterion2(Outcome& o) {
  const auto t0 = Clock::now();
  for (const auto& widths : {kNet1, kNet2}) {
    const BoundReport r = verify_theorem1(1, widths, ActivationSpec::hard_tanh());
    o.require(r.achieved_fineness <= r.bound + 1e-12,
              "hard_tanh widths " + std::to_string(widths.size()) + "x" + std::to_string(widths[0]) +
                  ": achieved " + fmt(r.achieved_fineness) + " <= bound " + fmt(r.bound) + " + 1e-12");
  }
  FoldSpec spec;
  spec.hidden_widths = kNet1;
  const double f = fineness(trace_exact(build_fold_network(spec)));
  o.require(std::abs(f - std::pow(4.0, -5.0)) <= 1e-9, "ReLU fold (4,4,4,4,4) fineness " + fmt(f) + " = 4^-5 within 1e-9");
  const double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + fmt(t) + " s < 1 s");
}

void criterion3(Outcome& o) {
  const PiecewiseLinear1D f = golden_f();
  const double i_f = fineness(f);
  o.require(std::abs(i_f - 5.0 / 12.0) <= 1e-12, "fineness " + fmt(i_f) + " = 5/12 within 1e-12");
  const RefinementReport r = check_refinement(golden_g(), f);
  o.require(r.holds, "G refines F");
  o.require(std::abs(r.r - 5.0 / 9.0) <= 1e-12, "r " + fmt(r.r) + " = 5/9 within 1e-12");
  const double i_net = fineness(trace_exact(golden_network()));
  o.require(std::abs(i_net - 5.0 / 12.0) <= 1e-12, "1-3-1 ReLU network fineness " + fmt(i_net) + " = 5/12");
}

void criterion4(Outcome& o) {
  const auto t0 = Clock::now();
  const SuiteResult r = corollary_suite(table_shapes(), 1000, kSeed);
  const double t = seconds_since(t0);
  o.require(r.checks == 1000, std::to_string(r.checks) + " networks checked");
  o.require(r.passed(), std::to_string(r.failures) + " violations of |L(F)| >= 1/I(F)");
  for (std::size_t i = 0; i < std::min<std::size_t>(3, r.witnesses.size()); ++i) o.detail << r.witnesses[i] << "; ";
  o.require(t < 30.0, "runtime " + fmt(t) + " s < 30 s");
}

void criterion5(Outcome& o) {
  const auto t0 = Clock::now();
  // Disagreements are excused only when some true slope jump is below the
  // 0.5 detection threshold.
  const SuiteResult r = oracle_suite(table_shapes(), 100, 100000, 0.5, kSeed, 0.5);
  const double t = seconds_since(t0);
  o.require(r.passed(), std::to_string(r.failures) + " of 100 networks disagree by more than 3e-5 although every "
                        "slope jump is >= 0.5");
  o.detail << r.notes.back() << "; ";
  for (std::size_t i = 0; i < std::min<std::size_t>(3, r.witnesses.size()); ++i) o.detail << r.witnesses[i] << "; ";
  o.require(t < 120.0, "runtime " + fmt(t) + " s < 120 s");
}

void criterion6(Outcome& o) {
  FinenessSearchConfig cfg;
  cfg.draws = 1000;
  cfg.grid_count = 100000;
  cfg.threshold = 0.5;
  cfg.seed = kSeed;
  cfg.distribution = Distribution::Uniform01;
  cfg.precision = Precision::Double;
  const auto t0 = Clock::now();
  const auto r1 = min_fineness_search(table_shapes()[0], cfg, "network1");
  const auto r2 = min_fineness_search(table_shapes()[1], cfg, "network2");
  const double t = seconds_since(t0);
  o.require(r1.min_fineness < 0.01, "Network 1 min " + fmt(r1.min_fineness) + " < 0.01");
  o.require(r2.min_fineness > 0.02, "Network 2 min " + fmt(r2.min_fineness) + " > 0.02");
  o.require(r1.min_fineness < r2.min_fineness, "Network 1 min < Network 2 min");
  o.detail << "exact fineness at argmin " << fmt(r1.exact_fineness_at_argmin) << " / "
           << fmt(r2.exact_fineness_at_argmin) << "; runtime " << fmt(t) << " s; ";

  // Informational: the same search with single-precision evaluation.
  cfg.precision = Precision::Single;
  const auto s1 = min_fineness_search(table_shapes()[0], cfg, "network1");
  const auto s2 = min_fineness_search(table_shapes()[1], cfg, "network2");
  o.detail << "single precision (not asserted): " << fmt(s1.min_fineness) << " / " << fmt(s2.min_fineness) << "; ";
}

void criterion7(Outcome& o) {
  const Network n1 = Network::zeros(table_shapes()[0], ActivationSpec::relu());
  const Network n2 = Network::zeros(table_shapes()[1], ActivationSpec::relu());
  for (const auto& target : {TargetFunction::sin4pi(), TargetFunction::weierstrass()}) {
    RatioConfig full = RatioConfig::defaults_for(target);
    full.seed = kSeed;
    auto t0 = Clock::now();
    const double d_full = dominance_fraction(estimate_ratio_curve(n1, target, full, "network1"),
                                             estimate_ratio_curve(n2, target, full, "network2"));
    o.require(d_full >= 0.95, target.name() + " full run (2e4 draws, N=1e4, 1e4 eps): dominance " + fmt(d_full) +
                                  " >= 0.95 (" + fmt(seconds_since(t0)) + " s)");

    // CI scale: 100 thresholds spanning the same epsilon range.
    RatioConfig ci = full;
    ci.theta_draws = 2000;
    ci.grid_count = 1000;
    ci.epsilon.count = 100;
    ci.epsilon.step = full.epsilon.step * 100.0;
    t0 = Clock::now();
    const double d_ci = dominance_fraction(estimate_ratio_curve(n1, target, ci, "network1"),
                                           estimate_ratio_curve(n2, target, ci, "network2"));
    const double t = seconds_since(t0);
    o.require(d_ci >= 0.90, target.name() + " CI run (2e3 draws, N=1e3, 100 eps): dominance " + fmt(d_ci) + " >= 0.90");
    o.require(t < 60.0, target.name() + " CI runtime " + fmt(t) + " s < 60 s");
  }
}

void criterion8(Outcome& o) {
  const auto t0 = Clock::now();
  std::vector<std::pair<std::string, Network>> nets;
  for (std::size_t s = 0; s < 2; ++s) {
    const NetworkShape shape = table_shapes()[s];
    for (std::uint64_t i = 0; i < 3; ++i) {
      nets.emplace_back("network" + std::to_string(s + 1) + " draw " + std::to_string(i),
                        Network::from_params(shape, sample_param(shape, Distribution::StandardNormal, kSeed, i),
                                             ActivationSpec::relu()));
    }
  }
  FoldSpec spec;
  spec.hidden_widths = {2, 2, 2, 2, 2};
  nets.emplace_back("fold 2-2-2-2-2", build_fold_network(spec));

  std::vector<double> xs(10000);
  for (std::size_t n = 0; n < xs.size(); ++n) xs[n] = static_cast<double>(n) / static_cast<double>(xs.size() - 1);
  double worst = 0.0;
  bool widths_ok = true;
  for (const auto& [label, relu] : nets) {
    const Network conv = relu_to_pwl(relu, ActivationSpec::hard_tanh(), {kUnitInterval});
    const auto a = relu.evaluate_grid(xs);
    const auto b = conv.evaluate_grid(xs);
    for (std::size_t n = 0; n < xs.size(); ++n) worst = std::max(worst, std::abs(a[n] - b[n]));
    const auto hw = relu.shape().hidden_widths();
    const auto cw = conv.shape().hidden_widths();
    for (std::size_t l = 0; l < hw.size(); ++l) widths_ok = widths_ok && cw[l] == 2 * hw[l];
    widths_ok = widths_ok && cw.size() == hw.size();
  }
  const double t = seconds_since(t0);
  o.require(worst <= 1e-6, "max |converted - original| over 1e4 points " + fmt(worst) + " <= 1e-6 (" +
                               std::to_string(nets.size()) + " networks)");
  o.require(widths_ok, "hidden widths exactly doubled");
  o.require(t < 1.0, "runtime " + fmt(t) + " s < 1 s");
}

void criterion9(Outcome& o) {
  const auto t0 = Clock::now();
  const SuiteResult r = refinement_suite(200, kSeed);
  const double t = seconds_since(t0);
  o.require(r.checks == 600, "200 pairs, 3 checks each");
  o.require(r.passed(), std::to_string(r.failures) + " failed checks (refinement, r <= I(f)+1e-9, I(fog) <= r I(g)+1e-12)");
  for (std::size_t i = 0; i < std::min<std::size_t>(3, r.witnesses.size()); ++i) o.detail << r.witnesses[i] << "; ";
  o.require(t < 60.0, "runtime " + fmt(t) + " s < 60 s");
}

std::vector<std::pair<std::string, std::string>> snapshot(const fs::path& dir) {
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) files.emplace_back(fs::relative(e.path(), dir).string(), read_text_file(e.path()));
  }
  std::sort(files.begin(), files.end());
  return files;
}

void criterion10(Outcome& o) {
  const fs::path root = fs::temp_directory_path() / "expressivity_acceptance_determinism";
  fs::remove_all(root);
  std::vector<std::vector<std::pair<std::string, std::string>>> runs;
  for (std::size_t workers : {1, 2, 7}) {
    ExperimentConfig cfg;
    cfg.seed = 20240601;
    cfg.workers = workers;
    cfg.output_dir = root / ("workers" + std::to_string(workers));
    cfg.fineness.draws = 64;
    cfg.fineness.grid_count = 5000;
    cfg.ratio.theta_draws = 500;
    cfg.ratio.grid_count = 500;
    cfg.ratio.epsilon["sin4pi"] = {0.4, 0.004, 100};
    cfg.ratio.epsilon["weierstrass"] = {0.6, 0.002, 100};
    cfg.verify.corollary_networks = 100;
    std::ostringstream log;
    cmd_fineness(cfg, log);
    cmd_ratio(cfg, log);
    cmd_verify(cfg, log);
    FoldSpec spec;
    spec.hidden_widths = {3, 4};
    cmd_construct(spec, cfg.output_dir / "fold.json", log);
    cmd_trace(cfg.output_dir / "fold.json", cfg.output_dir / "fold_trace.csv", log);
    runs.push_back(snapshot(cfg.output_dir));
  }
  o.require(runs[0].size() >= 10, std::to_string(runs[0].size()) + " files per run");
  for (std::size_t k = 1; k < runs.size(); ++k) {
    bool same = runs[k].size() == runs[0].size();
    for (std::size_t f = 0; same && f < runs[0].size(); ++f) {
      same = runs[k][f] == runs[0][f];
      if (!same) o.detail << "differs: " << runs[0][f].first << "; ";
    }
    o.require(same, "workers 1 vs " + std::string(k == 1 ? "2" : "7") + " byte-identical");
  }
  fs::remove_all(root);
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "fineness bound values", criterion1},
      {2, "constructive attainment", criterion2},
      {3, "golden examples", criterion3},
      {4, "region count vs fineness", criterion4},
      {5, "grid vs exact oracle", criterion5},
      {6, "min-fineness reproduction", criterion6},
      {7, "ratio-curve dominance", criterion7},
      {8, "relu to pwl conversion", criterion8},
      {9, "refinement property suites", criterion9},
      {10, "determinism across worker counts", criterion10},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  int failures = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " | " << c.title << " | "
              << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
