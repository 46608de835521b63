#include "expressivity/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "expressivity/csv.hpp"
#include "expressivity/error.hpp"
#include "expressivity/parallel.hpp"
#include "expressivity/trace.hpp"

namespace expressivity {

std::vector<double> EpsilonGrid::values() const {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = at(k);
  return out;
}

EpsilonGrid EpsilonGrid::defaults_for(const TargetFunction& target) {
  if (target.kind == TargetFunction::Kind::Weierstrass) return {0.6, 2e-5, 10000};
  return {0.4, 4e-5, 10000};
}

RatioConfig RatioConfig::defaults_for(const TargetFunction& target) {
  RatioConfig cfg;
  cfg.epsilon = EpsilonGrid::defaults_for(target);
  return cfg;
}

double empirical_distance(std::span<const double> f_vals, std::span<const double> g_vals) {
  if (f_vals.size() != g_vals.size()) {
    throw ShapeError("distance needs sequences of equal length (" + std::to_string(f_vals.size()) +
                     " vs " + std::to_string(g_vals.size()) + ")");
  }
  if (f_vals.empty()) throw ShapeError("distance needs at least one sample");
  double sum = 0.0;
  for (std::size_t n = 0; n < f_vals.size(); ++n) {
    const double d = f_vals[n] - g_vals[n];
    sum += d * d;
  }
  return sum / static_cast<double>(f_vals.size());
}

namespace {

std::vector<double> sample_grid(std::size_t count) {
  std::vector<double> xs(count);
  for (std::size_t n = 0; n < count; ++n) xs[n] = static_cast<double>(n) / static_cast<double>(count);
  return xs;
}

}  // namespace

double draw_distance(const Network& net, std::span<const double> xs, std::span<const double> target_vals) {
  const auto outputs = net.evaluate_grid(xs);
  const auto standardized = standardize(outputs);
  if (!standardized) return std::numeric_limits<double>::infinity();
  return empirical_distance(*standardized, target_vals);
}

RatioCurve estimate_ratio_curve(const Network& net, const TargetFunction& target, const RatioConfig& cfg,
                                const std::string& label) {
  if (!net.is_scalar()) throw ShapeError("ratio estimation needs a scalar-in, scalar-out network");
  if (cfg.theta_draws == 0) throw ConfigError("ratio estimation needs at least one parameter draw");
  if (cfg.grid_count < 2) throw ConfigError("ratio estimation needs at least two sample points");
  if (cfg.epsilon.count == 0) throw ConfigError("epsilon grid is empty");
  target.validate();

  const auto xs = sample_grid(cfg.grid_count);
  const auto target_vals = target.sample(xs);
  const NetworkShape& shape = net.shape();

  std::vector<double> distances(cfg.theta_draws);
  parallel_for(cfg.theta_draws, cfg.workers, [&](std::size_t i) {
    const Network draw = Network::from_params(
        shape, sample_param(shape, Distribution::StandardNormal, cfg.seed, i), net.activation());
    distances[i] = draw_distance(draw, xs, target_vals);
  });

  RatioCurve curve;
  curve.network = label;
  curve.target = target.name();
  curve.draws = cfg.theta_draws;
  curve.seed = cfg.seed;
  curve.degenerate_draws = static_cast<std::size_t>(
      std::count_if(distances.begin(), distances.end(), [](double d) { return std::isinf(d); }));

  std::sort(distances.begin(), distances.end());
  curve.min_distance = distances.front();
  curve.epsilons = cfg.epsilon.values();
  curve.ratios.resize(curve.epsilons.size());
  const double total = static_cast<double>(cfg.theta_draws);
  for (std::size_t k = 0; k < curve.epsilons.size(); ++k) {
    // t_k counts draws with d <= eps_k.
    const auto t = std::upper_bound(distances.begin(), distances.end(), curve.epsilons[k]) - distances.begin();
    curve.ratios[k] = static_cast<double>(t) / total;
  }
  return curve;
}

double dominance_fraction(const RatioCurve& a, const RatioCurve& b) {
  if (a.epsilons != b.epsilons) throw ConfigError("dominance needs curves on the same epsilon grid");
  if (a.ratios.empty()) return 1.0;
  std::size_t hits = 0;
  for (std::size_t k = 0; k < a.ratios.size(); ++k) {
    if (a.ratios[k] >= b.ratios[k]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(a.ratios.size());
}

std::string to_csv(const RatioCurve& curve) {
  std::ostringstream os;
  os << "# network=" << curve.network << '\n'
     << "# target=" << curve.target << '\n'
     << "# draws=" << curve.draws << '\n'
     << "# seed=" << curve.seed << '\n'
     << "epsilon,ratio\n";
  for (std::size_t k = 0; k < curve.epsilons.size(); ++k) {
    os << format_double(curve.epsilons[k]) << ',' << format_double(curve.ratios[k]) << '\n';
  }
  return os.str();
}

FinenessSearchReport min_fineness_search(const NetworkShape& shape, const FinenessSearchConfig& cfg,
                                         const std::string& label, const ActivationSpec& activation) {
  shape.validate();
  if (cfg.draws == 0) throw ConfigError("fineness search needs at least one draw");
  if (shape.input_dim != 1 || shape.output_dim() != 1) {
    throw ShapeError("fineness search needs a scalar-in, scalar-out shape");
  }

  FinenessSearchReport report;
  report.network = label;
  report.seed = cfg.seed;
  report.draws = cfg.draws;
  report.grid_count = cfg.grid_count;
  report.per_draw.resize(cfg.draws);

  auto make = [&](std::size_t i) {
    return Network::from_params(shape, sample_param(shape, cfg.distribution, cfg.seed, i), activation);
  };
  parallel_for(cfg.draws, cfg.workers, [&](std::size_t i) {
    report.per_draw[i] = grid_fineness(make(i), cfg.grid_count, cfg.threshold, cfg.precision);
  });

  const auto it = std::min_element(report.per_draw.begin(), report.per_draw.end());
  report.min_fineness = *it;
  report.argmin = static_cast<std::size_t>(it - report.per_draw.begin());

  const PiecewiseLinear1D exact = trace_exact(make(report.argmin));
  report.exact_fineness_at_argmin = fineness(exact);
  report.min_slope_jump_at_argmin = exact.min_slope_jump();
  const double tol = 3.0 / static_cast<double>(cfg.grid_count);
  report.cross_check_agrees = std::abs(report.exact_fineness_at_argmin - report.min_fineness) <= tol;
  if (!report.cross_check_agrees) {
    std::ostringstream note;
    note << label << ": grid fineness " << format_double(report.min_fineness) << " of draw "
         << report.argmin << " differs from exact fineness " << format_double(report.exact_fineness_at_argmin)
         << " by more than " << format_double(tol);
    if (report.min_slope_jump_at_argmin < cfg.threshold) {
      note << " (smallest true slope jump " << format_double(report.min_slope_jump_at_argmin)
           << " is below the detection threshold)";
    } else if (cfg.precision == Precision::Single) {
      note << " (single-precision evaluation; rounding noise in the chord slopes)";
    }
    report.notes.push_back(note.str());
  }
  return report;
}

std::string to_csv(const FinenessSearchReport& report) {
  std::ostringstream os;
  os << "# network=" << report.network << '\n'
     << "# draws=" << report.draws << '\n'
     << "# grid=" << report.grid_count << '\n'
     << "# seed=" << report.seed << '\n'
     << "draw_index,fineness\n";
  for (std::size_t i = 0; i < report.per_draw.size(); ++i) {
    os << i << ',' << format_double(report.per_draw[i]) << '\n';
  }
  os << "min," << format_double(report.min_fineness) << '\n';
  return os.str();
}

}  // namespace expressivity
