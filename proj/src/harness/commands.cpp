#include "expressivity/harness/commands.hpp"

#include <ostream>
#include <sstream>

#include "expressivity/csv.hpp"
#include "expressivity/error.hpp"
#include "expressivity/network_io.hpp"
#include "expressivity/ratio.hpp"
#include "expressivity/trace.hpp"

namespace expressivity::harness {

namespace {

std::string bound_or_blank(double (*bound)(std::size_t, const std::vector<std::size_t>&), const NetworkShape& s) {
  try {
    return format_double(bound(s.input_dim, s.hidden_widths()));
  } catch (const ConstructionError&) {
    return "";
  }
}

std::vector<BoundCase> bound_cases(const ExperimentConfig& cfg) {
  std::vector<BoundCase> cases;
  for (const auto& n : cfg.networks) cases.push_back({n.name, n.shape.input_dim, n.shape.hidden_widths()});
  return cases;
}

std::vector<NetworkShape> scalar_shapes(const ExperimentConfig& cfg) {
  std::vector<NetworkShape> shapes;
  for (const auto& n : cfg.networks) {
    if (n.shape.input_dim == 1 && n.shape.output_dim() == 1) shapes.push_back(n.shape);
  }
  return shapes;
}

}  // namespace

CommandOutcome cmd_fineness(const ExperimentConfig& cfg, std::ostream& log) {
  cfg.validate();
  CommandOutcome out;
  FinenessSearchConfig fc;
  fc.draws = cfg.fineness.draws;
  fc.grid_count = cfg.fineness.grid_count;
  fc.threshold = cfg.fineness.threshold;
  fc.seed = cfg.seed;
  fc.workers = cfg.workers;
  fc.distribution = cfg.fineness.distribution;
  fc.precision = cfg.fineness.precision;

  std::ostringstream summary;
  summary << "# seed=" << cfg.seed << '\n'
          << "# draws=" << fc.draws << '\n'
          << "# grid=" << fc.grid_count << '\n'
          << "# distribution=" << to_string(fc.distribution) << '\n'
          << "# precision=" << to_string(fc.precision) << '\n'
          << "network,min_fineness,argmin,exact_fineness_at_argmin,theorem1_bound,lemma2_bound\n";
  for (const auto& n : cfg.networks) {
    log << "fineness: " << n.name << " (" << fc.draws << " draws, grid " << fc.grid_count << ")\n";
    const FinenessSearchReport rep = min_fineness_search(n.shape, fc, n.name);
    for (const auto& note : rep.notes) log << "  note: " << note << '\n';
    const auto path = cfg.output_dir / ("fineness_" + n.name + ".csv");
    write_text_file(path, to_csv(rep));
    out.files.push_back(path);
    summary << n.name << ',' << format_double(rep.min_fineness) << ',' << rep.argmin << ','
            << format_double(rep.exact_fineness_at_argmin) << ',' << bound_or_blank(theorem1_bound, n.shape) << ','
            << bound_or_blank(lemma2_bound, n.shape) << '\n';
    log << "  min fineness " << format_double(rep.min_fineness) << " at draw " << rep.argmin << '\n';
  }
  const auto path = cfg.output_dir / "fineness_summary.csv";
  write_text_file(path, summary.str());
  out.files.push_back(path);
  return out;
}

CommandOutcome cmd_ratio(const ExperimentConfig& cfg, std::ostream& log) {
  cfg.validate();
  CommandOutcome out;
  std::ostringstream dominance;
  dominance << "# seed=" << cfg.seed << '\n'
            << "# draws=" << cfg.ratio.theta_draws << '\n'
            << "# grid=" << cfg.ratio.grid_count << '\n'
            << "target,network_a,network_b,fraction_a_ge_b\n";
  for (const auto& target : cfg.targets) {
    RatioConfig rc;
    rc.grid_count = cfg.ratio.grid_count;
    rc.theta_draws = cfg.ratio.theta_draws;
    rc.epsilon = cfg.ratio.epsilon_for(target);
    rc.seed = cfg.seed;
    rc.workers = cfg.workers;

    std::vector<RatioCurve> curves;
    for (const auto& n : cfg.networks) {
      log << "ratio: " << n.name << " vs " << target.name() << " (" << rc.theta_draws << " draws, N "
          << rc.grid_count << ")\n";
      const Network arch = Network::zeros(n.shape, ActivationSpec::relu());
      curves.push_back(estimate_ratio_curve(arch, target, rc, n.name));
      const auto path = cfg.output_dir / ("ratio_" + n.name + "_" + target.name() + ".csv");
      write_text_file(path, to_csv(curves.back()));
      out.files.push_back(path);
    }
    for (std::size_t a = 0; a < curves.size(); ++a) {
      for (std::size_t b = 0; b < curves.size(); ++b) {
        if (a == b) continue;
        const double frac = dominance_fraction(curves[a], curves[b]);
        dominance << target.name() << ',' << curves[a].network << ',' << curves[b].network << ','
                  << format_double(frac) << '\n';
        log << "  " << curves[a].network << " >= " << curves[b].network << " on " << format_double(frac)
            << " of epsilon values\n";
      }
    }
  }
  const auto path = cfg.output_dir / "dominance.csv";
  write_text_file(path, dominance.str());
  out.files.push_back(path);
  return out;
}

std::vector<SuiteResult> run_verify_suites(const ExperimentConfig& cfg, std::vector<BoundReport>* bounds) {
  cfg.validate();
  const auto cases = bound_cases(cfg);
  const auto shapes = scalar_shapes(cfg);
  std::vector<SuiteResult> results;
  results.push_back(golden_suite());
  results.push_back(theorem1_suite(cases, cfg.verify.activation, bounds));
  results.push_back(identification_suite(cases));

  // A fold block with one zeroed tooth must be rejected.
  SuiteResult negative("identification-negative");
  ++negative.checks;
  const SuiteResult corrupted = identification_check("corrupted block", zero_unit(fold_block_network(1, 4), 0, 2), 4);
  if (corrupted.passed()) {
    negative.fail("fold block width 4 with unit 2 zeroed still passes the identification check");
  } else {
    negative.notes.push_back("rejected as expected: " + corrupted.witnesses.front());
  }
  results.push_back(std::move(negative));

  results.push_back(composition_suite(cases));
  results.push_back(oracle_suite(shapes, cfg.verify.oracle_networks, cfg.verify.oracle_grid,
                                 cfg.verify.oracle_threshold, cfg.seed, 2.0 * cfg.verify.oracle_threshold));
  results.push_back(corollary_suite(shapes, cfg.verify.corollary_networks, cfg.seed));
  results.push_back(refinement_suite(cfg.verify.refinement_pairs, cfg.seed));
  return results;
}

CommandOutcome cmd_verify(const ExperimentConfig& cfg, std::ostream& log) {
  CommandOutcome out;
  std::vector<BoundReport> bounds;
  const auto results = run_verify_suites(cfg, &bounds);

  std::string bounds_csv = "# activation=" + cfg.verify.activation.describe() + "\n" + bound_report_csv_header();
  for (const auto& b : bounds) bounds_csv += bound_report_csv_row(b);
  const auto bounds_path = cfg.output_dir / "verify_bounds.csv";
  write_text_file(bounds_path, bounds_csv);
  out.files.push_back(bounds_path);

  std::string report;
  bool ok = true;
  for (const auto& r : results) {
    report += format_suite(r);
    ok = ok && r.passed();
  }
  report += ok ? "all suites passed\n" : "property failures found\n";
  const auto report_path = cfg.output_dir / "verify_report.txt";
  write_text_file(report_path, report);
  out.files.push_back(report_path);
  log << report;
  out.exit_code = ok ? kExitOk : kExitProperty;
  return out;
}

CommandOutcome cmd_construct(const FoldSpec& spec, const std::filesystem::path& out_path, std::ostream& log) {
  const Network net = build_fold_network(spec);
  save_network(net, out_path);
  log << "construct: " << net.shape().parameter_count() << " parameters written to " << out_path.string() << '\n';
  return {kExitOk, {out_path}};
}

CommandOutcome cmd_trace(const std::filesystem::path& network, const std::filesystem::path& out_path,
                         std::ostream& log) {
  const Network net = load_network(network);
  if (!net.is_scalar()) throw ShapeError("trace needs a scalar-in, scalar-out network");
  const PiecewiseLinear1D pwl = trace_exact(net);
  write_text_file(out_path, to_csv(pwl));
  log << "trace: " << pwl.piece_count() << " pieces, fineness " << format_double(fineness(pwl)) << '\n';
  return {kExitOk, {out_path}};
}

}  // namespace expressivity::harness
