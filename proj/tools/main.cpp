// Command-line front end: fineness, ratio, verify, construct, trace.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "expressivity/error.hpp"
#include "expressivity/harness/commands.hpp"

namespace ex = expressivity;
namespace hx = expressivity::harness;

int main(int argc, char** argv) {
  CLI::App app{"Depth versus width expressivity experiments for piecewise-linear networks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  hx::Overrides over;
  std::uint64_t seed = 0;
  std::size_t workers = 1, draws = 0, grid = 0;
  std::string out_dir;
  auto* seed_opt = app.add_option("--seed", seed, "Base random seed");
  auto* workers_opt = app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  auto* out_opt = app.add_option("--out", out_dir, "Output directory");
  auto* draws_opt = app.add_option("--draws", draws, "Parameter draws (fineness and ratio)")->check(CLI::PositiveNumber);
  auto* grid_opt = app.add_option("--grid", grid, "Grid points (fineness and ratio)")->check(CLI::PositiveNumber);
  app.add_option("--config", config_path, "JSON experiment config");

  auto* fineness = app.add_subcommand("fineness", "Random search for the minimum fineness per network");
  std::string precision, distribution;
  fineness->add_option("--precision", precision, "Grid evaluation precision: double or single");
  fineness->add_option("--distribution", distribution, "Parameter distribution: uniform01 or standard_normal");

  auto* ratio = app.add_subcommand("ratio", "Ratio-of-desired-parameters curves and dominance");
  auto* verify = app.add_subcommand("verify", "Run the property suites");

  auto* construct = app.add_subcommand("construct", "Write a fold network as JSON");
  ex::FoldSpec spec;
  std::string construct_out;
  construct->add_option("--input-dim", spec.input_dim, "Input dimension")->check(CLI::PositiveNumber);
  construct->add_option("--widths", spec.hidden_widths, "Hidden widths")->delimiter(',')->required();
  construct->add_option("--output-weights", spec.output_weights, "Output weights (row-major)")->delimiter(',');
  construct->add_option("--output-biases", spec.output_biases, "Output biases")->delimiter(',');
  construct->add_option("-o,--file", construct_out, "Output file (default <out>/fold_network.json)");

  auto* trace = app.add_subcommand("trace", "Trace a serialized scalar network on [0, 1] to CSV");
  std::string network_path, trace_out;
  trace->add_option("network", network_path, "Network JSON file")->required();
  trace->add_option("-o,--file", trace_out, "Output file (default <out>/trace.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? hx::kExitOk : hx::kExitConfig;
  }

  try {
    hx::ExperimentConfig cfg = config_path.empty() ? hx::ExperimentConfig{} : hx::load_config(config_path);
    if (*seed_opt) over.seed = seed;
    if (*workers_opt) over.workers = workers;
    if (*out_opt) over.output_dir = out_dir;
    if (*draws_opt) over.draws = draws;
    if (*grid_opt) over.grid = grid;
    hx::apply_overrides(cfg, over);

    hx::CommandOutcome result;
    if (*fineness) {
      if (!precision.empty()) cfg.fineness.precision = ex::precision_from_string(precision);
      if (!distribution.empty()) cfg.fineness.distribution = ex::distribution_from_string(distribution);
      result = hx::cmd_fineness(cfg, std::cout);
    } else if (*ratio) {
      result = hx::cmd_ratio(cfg, std::cout);
    } else if (*verify) {
      result = hx::cmd_verify(cfg, std::cout);
    } else if (*construct) {
      result = hx::cmd_construct(spec, construct_out.empty() ? cfg.output_dir / "fold_network.json" : std::filesystem::path(construct_out),
                                 std::cout);
    } else if (*trace) {
      result = hx::cmd_trace(network_path, trace_out.empty() ? cfg.output_dir / "trace.csv" : std::filesystem::path(trace_out), std::cout);
    }
    for (const auto& f : result.files) std::cout << "wrote " << f.string() << '\n';
    return result.exit_code;
  } catch (const ex::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return hx::kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return hx::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hx::kExitProperty;
  }
}
