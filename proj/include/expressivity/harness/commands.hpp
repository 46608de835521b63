#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "expressivity/construction.hpp"
#include "expressivity/harness/config.hpp"
#include "expressivity/harness/suites.hpp"

namespace expressivity::harness {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitProperty = 2,
  kExitIo = 3,
};

struct CommandOutcome {
  int exit_code = kExitOk;
  std::vector<std::filesystem::path> files;
};

/// Min-fineness search per network: fineness_<name>.csv per network and
/// fineness_summary.csv with the minimum and both bounds.
CommandOutcome cmd_fineness(const ExperimentConfig& cfg, std::ostream& log);

/// ratio_<network>_<target>.csv per pair and dominance.csv with the fraction
/// of epsilon values where one network's curve is at least the other's.
CommandOutcome cmd_ratio(const ExperimentConfig& cfg, std::ostream& log);

/// Runs every property suite; writes verify_bounds.csv and verify_report.txt.
/// Exit code kExitProperty if any suite fails.
CommandOutcome cmd_verify(const ExperimentConfig& cfg, std::ostream& log);

/// The suites behind cmd_verify, without file output.
std::vector<SuiteResult> run_verify_suites(const ExperimentConfig& cfg, std::vector<BoundReport>* bounds = nullptr);

/// Writes the fold network of `spec` as a network JSON document.
CommandOutcome cmd_construct(const FoldSpec& spec, const std::filesystem::path& out, std::ostream& log);

/// Traces a serialized scalar network on [0, 1] and writes its pieces as CSV.
CommandOutcome cmd_trace(const std::filesystem::path& network, const std::filesystem::path& out, std::ostream& log);

}  // namespace expressivity::harness
