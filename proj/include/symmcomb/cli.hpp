#pragma once

// Command-line front end: configuration, diagram resolution and the
// subcommands of the `symmcomb` tool.

#include "symmcomb/satake.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symmcomb {

/// One job. Every field is optional so that flag values and config-file
/// values can be merged (flags win). Indices are 1-based as typed by users.
struct JobConfig {
  std::string command;
  std::optional<std::string> config_file;

  std::optional<std::string> preset;
  std::optional<std::string> cartan;
  std::optional<IntMatrix> matrix;
  std::optional<std::vector<int>> black;
  std::optional<std::vector<std::pair<int, int>>> arrows;

  std::optional<std::string> coords;  // "theta" (default) or "omega"
  std::optional<std::string> lambda, mu, nu;
  std::optional<std::vector<int>> orbit;  // the set I
  std::optional<std::string> tau, eps;    // Weyl words for classical PRV

  std::optional<int> bound, verify_bound, jobs;
  std::optional<std::string> format;  // json, csv or text
  std::optional<std::string> output;

  std::optional<bool> sweep, crystal, count_only;
};

/// Parses `key = value` lines; values are JSON ("B3", [1,3], [[1,2]], 2).
/// '#' starts a comment. Throws InvalidInput on unknown keys or bad values.
JobConfig parse_config_text(const std::string& text);

/// Fields of `flags` override those of `file`. Diagram keys are taken as a
/// group from whichever side mentions any of them, flags first.
JobConfig merge_configs(const JobConfig& flags, const JobConfig& file);

/// Exactly one diagram source: a preset, or a Cartan type/matrix with
/// optional black nodes and arrows.
SatakeDiagram resolve_diagram(const JobConfig& config);

/// Builds the symmetric space, reusing root systems stored under
/// $SYMMCOMB_CACHE when that variable is set.
SymmetricSpace load_space(const SatakeDiagram& diagram, int verify_bound);

/// Parses a weight given in theta- or omega-coordinates ("2", "1,0", "[1,0]").
Weight parse_weight(const SymmetricSpace& s, const std::string& text, const std::string& coords);

/// Executes the job and writes its report. Exit status: 0 success,
/// 1 verification failure, 2 invalid input.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Argument parsing plus run().
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symmcomb
