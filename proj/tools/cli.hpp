#pragma once

#include "aristotle/dynamics.hpp"
#include "aristotle/group_models.hpp"
#include "aristotle/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace aristotle::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kNumeric = 3 };

/// Everything a command needs. Loaded from a JSON document, then overridden
/// by whatever was given on the command line.
struct RunConfig {
  std::optional<ModelId> model;  ///< empty means every model (verify only)
  ModelParams params;
  std::uint64_t seed = 20240601;
  std::optional<std::vector<double>> xi;
  std::vector<double> at;
  FlowSpec flow{FlowKind::GroupTime};
  std::string hamiltonian = "energy";  ///< energy | kinetic | canonical
  std::string out;                     ///< empty means stdout
  std::string format = "csv";          ///< csv | json (simulate), text | json (orbit)
  std::string report;                  ///< verify: structured report path
  std::string f, g;                    ///< bracket: chart coordinate names
  std::optional<StructureOverride> structure;
};

/// Parses a configuration document. Throws InvalidInput on unknown keys or bad values.
RunConfig load_config(const std::string& json_text);

/// Dual point used when none is given: m = omega = r = h = k = 1 style defaults
/// with the central coordinate set to m omega r^2.
std::vector<double> default_xi(ModelId model, const ModelParams& params);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_orbit(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bracket(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aristotle::cli
