#pragma once

// Runtime property suites for the built-in models.

#include "aristotle/group_models.hpp"
#include "aristotle/lie_core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aristotle {

struct Check {
  std::string name;
  std::string model;
  bool passed = false;
  double defect = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool all_passed() const noexcept;
  std::size_t failures() const noexcept;
  void append(Report other);
};

/// A replacement bracket table for one model's suite.
struct StructureOverride {
  std::vector<std::string> labels;
  std::vector<BracketTerm> terms;
};

struct VerifyOptions {
  ModelParams params;
  std::uint64_t seed = 20240601;
  int group_samples = 1000;     ///< associativity, identity/inverse, cocycle
  int coadjoint_samples = 200;  ///< homomorphism and exp comparisons
  int casimir_samples = 500;
  int chart_samples = 100;
  /// When set, the Jacobi and bracket-derived checks use this table instead of
  /// the model's own. Empty labels raise InvalidInput.
  std::optional<StructureOverride> structure;
};

Report verify_model(ModelId model, const VerifyOptions& options);

/// Runs the suites of `models` concurrently; the report lists them in the
/// order given regardless of completion order.
Report verify_models(const std::vector<ModelId>& models, const VerifyOptions& options);

}  // namespace aristotle
