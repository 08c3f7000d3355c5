#pragma once

// Acceptance criteria for the engine, runnable from the CLI (`validate`) and
// from the acceptance test binary. Each criterion reports what it measured
// against what it expected and the tolerance applied.

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string measured;
  std::string expected;
  std::string tolerance;
};

std::vector<std::string> criterion_ids();

/// Runs the criteria whose ids appear in `only` (all when empty).
/// Throws ConfigError for an unknown id.
std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& only = {});

/// One line per criterion plus a summary; returns true iff all passed.
bool print_report(std::ostream& out, const std::vector<CriterionResult>& results);

} // namespace casimir
