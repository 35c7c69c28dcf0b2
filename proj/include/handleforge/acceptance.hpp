#pragma once

#include <string>
#include <vector>

namespace hf {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

/// Runs the ten acceptance criteria and returns one result per criterion.
std::vector<CriterionResult> run_acceptance();

/// Prints "[PASS]/[FAIL] <id>. <name>: <detail>" lines; returns 0 iff all pass.
int print_acceptance(const std::vector<CriterionResult>& results);

/// JSON summary {schema_version, pass, criteria: [...]}.
std::string acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace hf
