// The verification suite: eight named, self-contained criteria that sweep the
// group catalog and check every engine against independent oracles and
// structural invariants. Each criterion returns a pass/fail verdict plus a
// deterministic JSON detail block (counts, the exact catalog slice used, and
// the first failing instance when something breaks).
#ifndef GUARD_FUSIONFORGE_SUITE_H
#define GUARD_FUSIONFORGE_SUITE_H

#include "fusionforge/config.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fusionforge {

struct SuiteOptions {
  Config cfg; // base engine configuration

  // Largest factor order admitted into the tensor-decomposition triple sweep.
  unsigned max_order = 8;

  // Cap on subgroup pairs tested per triple in the tensor-decomposition
  // criterion; 0 means exhaustive. When capped, pairs are taken on a
  // deterministic even stride through the full pair grid.
  std::uint64_t pair_cap = 0;
};

struct CriterionResult {
  std::string name;
  bool passed = false;
  nlohmann::json detail;
};

// The registered criterion names in canonical run order.
std::vector<std::string> criterion_names();

// Runs one criterion by name; InvalidData for an unknown name.
CriterionResult run_criterion(std::string const &name, SuiteOptions const &opt);

// Runs the named criteria (all of them for the first overload), in canonical
// order regardless of the order given.
std::vector<CriterionResult> run_suite(SuiteOptions const &opt);
std::vector<CriterionResult> run_suite(SuiteOptions const &opt,
                                       std::vector<std::string> const &names);

// {"criteria": [...], "passed": bool, "failures": [names]}
nlohmann::json suite_report(std::vector<CriterionResult> const &results);

} // namespace fusionforge

#endif // GUARD_FUSIONFORGE_SUITE_H
