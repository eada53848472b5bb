// Acceptance runner: executes every suite criterion and prints exactly one
// PASS/FAIL line per criterion on standard output. Failure details go to
// standard error. Exit status is nonzero when any criterion fails.
#include "fusionforge/suite.hpp"

#include <cstdio>
#include <string>

int main() {
  fusionforge::SuiteOptions opt;
  opt.cfg = fusionforge::config_from_env();

  bool all = true;
  for (std::string const &name : fusionforge::criterion_names()) {
    fusionforge::CriterionResult r = fusionforge::run_criterion(name, opt);
    std::printf("%s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str());
    std::fflush(stdout);
    if (!r.passed) {
      all = false;
      std::fprintf(stderr, "%s detail: %s\n", r.name.c_str(), r.detail.dump(2).c_str());
    }
  }
  return all ? 0 : 1;
}
