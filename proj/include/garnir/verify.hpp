#pragma once

#include <string>
#include <vector>

#include "garnir/garnir.hpp"

/* Self-checking sweeps over one root system.  Each suite exhaustively
   asserts a family of identities at desk scale and reports counts; a
   failure carries a diagnostic note instead of throwing, so a run
   always produces the full tally.
*/

namespace garnir {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> notes;

  bool passed() const { return failures == 0; }
};

// Suite names in run order: peel, action, sign, coset, annihilation,
// straightening, structure, example.
std::vector<std::string> suite_names();

// Runs one suite against the system with the given label ("G2", "A3").
// Unknown suite names are rejected; the worked-example suite is a no-op
// away from G2.
SuiteResult run_suite(const std::string& suite, const std::string& type_label);

std::vector<SuiteResult> run_all_suites(const std::string& type_label);

}  // namespace garnir
