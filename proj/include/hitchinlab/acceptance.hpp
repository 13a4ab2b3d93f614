#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hitchinlab::acceptance {

struct CriterionResult {
  int index;
  std::string name;
  bool passed;
  std::string detail;
};

// Runs the full acceptance suite; one entry per criterion.
std::vector<CriterionResult> run_all();

// Prints one PASS/FAIL line per criterion; returns true iff all passed.
bool run_and_print(std::ostream& out);

}  // namespace hitchinlab::acceptance
