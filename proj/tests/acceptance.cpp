// Runs every acceptance criterion at the default configuration and prints one
// line per criterion. Exit status is nonzero when any criterion fails.

#include <iostream>

#include "blockpos/suite.hpp"

int main() {
  const blockpos::VerifyConfig cfg;
  const blockpos::SuiteReport report = blockpos::run_theorem_suite(cfg);
  for (const auto& c : report.criteria)
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.id << " " << c.name << "  " << c.measured.dump() << "\n";
  std::cout << (report.all_passed() ? "all criteria passed" : "some criteria failed") << "\n";
  return report.all_passed() ? 0 : 1;
}
