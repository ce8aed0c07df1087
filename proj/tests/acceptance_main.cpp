// Acceptance suite: one pass/fail line per criterion, exact rational
// comparisons throughout (tolerance zero). Exit code 0 iff all pass.

#include <cstdio>
#include <exception>

#include "quadlie/checks.hpp"

int main() {
  std::vector<quadlie::CheckResult> results;
  try {
    results = quadlie::run_acceptance_suite();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
    return 1;
  }
  bool all_pass = true;
  int index = 1;
  for (const auto& r : results) {
    std::printf("[%s] criterion %02d %-20s %s\n", r.pass ? "PASS" : "FAIL", index, r.id.c_str(),
                r.description.c_str());
    std::printf("       %s\n", r.details.c_str());
    all_pass = all_pass && r.pass;
    ++index;
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed"
                               : "ACCEPTANCE: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
