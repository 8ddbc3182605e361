// Acceptance harness: runs the named criteria (all of them when no argument
// is given), prints one PASS/FAIL line per criterion plus its recorded notes,
// and exits nonzero on any failure.

#include <cstdio>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "schur/suites.hpp"

int main(int argc, char** argv) {
  using namespace schur;
  std::vector<std::string> ids;
  bool verbose = true;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quiet") == 0) {
      verbose = false;
      continue;
    }
    ids.push_back(argv[i]);
  }
  if (ids.empty()) ids = acceptance_suite_ids();

  bool all_pass = true;
  for (const auto& id : ids) {
    SuiteResult res;
    try {
      res = run_acceptance_suite(id);
    } catch (const std::exception& e) {
      std::printf("%-6s FAIL  exception: %s\n", id.c_str(), e.what());
      all_pass = false;
      continue;
    }
    std::printf("%-6s %s  %s (%lld checks, %.2f s)\n", res.id.c_str(),
                res.pass ? "PASS" : "FAIL", res.title.c_str(),
                static_cast<long long>(res.checks), res.seconds);
    if (verbose)
      for (const auto& note : res.notes) std::printf("        - %s\n", note.c_str());
    if (!res.pass) {
      std::printf("        first failure: %s\n", res.first_failure.c_str());
      all_pass = false;
    }
  }
  return all_pass ? 0 : 1;
}
