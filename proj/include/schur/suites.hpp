#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schur {

struct SuiteOptions {
  std::optional<int64_t> p;  // narrow prime-indexed suites to a single p
  std::optional<int64_t> n;  // narrow hypercube suites to a single n
  std::uint64_t seed = 0;
  int workers = 1;
};

struct SuiteResult {
  std::string id;
  std::string title;
  bool pass = false;
  int64_t checks = 0;
  int64_t failures = 0;
  std::string first_failure;
  std::vector<std::string> notes;  // recorded observations, one line each
  double seconds = 0.0;
};

// Canonical ids "AC-1".."AC-11"; aliases: zp-formula, zp-stability, z2n,
// typeI, z3n, z3zp, removal, pollard-kneser, spectral, kernels, z2n-cyclic.
const std::vector<std::string>& acceptance_suite_ids();
std::string canonical_suite_id(const std::string& id_or_alias);

SuiteResult run_acceptance_suite(const std::string& id_or_alias, const SuiteOptions& opt = {});

}  // namespace schur
