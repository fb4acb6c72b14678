#pragma once

// Named verification checks spanning every module: algebra identities,
// orthonormality, the norm theorem, kernel reproduction, equator
// diagonality, chi/tau properties, gradient correctness.  The CLI `verify`
// subcommand runs these and exits nonzero naming the first failing check.

#include <cstdint>
#include <string>
#include <vector>

namespace mono {

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_err = 0.0;   // worst observed deviation (check-specific scale)
  double tolerance = 0.0;
  std::string detail;     // filled on failure
};

struct VerifyOptions {
  int k_max = 6;
  int quad_deg = 0;  // <= 0: per-check default
  std::uint64_t seed = 12345;
  // Test hook: corrupts a local copy of the Clifford multiplication table
  // (an e13-related sign) before the associativity check, proving the
  // harness actually detects a wrong table.
  bool inject_clifford_fault = false;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace mono
