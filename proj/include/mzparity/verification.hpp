#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mzparity {

struct CheckResult {
  std::string name;
  bool pass;
  double observed;  // worst error (or worst margin, check-dependent)
  double threshold;
  std::string detail;
};

struct VerifyOptions {
  int max_n = 12;          // twin-Fock photon number range for equivalence
  double tolerance = 1e-8; // analytic-vs-propagation parity tolerance
};

/// Cross-validation suite: closed-form results against the brute-force
/// propagation path, special-function oracles, unitarity and conservation
/// properties, the squeezed-vacuum factorization, and the pair-coherent
/// eigenvalue relation.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(std::span<const CheckResult> results);

/// One aligned pass/fail line per check.
void print_check_table(std::ostream& os, std::span<const CheckResult> results);

} // namespace mzparity
