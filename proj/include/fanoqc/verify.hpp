#pragma once

#include <string>
#include <vector>

#include "fanoqc/gw.hpp"

namespace fanoqc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // set on failure
};

struct VerificationReport {
  FanoParams params;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  // informational, never failing

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Run the whole invariant suite for one (N,k): adapted conditions on
/// Ω_PF and Ω̂, reduced-operator oracle, gauge factorization identity,
/// pairing symmetry, quantum relation, entry degree rule, extraction
/// bookkeeping, 1/h-linearity and determinism under term permutation.
VerificationReport verify_pipeline(const FanoParams& p);

}  // namespace fanoqc
