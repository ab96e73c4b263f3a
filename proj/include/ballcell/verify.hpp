#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ballcell {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class VerifyBudget { kSmall, kFull };

/// Runs one self-check suite:
///   paper  - published closed forms for F_{r,r}, F_{r,n} and M_n(r), r <= 5
///   oracle - formula vs enumeration, PGF vs matrix powering, symbolic vs numeric
///   limits - E_n(r) identities and limits, down-or-stay closed forms and limits
///   stats  - seeded simulation against the exact law
/// The small budget shrinks ranges and trial counts. Throws Error(kDomain)
/// for an unknown suite name.
std::vector<CheckResult> RunSuite(std::string_view suite, VerifyBudget budget);

std::vector<std::string> SuiteNames();

}  // namespace ballcell
