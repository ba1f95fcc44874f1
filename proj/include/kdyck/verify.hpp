#pragma once

#include <string>
#include <vector>

namespace kdyck::verify {

enum class Profile { Quick, Full };

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the oracle grid: closed forms vs. series vs. exhaustive enumeration,
/// bijection round trips, strip identities and the k = 1 distribution.
/// Quick caps every exhaustive enumeration at 20 steps.
std::vector<CheckResult> run(Profile profile);

}  // namespace kdyck::verify
