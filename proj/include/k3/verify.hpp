#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace k3 {

// one reproduction check, keyed by the statement it reproduces
struct Check {
  std::string id;        // e.g. "A1.P.alternate"
  std::string citation;  // statement being reproduced
  std::function<bool(std::string& detail)> run;
};

struct CheckResult {
  std::string id;
  std::string citation;
  bool passed = false;
  std::string detail;
};

// the full catalogue, deterministic under the given seed
std::vector<Check> acceptance_checks(uint64_t seed);

std::vector<CheckResult> run_checks(const std::vector<Check>& checks);

}  // namespace k3
