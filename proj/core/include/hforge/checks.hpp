#pragma once

// Registry of the module-level property checks behind `suite` and the
// acceptance run.

#include <functional>
#include <string>
#include <vector>

#include "hforge/check.hpp"

namespace hforge {

struct SuiteCheck {
  std::string module;
  std::string name;
  std::vector<int> criteria;  // acceptance criteria this check feeds, may be empty
  std::function<CheckOutcome()> run;
};

/// All checks, grouped by module in a fixed order.
const std::vector<SuiteCheck>& suite_checks();
/// Module names in registry order.
std::vector<std::string> suite_modules();

}  // namespace hforge
