#pragma once

#include <cstddef>
#include <string>

namespace hforge {

/// Result of an exhaustive or sampled property check.
struct CheckOutcome {
  bool pass = true;
  std::size_t cases = 0;
  std::string witness;  // first counterexample, empty on success

  void fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
};

}  // namespace hforge
