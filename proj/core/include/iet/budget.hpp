#pragma once

#include <cstdint>

#include "iet/scalar.hpp"

namespace iet {

// Per-call resource limits for partition and orbit scans.  One step is one
// exact application of the map or its inverse.
struct RunLimits {
  PrecisionContext precision{};
  std::uint64_t step_budget = 10'000'000;
  std::uint64_t max_cells = 10'000;
};

// Decrementing step counter; throws BudgetError when exhausted.
class StepBudget {
 public:
  explicit StepBudget(std::uint64_t total) : remaining_(total), total_(total) {}

  void charge(std::uint64_t steps = 1);
  std::uint64_t used() const { return total_ - remaining_; }

 private:
  std::uint64_t remaining_;
  std::uint64_t total_;
};

}  // namespace iet
