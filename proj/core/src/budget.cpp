#include "iet/budget.hpp"

#include "iet/errors.hpp"

namespace iet {

void StepBudget::charge(std::uint64_t steps) {
  if (steps > remaining_) {
    remaining_ = 0;
    throw BudgetError("step budget of " + std::to_string(total_) +
                      " exhausted");
  }
  remaining_ -= steps;
}

}  // namespace iet
