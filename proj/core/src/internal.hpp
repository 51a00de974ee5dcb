#pragma once

// Budget-sharing entry points used by operations that compose several scans
// under one per-call budget.

#include "iet/budget.hpp"
#include "iet/iet.hpp"
#include "iet/partition.hpp"
#include "iet/symbolic.hpp"

namespace iet::detail {

inline ExactScalar step_counted(const IET& machine, Variant variant,
                                const ExactScalar& x,
                                const PrecisionContext& ctx,
                                StepBudget& budget) {
  budget.charge();
  return step(machine, variant, x, ctx);
}

LevelPartition level_partition_impl(const IET& iet, int k, Variant variant,
                                    const PrecisionContext& ctx,
                                    StepBudget& budget,
                                    std::uint64_t max_cells);

ItineraryWindow itinerary_impl(const IET& iet, const ExactScalar& x,
                               Variant variant, int lo, int hi,
                               const PrecisionContext& ctx,
                               StepBudget& budget);

KeaneReport keane_impl(const IET& iet, int depth, const PrecisionContext& ctx,
                       StepBudget& budget);

}  // namespace iet::detail
