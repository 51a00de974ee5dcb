#include "iet/partition.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "iet/errors.hpp"
#include "internal.hpp"

namespace iet {

namespace {

// The word of the cell containing `sample`, read off the sample's orbit.
// For Lr cells the sample is the left endpoint, for lR cells the right one;
// either way the sample lies in the cell, and the power-p map is a single
// translation there, so its interval index is the cell's p-th symbol.
std::vector<int> word_of(const IET& iet, Variant variant,
                         const ExactScalar& sample, int k,
                         const PrecisionContext& ctx, StepBudget& budget) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(k));
  ExactScalar y = sample;
  for (int p = 0; p < k; ++p) {
    word.push_back(iet.interval_index(y, variant, ctx));
    if (p + 1 < k) y = detail::step_counted(iet, variant, y, ctx, budget);
  }
  return word;
}

}  // namespace

namespace detail {

LevelPartition level_partition_impl(const IET& iet, int k, Variant variant,
                                    const PrecisionContext& ctx,
                                    StepBudget& budget,
                                    std::uint64_t max_cells) {
  if (k < 1) throw DomainError("partition level must be >= 1");
  const int n = iet.interval_count();
  const std::uint64_t cell_bound =
      static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n - 1) + 1;
  if (cell_bound > max_cells) {
    throw BudgetError("level-" + std::to_string(k) + " partition may need " +
                      std::to_string(cell_bound) + " cells; limit is " +
                      std::to_string(max_cells));
  }

  // Candidate cell endpoints: the breakpoints pulled back p < k steps.  A
  // candidate interior to a cell would force a symbol change across it, so
  // after exact deduplication the candidates are exactly the cell endpoints.
  const IET& inv = iet.inverse(ctx);
  std::vector<ExactScalar> candidates;
  candidates.reserve(cell_bound);
  candidates.push_back(variant == Variant::T ? iet.zero() : iet.one());
  for (const ExactScalar& d : iet.interior_breakpoints()) {
    ExactScalar y = d;
    candidates.push_back(y);
    for (int p = 1; p < k; ++p) {
      y = detail::step_counted(inv, variant, y, ctx, budget);
      candidates.push_back(y);
    }
  }
  std::sort(candidates.begin(), candidates.end(), ScalarLess{ctx});
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::vector<LevelCell> cells;
  cells.reserve(candidates.size());
  if (variant == Variant::T) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      ExactScalar left = candidates[i];
      ExactScalar right =
          i + 1 < candidates.size() ? candidates[i + 1] : iet.one();
      std::vector<int> word = word_of(iet, variant, left, k, ctx, budget);
      cells.push_back(LevelCell{
          HalfOpenInterval{std::move(left), std::move(right), IntervalKind::Lr},
          std::move(word)});
    }
  } else {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      ExactScalar left = i == 0 ? iet.zero() : candidates[i - 1];
      ExactScalar right = candidates[i];
      std::vector<int> word = word_of(iet, variant, right, k, ctx, budget);
      cells.push_back(LevelCell{
          HalfOpenInterval{std::move(left), std::move(right), IntervalKind::lR},
          std::move(word)});
    }
  }
  return LevelPartition(k, variant, std::move(cells));
}

}  // namespace detail

LevelPartition level_partition(const IET& iet, int k, Variant variant,
                               const RunLimits& limits) {
  StepBudget budget(limits.step_budget);
  return detail::level_partition_impl(iet, k, variant, limits.precision,
                                      budget, limits.max_cells);
}

std::size_t LevelPartition::locate(const ExactScalar& x,
                                   const PrecisionContext& ctx) const {
  if (variant_ == Variant::T) {
    if (compare(x, cells_.front().interval.left, ctx) < 0 ||
        compare(x, cells_.back().interval.right, ctx) >= 0) {
      throw DomainError("point " + to_literal(x) + " not in [0,1)");
    }
    // Rightmost cell whose left endpoint is <= x.
    std::size_t lo = 0, hi = cells_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo + 1) / 2;
      if (compare(x, cells_[mid].interval.left, ctx) >= 0) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return lo;
  }
  if (compare(x, cells_.front().interval.left, ctx) <= 0 ||
      compare(x, cells_.back().interval.right, ctx) > 0) {
    throw DomainError("point " + to_literal(x) + " not in (0,1]");
  }
  // Leftmost cell whose right endpoint is >= x.
  std::size_t lo = 0, hi = cells_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (compare(x, cells_[mid].interval.right, ctx) > 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

LevelCell cell_of(const IET& iet, int k, const ExactScalar& x, Variant variant,
                  const RunLimits& limits) {
  StepBudget budget(limits.step_budget);
  LevelPartition partition = detail::level_partition_impl(
      iet, k, variant, limits.precision, budget, limits.max_cells);
  return partition.cells()[partition.locate(x, limits.precision)];
}

ExactScalar cell_translation_constant(const IET& iet, const LevelCell& cell,
                                      int power) {
  const int k = static_cast<int>(cell.word.size());
  if (power < 1 || power > k) {
    throw DomainError("translation power must be in 1.." + std::to_string(k));
  }
  ExactScalar sum = ExactScalar::zero(iet.basis());
  for (int p = 0; p < power; ++p) {
    sum += iet.translations()[static_cast<std::size_t>(cell.word[p] - 1)];
  }
  return sum;
}

std::vector<ExactScalar> cell_translation_constants(const IET& iet,
                                                    const LevelCell& cell) {
  std::vector<ExactScalar> out;
  out.reserve(cell.word.size());
  ExactScalar sum = ExactScalar::zero(iet.basis());
  for (int symbol : cell.word) {
    sum += iet.translations()[static_cast<std::size_t>(symbol - 1)];
    out.push_back(sum);
  }
  return out;
}

PeriodicityReport detect_periodicity(const IET& iet, int max_k,
                                     const RunLimits& limits) {
  if (max_k < 1) throw DomainError("max period must be >= 1");
  StepBudget budget(limits.step_budget);
  PeriodicityReport out;
  for (int k = 1; k <= max_k; ++k) {
    out.searched_to = k;
    LevelPartition partition = detail::level_partition_impl(
        iet, k, Variant::T, limits.precision, budget, limits.max_cells);
    for (const LevelCell& cell : partition.cells()) {
      if (cell_translation_constant(iet, cell, k).is_zero()) {
        out.found = true;
        out.period = k;
        out.witness = cell.interval;
        return out;
      }
    }
  }
  return out;
}

TranslationIntervalReport max_translation_interval(const IET& iet,
                                                   const ExactScalar& x,
                                                   int depth,
                                                   const RunLimits& limits) {
  if (depth < 1) throw DomainError("depth must be >= 1");
  StepBudget budget(limits.step_budget);
  LevelPartition partition = detail::level_partition_impl(
      iet, depth, Variant::T, limits.precision, budget, limits.max_cells);
  const auto& cells = partition.cells();
  const std::size_t home = partition.locate(x, limits.precision);

  const auto constants = [&](std::size_t i) {
    return cell_translation_constants(iet, cells[i]);
  };
  const std::vector<ExactScalar> home_constants = constants(home);
  const auto merges = [&](std::size_t i) {
    const std::vector<ExactScalar> other = constants(i);
    for (std::size_t p = 0; p < other.size(); ++p) {
      if (other[p] != home_constants[p]) return false;
    }
    return true;
  };

  std::size_t lo = home;
  while (lo > 0 && merges(lo - 1)) --lo;
  std::size_t hi = home;
  while (hi + 1 < cells.size() && merges(hi + 1)) ++hi;

  return TranslationIntervalReport{
      depth, x,
      HalfOpenInterval{cells[lo].interval.left, cells[hi].interval.right,
                       IntervalKind::Lr}};
}

}  // namespace iet
