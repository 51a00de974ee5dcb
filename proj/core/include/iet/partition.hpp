#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "iet/budget.hpp"
#include "iet/iet.hpp"

namespace iet {

enum class IntervalKind { Lr, lR };  // [left, right) vs (left, right]

struct HalfOpenInterval {
  ExactScalar left;
  ExactScalar right;
  IntervalKind kind;
};

// One cell of a k-level partition: the set of points sharing the word
// word[0..k-1], where word[p] is the interval index of the p-th image.
// T^{p+1} translates the whole cell by the prefix sum of the one-step
// constants along the word; see cell_translation_constants.
struct LevelCell {
  HalfOpenInterval interval;
  std::vector<int> word;
};

class LevelPartition {
 public:
  LevelPartition(int level, Variant variant, std::vector<LevelCell> cells)
      : level_(level), variant_(variant), cells_(std::move(cells)) {}

  int level() const { return level_; }
  Variant variant() const { return variant_; }
  const std::vector<LevelCell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  // Index of the unique cell containing x; boundary points resolve by the
  // cell kind (Lr: to the right cell, lR: to the left cell).
  std::size_t locate(const ExactScalar& x,
                     const PrecisionContext& ctx = {}) const;

 private:
  int level_;
  Variant variant_;
  std::vector<LevelCell> cells_;
};

// The k-level partition of [0,1) (Variant::T, Lr cells) or of (0,1]
// (Variant::Dual, lR cells).  Cells are the maximal intervals on which
// T, T^2, ..., T^k are all single translations; their left endpoints are
// exactly {0} together with the backward images T^-p(d) of the breakpoints
// for p < k (dual: right endpoints, dual backward images, and 1).
LevelPartition level_partition(const IET& iet, int k, Variant variant,
                               const RunLimits& limits = {});

// The unique level-k cell containing x.
LevelCell cell_of(const IET& iet, int k, const ExactScalar& x, Variant variant,
                  const RunLimits& limits = {});

// Constant by which T^power translates the cell, 1 <= power <= level.
ExactScalar cell_translation_constant(const IET& iet, const LevelCell& cell,
                                      int power);

// All of the cell's translation constants for powers 1..level.
std::vector<ExactScalar> cell_translation_constants(const IET& iet,
                                                    const LevelCell& cell);

// Least k <= max_k such that some level-k cell is translated by T^k by
// exactly zero, i.e. T^k (and the dual k-th power) is the identity on a
// positive interval.  found == false only says no period exists up to max_k.
struct PeriodicityReport {
  bool found = false;
  int period = 0;
  std::optional<HalfOpenInterval> witness;  // leftmost zero-translation cell
  int searched_to = 0;
};

PeriodicityReport detect_periodicity(const IET& iet, int max_k,
                                     const RunLimits& limits = {});

// Maximal interval around x on which T^p is a single translation for every
// p = 1..depth: the level-depth cell of x merged with every neighboring cell
// whose depth translation constants all agree exactly.
struct TranslationIntervalReport {
  int depth = 0;
  ExactScalar point;
  HalfOpenInterval interval;
};

TranslationIntervalReport max_translation_interval(const IET& iet,
                                                   const ExactScalar& x,
                                                   int depth,
                                                   const RunLimits& limits = {});

}  // namespace iet
