#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "iet/budget.hpp"
#include "iet/iet.hpp"

namespace iet {

// Finite window alpha[lo..hi] of the itinerary of base_point: symbol at k is
// the interval index of the k-th image under the chosen variant.
struct ItineraryWindow {
  ExactScalar base_point;
  Variant variant;
  int lo = 0;
  int hi = 0;
  std::vector<int> symbols;  // size hi - lo + 1

  int symbol_at(int k) const { return symbols.at(static_cast<std::size_t>(k - lo)); }
};

ItineraryWindow itinerary(const IET& iet, const ExactScalar& x,
                          Variant variant, int lo, int hi,
                          const RunLimits& limits = {});

// First time a breakpoint orbit returns to a breakpoint: start in D,
// T^steps(start) = hit in D with 1 <= steps <= depth.
struct KeaneViolation {
  ExactScalar start;
  int steps = 0;
  ExactScalar hit;
};

// The Keane condition to finite depth: no breakpoint reaches a breakpoint in
// 1..depth steps.  The two variants are scanned independently so their
// agreement is a result, not an assumption; when both scans complete without
// a violation they must not contradict each other.  A violation is reported
// at the smallest step count (ties broken by the smaller starting point).
struct KeaneReport {
  int depth = 0;
  bool holds = false;
  std::optional<KeaneViolation> violation;
  bool dual_holds = false;
  std::optional<KeaneViolation> dual_violation;
};

KeaneReport keane_check(const IET& iet, int depth,
                        const RunLimits& limits = {});

// Window/margin evidence for asymptotic behavior of a pair of symbol
// sequences sharing a window [-N, N] with disagreement set D:
//   distinct            D is nonempty;
//   positive_evidence   no disagreement in [margin, N];
//   negative_evidence   no disagreement in [-N, -margin];
//   doubly_evidence     both.
struct PairClass {
  bool distinct = false;
  bool positive_evidence = false;
  bool negative_evidence = false;
  bool doubly_evidence = false;
  int margin = 0;
};

PairClass classify_pair(const ItineraryWindow& alpha,
                        const ItineraryWindow& beta, int margin);

enum class PairKind { Positive, Negative };

// A canonical asymptotic pair: the two itineraries of one base point, primal
// and dual.  Positive pairs are anchored at the image breakpoints
// T({0} u D) \ {0}; negative pairs at the breakpoints D.  Every asymptotic
// pair of the subshift is a shift of one of these.
struct AsymptoticPairReport {
  ExactScalar base_point;
  PairKind kind = PairKind::Positive;
  int window = 0;  // symbols over [-window, window]
  std::vector<int> disagreements;
  PairClass classification;
  ItineraryWindow primal;
  ItineraryWindow dual;
};

// Requires an irreducible permutation and the Keane condition verified to
// `depth` in both variants (DomainError otherwise).  margin < 0 selects the
// default depth/2.
std::vector<AsymptoticPairReport> enumerate_asymptotic_pairs(
    const IET& iet, int depth, int margin = -1, const RunLimits& limits = {});

// Runs the enumeration and summarizes which canonical pairs carry
// doubly-asymptotic evidence at the given margin.
struct DoublyScan {
  int depth = 0;
  int margin = 0;
  std::vector<AsymptoticPairReport> pairs;
  std::size_t doubly_positive = 0;
  std::size_t doubly_negative = 0;
};

DoublyScan doubly_asymptotic_scan(const IET& iet, int depth, int margin,
                                  const RunLimits& limits = {});

// All words of the given length appearing in the subshift, read off the
// level partition labels.  keane_verified records whether the Keane
// condition held to depth word_length in both variants; without it the set
// is still the label set of the T-side partition, but the identification
// with the dual-side language is not justified.
struct LanguageSample {
  int word_length = 0;
  std::set<std::vector<int>> words;
  bool keane_verified = false;
};

LanguageSample language(const IET& iet, int word_length,
                        const RunLimits& limits = {});

// Evidence (to finite depth) that x is a regular point: x is not 0 or 1 and
// no image T^k x with |k| <= depth hits {0, 1} or a breakpoint.  On failure
// the witness is the first hit found scanning k = 0, +1..+depth, -1..-depth.
struct RegularityReport {
  bool regular = false;
  int depth = 0;
  std::optional<std::pair<int, ExactScalar>> witness;  // (k, hit)
};

RegularityReport regularity_probe(const IET& iet, const ExactScalar& x,
                                  int depth, const RunLimits& limits = {});

// Largest and smallest circular gaps of the sorted forward orbit
// {x, Tx, ..., T^{count-1} x}, an empirical density diagnostic.
struct OrbitGapStats {
  ExactScalar max_gap;
  ExactScalar min_gap;
  std::size_t distinct_points = 0;
};

OrbitGapStats orbit_gap_stats(const IET& iet, const ExactScalar& x, int count,
                              const RunLimits& limits = {});

}  // namespace iet
