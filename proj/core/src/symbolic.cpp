#include "iet/symbolic.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "iet/errors.hpp"
#include "iet/partition.hpp"
#include "internal.hpp"

namespace iet {

namespace detail {

ItineraryWindow itinerary_impl(const IET& iet, const ExactScalar& x,
                               Variant variant, int lo, int hi,
                               const PrecisionContext& ctx,
                               StepBudget& budget) {
  if (lo > 0 || hi < 0) {
    throw DomainError("itinerary window must satisfy lo <= 0 <= hi");
  }
  ItineraryWindow out{x, variant, lo, hi,
                      std::vector<int>(static_cast<std::size_t>(hi - lo + 1))};
  const auto slot = [&](int k) { return static_cast<std::size_t>(k - lo); };

  ExactScalar y = x;
  out.symbols[slot(0)] = iet.interval_index(y, variant, ctx);
  for (int k = 1; k <= hi; ++k) {
    y = step_counted(iet, variant, y, ctx, budget);
    out.symbols[slot(k)] = iet.interval_index(y, variant, ctx);
  }
  if (lo < 0) {
    const IET& inv = iet.inverse(ctx);
    ExactScalar z = x;
    for (int k = -1; k >= lo; --k) {
      z = step_counted(inv, variant, z, ctx, budget);
      out.symbols[slot(k)] = iet.interval_index(z, variant, ctx);
    }
  }
  return out;
}

KeaneReport keane_impl(const IET& iet, int depth, const PrecisionContext& ctx,
                       StepBudget& budget) {
  if (depth < 1) throw DomainError("depth must be >= 1");
  const std::vector<ExactScalar> breaks = iet.interior_breakpoints();
  const auto hit_breakpoint = [&](const ExactScalar& y) {
    return std::find(breaks.begin(), breaks.end(), y) != breaks.end();
  };

  // Smallest return time wins; ties go to the smaller starting breakpoint.
  const auto scan = [&](Variant variant) {
    std::optional<KeaneViolation> best;
    for (const ExactScalar& d : breaks) {
      const int cap = best ? best->steps - 1 : depth;
      ExactScalar y = d;
      for (int k = 1; k <= cap; ++k) {
        y = step_counted(iet, variant, y, ctx, budget);
        if (hit_breakpoint(y)) {
          best = KeaneViolation{d, k, y};
          break;
        }
      }
    }
    return best;
  };

  KeaneReport out;
  out.depth = depth;
  out.violation = scan(Variant::T);
  out.holds = !out.violation.has_value();
  out.dual_violation = scan(Variant::Dual);
  out.dual_holds = !out.dual_violation.has_value();
  return out;
}

}  // namespace detail

ItineraryWindow itinerary(const IET& iet, const ExactScalar& x,
                          Variant variant, int lo, int hi,
                          const RunLimits& limits) {
  StepBudget budget(limits.step_budget);
  return detail::itinerary_impl(iet, x, variant, lo, hi, limits.precision,
                                budget);
}

KeaneReport keane_check(const IET& iet, int depth, const RunLimits& limits) {
  StepBudget budget(limits.step_budget);
  return detail::keane_impl(iet, depth, limits.precision, budget);
}

namespace {

std::vector<int> disagreement_indices(const ItineraryWindow& alpha,
                                      const ItineraryWindow& beta) {
  std::vector<int> out;
  for (int k = alpha.lo; k <= alpha.hi; ++k) {
    if (alpha.symbol_at(k) != beta.symbol_at(k)) out.push_back(k);
  }
  return out;
}

void require_symmetric_shared_window(const ItineraryWindow& alpha,
                                     const ItineraryWindow& beta) {
  if (alpha.lo != beta.lo || alpha.hi != beta.hi) {
    throw DomainError("itinerary windows do not match");
  }
  if (alpha.lo != -alpha.hi) {
    throw DomainError("pair classification needs a symmetric window [-N, N]");
  }
}

PairClass classify_disagreements(const std::vector<int>& disagreements, int n,
                                 int margin) {
  PairClass out;
  out.margin = margin;
  out.distinct = !disagreements.empty();
  out.positive_evidence = std::none_of(
      disagreements.begin(), disagreements.end(),
      [&](int k) { return k >= margin && k <= n; });
  out.negative_evidence = std::none_of(
      disagreements.begin(), disagreements.end(),
      [&](int k) { return k >= -n && k <= -margin; });
  out.doubly_evidence = out.positive_evidence && out.negative_evidence;
  return out;
}

}  // namespace

PairClass classify_pair(const ItineraryWindow& alpha,
                        const ItineraryWindow& beta, int margin) {
  require_symmetric_shared_window(alpha, beta);
  const int n = alpha.hi;
  if (margin < 0 || margin > n) {
    throw DomainError("margin must be in 0..window");
  }
  return classify_disagreements(disagreement_indices(alpha, beta), n, margin);
}

std::vector<AsymptoticPairReport> enumerate_asymptotic_pairs(
    const IET& iet, int depth, int margin, const RunLimits& limits) {
  if (depth < 1) throw DomainError("depth must be >= 1");
  if (margin < 0) margin = depth / 2;
  if (margin > depth) throw DomainError("margin must be in 0..depth");
  StepBudget budget(limits.step_budget);
  const PrecisionContext& ctx = limits.precision;

  if (!iet.classification().irreducible) {
    throw DomainError(
        "asymptotic-pair enumeration requires an irreducible permutation");
  }
  const KeaneReport keane = detail::keane_impl(iet, depth, ctx, budget);
  if (!keane.holds || !keane.dual_holds) {
    const KeaneViolation& v =
        keane.violation ? *keane.violation : *keane.dual_violation;
    throw DomainError("Keane condition fails at depth " +
                      std::to_string(v.steps) + ": breakpoint " +
                      to_literal(v.start) + " returns to " +
                      to_literal(v.hit));
  }

  // Positive anchors: the forward images of the left partition endpoints,
  // minus 0; these are exactly the image breakpoints.  Negative anchors: the
  // breakpoints themselves.
  std::vector<ExactScalar> positive_anchors;
  {
    std::vector<ExactScalar> sources = iet.interior_breakpoints();
    sources.push_back(iet.zero());
    for (const ExactScalar& s : sources) {
      ExactScalar y = detail::step_counted(iet, Variant::T, s, ctx, budget);
      if (!y.is_zero()) positive_anchors.push_back(std::move(y));
    }
    std::sort(positive_anchors.begin(), positive_anchors.end(),
              ScalarLess{ctx});
  }

  std::vector<AsymptoticPairReport> out;
  const auto emit = [&](const ExactScalar& x, PairKind kind) {
    ItineraryWindow primal =
        detail::itinerary_impl(iet, x, Variant::T, -depth, depth, ctx, budget);
    ItineraryWindow dual = detail::itinerary_impl(iet, x, Variant::Dual,
                                                  -depth, depth, ctx, budget);
    std::vector<int> disagreements = disagreement_indices(primal, dual);
    PairClass cls = classify_disagreements(disagreements, depth, margin);
    out.push_back(AsymptoticPairReport{x, kind, depth,
                                       std::move(disagreements), cls,
                                       std::move(primal), std::move(dual)});
  };
  for (const ExactScalar& x : positive_anchors) emit(x, PairKind::Positive);
  for (const ExactScalar& d : iet.interior_breakpoints()) {
    emit(d, PairKind::Negative);
  }
  return out;
}

DoublyScan doubly_asymptotic_scan(const IET& iet, int depth, int margin,
                                  const RunLimits& limits) {
  DoublyScan out;
  out.depth = depth;
  out.margin = margin;
  out.pairs = enumerate_asymptotic_pairs(iet, depth, margin, limits);
  for (const AsymptoticPairReport& pair : out.pairs) {
    if (!pair.classification.doubly_evidence) continue;
    if (pair.kind == PairKind::Positive) {
      ++out.doubly_positive;
    } else {
      ++out.doubly_negative;
    }
  }
  return out;
}

LanguageSample language(const IET& iet, int word_length,
                        const RunLimits& limits) {
  if (word_length < 1) throw DomainError("word length must be >= 1");
  StepBudget budget(limits.step_budget);
  const PrecisionContext& ctx = limits.precision;

  const KeaneReport keane =
      detail::keane_impl(iet, word_length, ctx, budget);
  LevelPartition partition = detail::level_partition_impl(
      iet, word_length, Variant::T, ctx, budget, limits.max_cells);

  LanguageSample out;
  out.word_length = word_length;
  out.keane_verified = keane.holds && keane.dual_holds;
  for (const LevelCell& cell : partition.cells()) {
    out.words.insert(cell.word);
  }
  return out;
}

RegularityReport regularity_probe(const IET& iet, const ExactScalar& x,
                                  int depth, const RunLimits& limits) {
  if (depth < 1) throw DomainError("depth must be >= 1");
  StepBudget budget(limits.step_budget);
  const PrecisionContext& ctx = limits.precision;
  if (compare(x, iet.zero(), ctx) < 0 || compare(x, iet.one(), ctx) > 0) {
    throw DomainError("point " + to_literal(x) + " not in [0,1]");
  }

  const std::vector<ExactScalar> breaks = iet.interior_breakpoints();
  const auto hit = [&](const ExactScalar& y) {
    if (y == iet.zero() || y == iet.one()) return true;
    return std::find(breaks.begin(), breaks.end(), y) != breaks.end();
  };

  RegularityReport out;
  out.depth = depth;
  if (hit(x)) {
    out.witness = {0, x};
    return out;
  }
  ExactScalar y = x;
  for (int k = 1; k <= depth; ++k) {
    y = detail::step_counted(iet, Variant::T, y, ctx, budget);
    if (hit(y)) {
      out.witness = {k, y};
      return out;
    }
  }
  const IET& inv = iet.inverse(ctx);
  ExactScalar z = x;
  for (int k = 1; k <= depth; ++k) {
    z = detail::step_counted(inv, Variant::T, z, ctx, budget);
    if (hit(z)) {
      out.witness = {-k, z};
      return out;
    }
  }
  out.regular = true;
  return out;
}

OrbitGapStats orbit_gap_stats(const IET& iet, const ExactScalar& x, int count,
                              const RunLimits& limits) {
  if (count < 1) throw DomainError("orbit length must be >= 1");
  StepBudget budget(limits.step_budget);
  const PrecisionContext& ctx = limits.precision;

  std::vector<ExactScalar> points;
  points.reserve(static_cast<std::size_t>(count));
  ExactScalar y = x;
  iet.interval_index(y, Variant::T, ctx);  // domain check
  points.push_back(y);
  for (int k = 1; k < count; ++k) {
    y = detail::step_counted(iet, Variant::T, y, ctx, budget);
    points.push_back(y);
  }
  std::sort(points.begin(), points.end(), ScalarLess{ctx});
  points.erase(std::unique(points.begin(), points.end()), points.end());

  OrbitGapStats out{ExactScalar::rational(iet.basis(), 1),
                    ExactScalar::rational(iet.basis(), 1), points.size()};
  if (points.size() < 2) return out;  // a single point: the circle is one gap

  // Circular gaps: consecutive differences plus the wrap-around gap.
  ExactScalar max_gap = points[1] - points[0];
  ExactScalar min_gap = max_gap;
  const auto consider = [&](const ExactScalar& gap) {
    if (compare(gap, max_gap, ctx) > 0) max_gap = gap;
    if (compare(gap, min_gap, ctx) < 0) min_gap = gap;
  };
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    consider(points[i + 1] - points[i]);
  }
  consider((iet.one() - points.back()) + points.front());
  out.max_gap = std::move(max_gap);
  out.min_gap = std::move(min_gap);
  return out;
}

}  // namespace iet
