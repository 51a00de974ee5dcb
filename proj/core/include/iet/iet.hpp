#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "iet/permutation.hpp"
#include "iet/scalar.hpp"

namespace iet {

// The two one-sided versions of an interval exchange: T acts on [0,1) with
// left-closed intervals [b_{i-1}, b_i); Dual acts on (0,1] with right-closed
// intervals (b_{i-1}, b_i].  Both use the same translation constants and
// agree off the breakpoints.
enum class Variant { T, Dual };

// Validated construction data: positive exact lengths summing to 1, plus a
// permutation of the intervals.
struct IETSpec {
  BasisPtr basis;
  std::vector<ExactScalar> lengths;
  Permutation permutation;
};

class IET;

// Builds the exchange: breakpoints b_i as prefix sums of the lengths, image
// breakpoints from the permuted length vector, per-interval translation
// constants, and the permutation classification.  Throws DomainError with
// the exact defect when a length fails positivity or the sum is not 1.
IET build_iet(IETSpec spec, const PrecisionContext& ctx = {});

class IET {
 public:
  const IETSpec& spec() const { return spec_; }
  int interval_count() const { return static_cast<int>(spec_.lengths.size()); }
  const BasisPtr& basis() const { return spec_.basis; }
  const Permutation& permutation() const { return spec_.permutation; }
  PermutationClass classification() const { return classification_; }

  // b_0 = 0 <= ... <= b_n = 1 (strictly increasing), size n+1.
  const std::vector<ExactScalar>& breakpoints() const { return b_; }
  // Image breakpoints b^tau, prefix sums of the permuted lengths.
  const std::vector<ExactScalar>& image_breakpoints() const { return b_tau_; }
  // trans[i-1] is the constant added on interval i.
  const std::vector<ExactScalar>& translations() const { return trans_; }

  const ExactScalar& zero() const { return b_.front(); }
  const ExactScalar& one() const { return b_.back(); }

  // Interior breakpoints b_1..b_{n-1}.
  std::vector<ExactScalar> interior_breakpoints() const;

  // 1-based index i with b_{i-1} <= x < b_i (Variant::T) or
  // b_{i-1} < x <= b_i (Variant::Dual).  Throws DomainError when x is
  // outside the variant's domain.
  int interval_index(const ExactScalar& x, Variant variant,
                     const PrecisionContext& ctx = {}) const;

  // The inverse exchange, built once on demand from the permuted lengths and
  // the inverse permutation.
  const IET& inverse(const PrecisionContext& ctx = {}) const;

 private:
  friend IET build_iet(IETSpec, const PrecisionContext&);
  IET(IETSpec spec, std::vector<ExactScalar> b, std::vector<ExactScalar> b_tau,
      std::vector<ExactScalar> trans, PermutationClass classification);

  IETSpec spec_;
  std::vector<ExactScalar> b_;
  std::vector<ExactScalar> b_tau_;
  std::vector<ExactScalar> trans_;
  PermutationClass classification_;

  struct LazyInverse {
    std::once_flag once;
    std::shared_ptr<const IET> ptr;
  };
  std::shared_ptr<LazyInverse> lazy_inverse_;
};

// One exact step of the chosen variant; domain-checked.
ExactScalar step(const IET& iet, Variant variant, const ExactScalar& x,
                 const PrecisionContext& ctx = {});

// |power| successive steps of the variant (power < 0 steps the inverse
// exchange, power == 0 is the domain-checked identity).  Every intermediate
// point is domain-checked exactly.
ExactScalar apply(const IET& iet, Variant variant, long long power,
                  const ExactScalar& x, const PrecisionContext& ctx = {});

// Forward images of the partition boundary.  For each interior breakpoint,
// dual_forward is the dual image (the left limit of T) and forward is the T
// image (the right limit of the dual map).
struct BoundaryImage {
  ExactScalar point;
  ExactScalar dual_forward;  // dual(T) b_i
  ExactScalar forward;       // T b_i
};

struct BoundaryImages {
  std::vector<BoundaryImage> interior;
  ExactScalar t_zero;             // T 0
  ExactScalar dual_one;           // dual(T) 1
  ExactScalar t_inverse_zero;     // T^-1 0
  ExactScalar dual_inverse_one;   // dual(T)^-1 1
  bool forward_coincide = false;  // T 0 == dual(T) 1
  bool backward_coincide = false; // T^-1 0 == dual(T)^-1 1
};

BoundaryImages boundary_images(const IET& iet,
                               const PrecisionContext& ctx = {});

}  // namespace iet
