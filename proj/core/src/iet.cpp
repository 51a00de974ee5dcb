#include "iet/iet.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "iet/errors.hpp"

namespace iet {

IET::IET(IETSpec spec, std::vector<ExactScalar> b,
         std::vector<ExactScalar> b_tau, std::vector<ExactScalar> trans,
         PermutationClass classification)
    : spec_(std::move(spec)),
      b_(std::move(b)),
      b_tau_(std::move(b_tau)),
      trans_(std::move(trans)),
      classification_(classification),
      lazy_inverse_(std::make_shared<LazyInverse>()) {}

IET build_iet(IETSpec spec, const PrecisionContext& ctx) {
  const int n = static_cast<int>(spec.lengths.size());
  if (n != spec.permutation.size()) {
    throw DomainError("got " + std::to_string(spec.lengths.size()) +
                      " lengths for a permutation of size " +
                      std::to_string(spec.permutation.size()));
  }
  for (int i = 0; i < n; ++i) {
    if (spec.lengths[static_cast<std::size_t>(i)].basis() != spec.basis) {
      throw DomainError("length " + std::to_string(i + 1) +
                        " is not over the declared basis");
    }
    if (sign(spec.lengths[static_cast<std::size_t>(i)], ctx) <= 0) {
      throw DomainError(
          "length " + std::to_string(i + 1) + " = " +
          to_literal(spec.lengths[static_cast<std::size_t>(i)]) +
          " is not positive");
    }
  }

  std::vector<ExactScalar> b;
  b.reserve(static_cast<std::size_t>(n) + 1);
  b.push_back(ExactScalar::zero(spec.basis));
  for (int i = 0; i < n; ++i) {
    b.push_back(b.back() + spec.lengths[static_cast<std::size_t>(i)]);
  }
  const ExactScalar defect = b.back() - ExactScalar::rational(spec.basis, 1);
  if (!defect.is_zero()) {
    throw DomainError("lengths sum to 1 + (" + to_literal(defect) + ")");
  }

  const Permutation& tau = spec.permutation;
  const Permutation tau_inv = tau.inverse();
  std::vector<ExactScalar> b_tau;
  b_tau.reserve(static_cast<std::size_t>(n) + 1);
  b_tau.push_back(ExactScalar::zero(spec.basis));
  for (int k = 1; k <= n; ++k) {
    // Permuted length vector: the k-th image interval has the length of the
    // interval the permutation sends there.
    b_tau.push_back(b_tau.back() +
                    spec.lengths[static_cast<std::size_t>(tau_inv(k) - 1)]);
  }

  std::vector<ExactScalar> trans;
  trans.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    trans.push_back(b_tau[static_cast<std::size_t>(tau(i) - 1)] -
                    b[static_cast<std::size_t>(i - 1)]);
  }

  PermutationClass classification = classify_permutation(tau);
  return IET(std::move(spec), std::move(b), std::move(b_tau), std::move(trans),
             classification);
}

std::vector<ExactScalar> IET::interior_breakpoints() const {
  return {b_.begin() + 1, b_.end() - 1};
}

int IET::interval_index(const ExactScalar& x, Variant variant,
                        const PrecisionContext& ctx) const {
  const int n = interval_count();
  if (variant == Variant::T) {
    if (compare(x, zero(), ctx) < 0 || compare(x, one(), ctx) >= 0) {
      throw DomainError("point " + to_literal(x) + " not in [0,1)");
    }
    // Smallest i with x < b_i.
    int lo = 1, hi = n;
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (compare(x, b_[static_cast<std::size_t>(mid)], ctx) >= 0) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  }
  if (compare(x, zero(), ctx) <= 0 || compare(x, one(), ctx) > 0) {
    throw DomainError("point " + to_literal(x) + " not in (0,1]");
  }
  // Smallest i with x <= b_i.
  int lo = 1, hi = n;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (compare(x, b_[static_cast<std::size_t>(mid)], ctx) > 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

const IET& IET::inverse(const PrecisionContext& ctx) const {
  std::call_once(lazy_inverse_->once, [&] {
    const Permutation& tau = spec_.permutation;
    const Permutation tau_inv = tau.inverse();
    const int n = interval_count();
    std::vector<ExactScalar> permuted_lengths;
    permuted_lengths.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
      permuted_lengths.push_back(
          spec_.lengths[static_cast<std::size_t>(tau_inv(k) - 1)]);
    }
    lazy_inverse_->ptr = std::make_shared<const IET>(build_iet(
        IETSpec{spec_.basis, std::move(permuted_lengths), tau_inv}, ctx));
  });
  return *lazy_inverse_->ptr;
}

ExactScalar step(const IET& iet, Variant variant, const ExactScalar& x,
                 const PrecisionContext& ctx) {
  const int i = iet.interval_index(x, variant, ctx);
  return x + iet.translations()[static_cast<std::size_t>(i - 1)];
}

ExactScalar apply(const IET& iet, Variant variant, long long power,
                  const ExactScalar& x, const PrecisionContext& ctx) {
  const IET* machine = &iet;
  if (power < 0) machine = &iet.inverse(ctx);
  ExactScalar y = x;
  if (power == 0) {
    // Domain check only.
    iet.interval_index(y, variant, ctx);
    return y;
  }
  for (long long s = 0; s < std::llabs(power); ++s) {
    y = step(*machine, variant, y, ctx);
  }
  return y;
}

BoundaryImages boundary_images(const IET& iet, const PrecisionContext& ctx) {
  const Permutation& tau = iet.permutation();
  const int n = iet.interval_count();
  const auto& b = iet.breakpoints();
  const auto& bt = iet.image_breakpoints();

  std::vector<BoundaryImage> interior;
  interior.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    // The dual image of b_i closes interval i from the right; the T image
    // starts interval i+1.
    interior.push_back(
        BoundaryImage{b[static_cast<std::size_t>(i)],
                      bt[static_cast<std::size_t>(tau(i))],
                      bt[static_cast<std::size_t>(tau(i + 1) - 1)]});
  }

  BoundaryImages out{std::move(interior),
                     bt[static_cast<std::size_t>(tau(1) - 1)],
                     bt[static_cast<std::size_t>(tau(n))],
                     apply(iet, Variant::T, -1, iet.zero(), ctx),
                     apply(iet, Variant::Dual, -1, iet.one(), ctx),
                     false,
                     false};
  out.forward_coincide = out.t_zero == out.dual_one;
  out.backward_coincide = out.t_inverse_zero == out.dual_inverse_one;
  return out;
}

}  // namespace iet
