#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace iet {

// Arbitrary-precision rational, always kept canonical (lowest terms,
// positive denominator).
using Rational = mpq_class;

// Canonicalized rational from a numerator/denominator pair.
Rational make_rational(const mpz_class& num, const mpz_class& den);

// True when q equals the square of some rational.
bool is_rational_square(const Rational& q);

namespace detail {
class SqrtCache;
}

// One irrational generator: the square root of a positive rational that is
// not a rational square.
struct BasisElement {
  Rational radicand;  // reduced, > 0, not a rational square
  std::string label;  // "sqrt(2)", "sqrt(5/3)", ...
};

// Ordered generators beta_1..beta_m such that {1, beta_1, ..., beta_m} is
// linearly independent over Q.  Independence holds because the radicands are
// pairwise non-proportional by a rational square; create() checks exactly
// that and rejects anything else.
class Basis {
 public:
  // Throws DomainError if a radicand is <= 0, is a rational square, or two
  // radicands have a square ratio (which would make the roots rationally
  // proportional).
  static std::shared_ptr<const Basis> create(std::vector<Rational> radicands);

  // Basis with no irrational part; scalars over it are plain rationals.
  static std::shared_ptr<const Basis> rational_only();

  std::size_t size() const { return elements_.size(); }
  const BasisElement& element(std::size_t j) const { return elements_.at(j); }

  // Index of the element with the given reduced radicand, if any.
  std::optional<std::size_t> index_of(const Rational& radicand) const;

  detail::SqrtCache& sqrt_cache() const { return *cache_; }

  Basis(const Basis&) = delete;
  Basis& operator=(const Basis&) = delete;
  ~Basis();

 private:
  explicit Basis(std::vector<BasisElement> elements);

  std::vector<BasisElement> elements_;
  std::unique_ptr<detail::SqrtCache> cache_;
};

using BasisPtr = std::shared_ptr<const Basis>;

}  // namespace iet
