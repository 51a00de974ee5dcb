#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "iet/basis.hpp"

namespace iet {

// Bit-precision ladder for certified numeric evaluation.  Evaluation starts
// at start_bits and multiplies by growth until the question is decided or
// max_bits is exceeded, which raises PrecisionError.
struct PrecisionContext {
  unsigned start_bits = 128;
  unsigned max_bits = 16384;
  unsigned growth = 2;
};

// A number c_0 + sum_j c_j * sqrt(r_j) with exact rational coefficients over
// a shared Basis.  Values are immutable; all arithmetic is coefficient-wise
// and exact.  The value is zero iff every coefficient is zero, which is the
// only symbolic zero test the basis invariants license.
class ExactScalar {
 public:
  // coeffs has size basis->size() + 1; coeffs[0] multiplies 1.
  ExactScalar(BasisPtr basis, std::vector<Rational> coeffs);

  static ExactScalar zero(BasisPtr basis);
  static ExactScalar rational(BasisPtr basis, Rational c0);

  const BasisPtr& basis() const { return basis_; }
  std::size_t coeff_count() const { return coeffs_.size(); }
  const Rational& coeff(std::size_t j) const { return coeffs_.at(j); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;      // all coefficients zero
  bool is_rational() const;  // all irrational coefficients zero

  // Exact coefficient-wise equality.  Throws DomainError on basis mismatch,
  // as do all binary operations below.
  friend bool operator==(const ExactScalar& a, const ExactScalar& b);
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) {
    return !(a == b);
  }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a);

  ExactScalar& operator+=(const ExactScalar& b);
  ExactScalar& operator-=(const ExactScalar& b);

 private:
  BasisPtr basis_;
  std::vector<Rational> coeffs_;
};

// Sign of a, in {-1, 0, +1}.  Zero is decided exactly from the coefficients;
// a nonzero value is decided by outward-rounded enclosures on the precision
// ladder.  Throws PrecisionError when ctx.max_bits is not enough.
int sign(const ExactScalar& a, const PrecisionContext& ctx = {});

// sign(a - b) without materializing the difference scalar.
int compare(const ExactScalar& a, const ExactScalar& b,
            const PrecisionContext& ctx = {});

// Strict-weak-order comparator for sorting scalars on one basis.
struct ScalarLess {
  PrecisionContext ctx{};
  bool operator()(const ExactScalar& a, const ExactScalar& b) const {
    return compare(a, b, ctx) < 0;
  }
};

// Correctly rounded decimal expansion with `digits` fractional digits.
// `tie` is set when the value sits exactly halfway between two outputs (only
// possible for rational values); the text then carries the half-away-from-
// zero rounding of the midpoint.
struct Decimal {
  std::string text;
  bool tie = false;
};
Decimal to_decimal(const ExactScalar& a, unsigned digits,
                   const PrecisionContext& ctx = {});

// Parses the scalar literal grammar
//   expr     := term (('+'|'-') term)*
//   term     := rational | rational '*' 'sqrt(' posrational ')'
//   rational := int ['/' posint]
// against the given basis.  Every sqrt radicand must be a basis radicand;
// radicands that reduce to rational squares are rejected (they belong in the
// rational part).  Throws ParseError.
ExactScalar parse_scalar(std::string_view text, BasisPtr basis);

// Renders a in the literal grammar so that parse_scalar(to_literal(a))
// reproduces the coefficients exactly.
std::string to_literal(const ExactScalar& a);

}  // namespace iet
