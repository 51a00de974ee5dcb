#include "enclosure.hpp"

#include <cassert>

namespace iet::detail {

namespace {

// sqrt is monotone, so rounding the radicand and the root in the same
// direction gives a certified one-sided bound.
Enclosure sqrt_enclosure(const Rational& radicand, unsigned bits) {
  Enclosure e{static_cast<mpfr_prec_t>(bits)};
  Mpfr tmp{static_cast<mpfr_prec_t>(bits)};
  mpfr_set_q(tmp.get(), radicand.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(e.lo.get(), tmp.get(), MPFR_RNDD);
  mpfr_set_q(tmp.get(), radicand.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(e.hi.get(), tmp.get(), MPFR_RNDU);
  return e;
}

}  // namespace

const std::vector<Enclosure>& SqrtCache::at_bits(unsigned bits) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = by_bits_.find(bits);
  if (it == by_bits_.end()) {
    std::vector<Enclosure> roots;
    roots.reserve(radicands_.size());
    for (const Rational& r : radicands_) {
      roots.push_back(sqrt_enclosure(r, bits));
    }
    it = by_bits_.emplace(bits, std::move(roots)).first;
  }
  return it->second;
}

Enclosure evaluate_enclosure(const Basis& basis,
                             const std::vector<Rational>& coeffs,
                             unsigned bits) {
  assert(coeffs.size() == basis.size() + 1);
  const auto prec = static_cast<mpfr_prec_t>(bits);
  Enclosure acc{prec};
  mpfr_set_q(acc.lo.get(), coeffs[0].get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(acc.hi.get(), coeffs[0].get_mpq_t(), MPFR_RNDU);

  const std::vector<Enclosure>* roots = nullptr;
  Mpfr term{prec};
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Rational& c = coeffs[j + 1];
    const int s = sgn(c);
    if (s == 0) continue;
    if (roots == nullptr) roots = &basis.sqrt_cache().at_bits(bits);
    const Enclosure& root = (*roots)[j];
    // c > 0: bounds come from the matching side of the root enclosure;
    // c < 0: the sides swap.
    mpfr_srcptr lo_side = s > 0 ? root.lo.get() : root.hi.get();
    mpfr_srcptr hi_side = s > 0 ? root.hi.get() : root.lo.get();
    mpfr_mul_q(term.get(), lo_side, c.get_mpq_t(), MPFR_RNDD);
    mpfr_add(acc.lo.get(), acc.lo.get(), term.get(), MPFR_RNDD);
    mpfr_mul_q(term.get(), hi_side, c.get_mpq_t(), MPFR_RNDU);
    mpfr_add(acc.hi.get(), acc.hi.get(), term.get(), MPFR_RNDU);
  }
  return acc;
}

}  // namespace iet::detail
