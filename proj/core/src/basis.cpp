#include "iet/basis.hpp"

#include <utility>

#include "enclosure.hpp"
#include "iet/errors.hpp"

namespace iet {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ParseError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_rational_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

namespace {

std::string sqrt_label(const Rational& r) {
  return "sqrt(" + r.get_str() + ")";
}

}  // namespace

Basis::Basis(std::vector<BasisElement> elements)
    : elements_(std::move(elements)) {
  std::vector<Rational> radicands;
  radicands.reserve(elements_.size());
  for (const BasisElement& e : elements_) radicands.push_back(e.radicand);
  cache_ = std::make_unique<detail::SqrtCache>(std::move(radicands));
}

Basis::~Basis() = default;

std::shared_ptr<const Basis> Basis::create(std::vector<Rational> radicands) {
  std::vector<BasisElement> elements;
  elements.reserve(radicands.size());
  for (Rational& r : radicands) {
    r.canonicalize();
    if (sgn(r) <= 0) {
      throw DomainError("basis radicand must be positive, got " + r.get_str());
    }
    if (is_rational_square(r)) {
      throw DomainError("basis radicand " + r.get_str() +
                        " is a rational square, so its root is rational");
    }
    elements.push_back(BasisElement{r, sqrt_label(r)});
  }
  // sqrt(r_i)/sqrt(r_j) is rational iff r_i/r_j is a rational square; reject
  // such pairs (this also rejects duplicates).
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      Rational ratio = elements[i].radicand / elements[j].radicand;
      if (is_rational_square(ratio)) {
        throw DomainError("basis radicands " + elements[i].radicand.get_str() +
                          " and " + elements[j].radicand.get_str() +
                          " have rationally proportional roots");
      }
    }
  }
  return std::shared_ptr<const Basis>(new Basis(std::move(elements)));
}

std::shared_ptr<const Basis> Basis::rational_only() {
  return create({});
}

std::optional<std::size_t> Basis::index_of(const Rational& radicand) const {
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    if (elements_[j].radicand == radicand) return j;
  }
  return std::nullopt;
}

}  // namespace iet
