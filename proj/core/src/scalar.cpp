#include "iet/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "enclosure.hpp"
#include "iet/errors.hpp"

namespace iet {

namespace {

void check_context(const PrecisionContext& ctx) {
  if (ctx.start_bits == 0 || ctx.start_bits > ctx.max_bits || ctx.growth < 2) {
    throw DomainError("invalid precision context");
  }
}

void require_same_basis(const ExactScalar& a, const ExactScalar& b) {
  if (a.basis() != b.basis()) {
    throw DomainError("scalars do not share a basis");
  }
}

// Sign of c_0 + sum c_j sqrt(r_j) for a coefficient vector that is not all
// zero and has at least one irrational term.
int sign_by_enclosure(const Basis& basis, const std::vector<Rational>& coeffs,
                      const PrecisionContext& ctx, const char* what) {
  unsigned bits = ctx.start_bits;
  for (;;) {
    detail::Enclosure e = detail::evaluate_enclosure(basis, coeffs, bits);
    if (int s = e.resolved_sign(); s != 0) return s;
    if (bits >= ctx.max_bits) {
      throw PrecisionError(std::string(what) + " did not resolve at " +
                           std::to_string(ctx.max_bits) +
                           " bits; the value may be too close to zero or the "
                           "basis may violate its independence assumptions");
    }
    bits = std::min<unsigned long long>(
        static_cast<unsigned long long>(bits) * ctx.growth, ctx.max_bits);
  }
}

int sign_of_coeffs(const Basis& basis, const std::vector<Rational>& coeffs,
                   const PrecisionContext& ctx, const char* what) {
  bool irrational = false;
  for (std::size_t j = 1; j < coeffs.size(); ++j) {
    if (sgn(coeffs[j]) != 0) {
      irrational = true;
      break;
    }
  }
  if (!irrational) return sgn(coeffs[0]);
  check_context(ctx);
  return sign_by_enclosure(basis, coeffs, ctx, what);
}

}  // namespace

ExactScalar::ExactScalar(BasisPtr basis, std::vector<Rational> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (!basis_) throw DomainError("scalar requires a basis");
  if (coeffs_.size() != basis_->size() + 1) {
    throw DomainError("scalar needs " + std::to_string(basis_->size() + 1) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
  }
  for (Rational& c : coeffs_) c.canonicalize();
}

ExactScalar ExactScalar::zero(BasisPtr basis) {
  if (!basis) throw DomainError("scalar requires a basis");
  return ExactScalar(basis, std::vector<Rational>(basis->size() + 1, 0));
}

ExactScalar ExactScalar::rational(BasisPtr basis, Rational c0) {
  if (!basis) throw DomainError("scalar requires a basis");
  std::vector<Rational> coeffs(basis->size() + 1, 0);
  coeffs[0] = std::move(c0);
  coeffs[0].canonicalize();
  return ExactScalar(std::move(basis), std::move(coeffs));
}

bool ExactScalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

bool ExactScalar::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) != 0) return false;
  }
  return true;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  require_same_basis(a, b);
  return a.coeffs_ == b.coeffs_;
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  require_same_basis(a, b);
  std::vector<Rational> out(a.coeffs_.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = a.coeffs_[j] + b.coeffs_[j];
  }
  return ExactScalar(a.basis_, std::move(out));
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
  require_same_basis(a, b);
  std::vector<Rational> out(a.coeffs_.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = a.coeffs_[j] - b.coeffs_[j];
  }
  return ExactScalar(a.basis_, std::move(out));
}

ExactScalar operator-(const ExactScalar& a) {
  std::vector<Rational> out(a.coeffs_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = -a.coeffs_[j];
  return ExactScalar(a.basis_, std::move(out));
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& b) {
  require_same_basis(*this, b);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += b.coeffs_[j];
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& b) {
  require_same_basis(*this, b);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= b.coeffs_[j];
  return *this;
}

int sign(const ExactScalar& a, const PrecisionContext& ctx) {
  return sign_of_coeffs(*a.basis(), a.coeffs(), ctx, "sign");
}

int compare(const ExactScalar& a, const ExactScalar& b,
            const PrecisionContext& ctx) {
  require_same_basis(a, b);
  if (a.coeffs() == b.coeffs()) return 0;
  std::vector<Rational> diff(a.coeff_count());
  for (std::size_t j = 0; j < diff.size(); ++j) {
    diff[j] = a.coeff(j) - b.coeff(j);
  }
  return sign_of_coeffs(*a.basis(), diff, ctx, "comparison");
}

// ---------------------------------------------------------------------------
// Decimal rendering.

namespace {

std::string render_scaled_integer(const mpz_class& n, unsigned digits) {
  const bool negative = n < 0;
  std::string body = mpz_class(abs(n)).get_str();
  if (body.size() <= digits) {
    body.insert(0, digits + 1 - body.size(), '0');
  }
  body.insert(body.size() - digits, 1, '.');
  return negative ? "-" + body : body;
}

mpz_class pow10(unsigned digits) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return p;
}

// floor(value * 10^digits + 1/2) with all roundings in the given direction,
// so the result brackets the true decision integer from that side.
mpz_class decision_integer(mpfr_srcptr value, const mpz_class& scale,
                           unsigned work_bits, mpfr_rnd_t dir) {
  detail::Mpfr t{static_cast<mpfr_prec_t>(work_bits)};
  mpfr_mul_z(t.get(), value, scale.get_mpz_t(), dir);
  mpfr_add_q(t.get(), t.get(), Rational(1, 2).get_mpq_t(), dir);
  mpfr_floor(t.get(), t.get());
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), t.get(), MPFR_RNDD);
  return out;
}

}  // namespace

Decimal to_decimal(const ExactScalar& a, unsigned digits,
                   const PrecisionContext& ctx) {
  if (digits == 0 || digits > 1000) {
    throw DomainError("decimal digits must be in 1..1000");
  }
  const mpz_class scale = pow10(digits);

  if (a.is_rational()) {
    // Exact rounding; a tie means the scaled value is exactly half-integral.
    const Rational scaled = a.coeff(0) * Rational(scale);
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const Rational frac = scaled - Rational(n);
    const int c = cmp(frac, Rational(1, 2));
    if (c < 0) return {render_scaled_integer(n, digits), false};
    if (c > 0) return {render_scaled_integer(n + 1, digits), false};
    const bool up = sgn(scaled) >= 0;  // half away from zero
    return {render_scaled_integer(up ? n + 1 : n, digits), true};
  }

  check_context(ctx);
  // Enough working bits that the scaled integer survives the conversion.
  const unsigned need = digits * 4 + 64;
  unsigned bits = std::max(ctx.start_bits, std::min(need, ctx.max_bits));
  for (;;) {
    detail::Enclosure e =
        detail::evaluate_enclosure(*a.basis(), a.coeffs(), bits);
    const unsigned work = bits + 64;
    const mpz_class n_lo =
        decision_integer(e.lo.get(), scale, work, MPFR_RNDD);
    const mpz_class n_hi =
        decision_integer(e.hi.get(), scale, work, MPFR_RNDU);
    if (n_lo == n_hi) return {render_scaled_integer(n_lo, digits), false};
    if (bits >= ctx.max_bits) {
      // Unresolved at the top of the ladder: report the midpoint, flagged.
      detail::Mpfr mid{static_cast<mpfr_prec_t>(work)};
      mpfr_add(mid.get(), e.lo.get(), e.hi.get(), MPFR_RNDN);
      mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
      mpfr_mul_z(mid.get(), mid.get(), scale.get_mpz_t(), MPFR_RNDN);
      mpz_class n;
      mpfr_get_z(n.get_mpz_t(), mid.get(), MPFR_RNDN);
      return {render_scaled_integer(n, digits), true};
    }
    bits = std::min<unsigned long long>(
        static_cast<unsigned long long>(bits) * ctx.growth, ctx.max_bits);
  }
}

// ---------------------------------------------------------------------------
// Literal grammar.

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, const Basis& basis)
      : text_(text), basis_(basis) {}

  std::vector<Rational> parse() {
    std::vector<Rational> coeffs(basis_.size() + 1, 0);
    skip_ws();
    if (at_end()) fail("empty literal");
    bool negative = false;
    accumulate_term(coeffs, negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c == '+') {
        negative = false;
      } else if (c == '-') {
        negative = true;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos_;
      accumulate_term(coeffs, negative);
    }
    return coeffs;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar literal: " + what + " at offset " +
                     std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  mpz_class read_integer(bool allow_sign) {
    skip_ws();
    std::size_t start = pos_;
    if (allow_sign && !at_end() && peek() == '-') ++pos_;
    std::size_t digits_from = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (pos_ == digits_from) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Rational read_rational(bool allow_sign) {
    mpz_class num = read_integer(allow_sign);
    mpz_class den = 1;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      den = read_integer(false);
      if (den == 0) fail("zero denominator");
    }
    return make_rational(num, den);
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void accumulate_term(std::vector<Rational>& coeffs, bool negative) {
    Rational value = read_rational(true);
    if (negative) value = -value;
    skip_ws();
    if (at_end() || peek() != '*') {
      coeffs[0] += value;
      return;
    }
    ++pos_;
    skip_ws();
    if (text_.substr(pos_, 4) != "sqrt") fail("expected 'sqrt'");
    pos_ += 4;
    expect('(');
    Rational radicand = read_rational(false);
    expect(')');
    if (sgn(radicand) <= 0) fail("radicand must be positive");
    if (is_rational_square(radicand)) {
      throw ParseError("radicand " + radicand.get_str() +
                       " is a rational square; fold it into the rational "
                       "coefficient instead");
    }
    auto idx = basis_.index_of(radicand);
    if (!idx) {
      throw ParseError("radicand " + radicand.get_str() +
                       " is not in the basis");
    }
    coeffs[*idx + 1] += value;
  }

  std::string_view text_;
  const Basis& basis_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactScalar parse_scalar(std::string_view text, BasisPtr basis) {
  if (!basis) throw DomainError("scalar requires a basis");
  LiteralParser parser(text, *basis);
  return ExactScalar(std::move(basis), parser.parse());
}

std::string to_literal(const ExactScalar& a) {
  struct Term {
    bool negative;
    std::string magnitude;
  };
  std::vector<Term> terms;
  const Rational& c0 = a.coeff(0);
  if (sgn(c0) != 0) {
    terms.push_back(Term{sgn(c0) < 0, Rational(abs(c0)).get_str()});
  }
  for (std::size_t j = 1; j < a.coeff_count(); ++j) {
    const Rational& c = a.coeff(j);
    if (sgn(c) == 0) continue;
    terms.push_back(Term{sgn(c) < 0, Rational(abs(c)).get_str() + "*" +
                                         a.basis()->element(j - 1).label});
  }
  if (terms.empty()) return "0";
  std::string out = (terms[0].negative ? "-" : "") + terms[0].magnitude;
  for (std::size_t t = 1; t < terms.size(); ++t) {
    out += terms[t].negative ? " - " : " + ";
    out += terms[t].magnitude;
  }
  return out;
}

}  // namespace iet
