#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <map>
#include <mutex>
#include <vector>

#include "iet/basis.hpp"

namespace iet::detail {

// Move-only RAII wrapper around mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() {
    if (initialized_) mpfr_clear(v_);
  }

  Mpfr(Mpfr&& other) noexcept {
    memcpy_swap(other);
  }
  Mpfr& operator=(Mpfr&& other) noexcept {
    if (this != &other) {
      if (initialized_) mpfr_clear(v_);
      initialized_ = false;
      memcpy_swap(other);
    }
    return *this;
  }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  void memcpy_swap(Mpfr& other) noexcept {
    v_[0] = other.v_[0];
    initialized_ = other.initialized_;
    other.initialized_ = false;
  }

  mpfr_t v_;
  bool initialized_ = true;
};

// Outward-rounded enclosure lo <= value <= hi at a fixed working precision.
struct Enclosure {
  Mpfr lo;
  Mpfr hi;

  explicit Enclosure(mpfr_prec_t prec) : lo(prec), hi(prec) {}

  // +1 if lo > 0, -1 if hi < 0, 0 while the enclosure still straddles zero.
  int resolved_sign() const {
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
    return 0;
  }
};

// Memoized sqrt enclosures for the elements of one basis, keyed by working
// precision.  Thread-safe; entries are immutable once inserted.
class SqrtCache {
 public:
  explicit SqrtCache(std::vector<Rational> radicands)
      : radicands_(std::move(radicands)) {}

  // Enclosures of sqrt(r_j) for every j, at the given precision.
  const std::vector<Enclosure>& at_bits(unsigned bits);

 private:
  std::vector<Rational> radicands_;
  std::mutex mutex_;
  std::map<unsigned, std::vector<Enclosure>> by_bits_;
};

// Accumulates the enclosure of c_0 + sum_j c_j sqrt(r_j) at the given
// precision, using cached sqrt enclosures.
Enclosure evaluate_enclosure(const Basis& basis,
                             const std::vector<Rational>& coeffs,
                             unsigned bits);

}  // namespace iet::detail
