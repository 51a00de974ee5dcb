#pragma once

// Brute-force reference exchange, deliberately independent of the library's
// construction and stepping paths: prefix sums by plain loops, interval
// lookup by linear scan.  Used as the oracle for partition structure checks.

#include <stdexcept>
#include <string>
#include <vector>

#include <iet/iet.hpp>
#include <iet/scalar.hpp>

namespace oracle {

class NaiveIet {
 public:
  NaiveIet(iet::BasisPtr basis, std::vector<iet::ExactScalar> lengths,
           std::vector<int> image, iet::PrecisionContext ctx = {})
      : ctx_(ctx) {
    const int n = static_cast<int>(lengths.size());
    std::vector<int> inverse(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      inverse[static_cast<std::size_t>(image[static_cast<std::size_t>(i - 1)] -
                                       1)] = i;
    }

    iet::ExactScalar acc = iet::ExactScalar::zero(basis);
    b_.push_back(acc);
    for (const auto& a : lengths) {
      acc += a;
      b_.push_back(acc);
    }
    acc = iet::ExactScalar::zero(basis);
    bt_.push_back(acc);
    for (int k = 1; k <= n; ++k) {
      acc += lengths[static_cast<std::size_t>(
          inverse[static_cast<std::size_t>(k - 1)] - 1)];
      bt_.push_back(acc);
    }
    for (int i = 1; i <= n; ++i) {
      const int t = image[static_cast<std::size_t>(i - 1)];
      shift_.push_back(bt_[static_cast<std::size_t>(t - 1)] -
                       b_[static_cast<std::size_t>(i - 1)]);
      image_left_.push_back(bt_[static_cast<std::size_t>(t - 1)]);
      image_right_.push_back(bt_[static_cast<std::size_t>(t)]);
    }
  }

  static NaiveIet of(const iet::IET& t) {
    return NaiveIet(t.basis(), t.spec().lengths, t.permutation().image());
  }

  iet::ExactScalar forward(const iet::ExactScalar& x, bool dual) const {
    for (std::size_t i = 0; i + 1 < b_.size(); ++i) {
      if (contains(b_[i], b_[i + 1], x, dual)) return x + shift_[i];
    }
    throw std::runtime_error("naive forward: no interval contains " +
                             iet::to_literal(x));
  }

  iet::ExactScalar backward(const iet::ExactScalar& y, bool dual) const {
    for (std::size_t i = 0; i < shift_.size(); ++i) {
      if (contains(image_left_[i], image_right_[i], y, dual)) {
        return y - shift_[i];
      }
    }
    throw std::runtime_error("naive backward: no interval contains " +
                             iet::to_literal(y));
  }

  const std::vector<iet::ExactScalar>& breakpoints() const { return b_; }

 private:
  bool contains(const iet::ExactScalar& left, const iet::ExactScalar& right,
                const iet::ExactScalar& x, bool dual) const {
    if (dual) {
      return iet::compare(left, x, ctx_) < 0 && iet::compare(x, right, ctx_) <= 0;
    }
    return iet::compare(left, x, ctx_) <= 0 && iet::compare(x, right, ctx_) < 0;
  }

  iet::PrecisionContext ctx_;
  std::vector<iet::ExactScalar> b_;
  std::vector<iet::ExactScalar> bt_;
  std::vector<iet::ExactScalar> shift_;
  std::vector<iet::ExactScalar> image_left_;
  std::vector<iet::ExactScalar> image_right_;
};

// Exact-coefficient key for duplicate detection without any numeric
// comparison: two scalars on one basis are equal iff their coefficient
// strings agree.
inline std::string coefficient_key(const iet::ExactScalar& x) {
  std::string key;
  for (const iet::Rational& c : x.coeffs()) {
    key += c.get_str();
    key += '|';
  }
  return key;
}

}  // namespace oracle
