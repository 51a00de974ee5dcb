#pragma once

// Shared example exchanges used across the test suites:
//   e1        n=2 swap with lengths (sqrt(2)-1, 2-sqrt(2))
//   e2        n=2 swap with lengths (1/2, 1/2): rational rotation
//   e3        n=3 reversal (3,2,1) over {sqrt(2), sqrt(3)}: fully split
//   e4        n=3 cycle (2,3,1), same lengths: irreducible, not split
//   identity2 n=2 identity permutation

#include <random>
#include <string>
#include <vector>

#include <iet/iet.hpp>
#include <iet/scalar.hpp>

namespace fixtures {

inline iet::IET make_iet(iet::BasisPtr basis,
                         const std::vector<std::string>& lengths,
                         std::vector<int> image) {
  std::vector<iet::ExactScalar> parsed;
  parsed.reserve(lengths.size());
  for (const std::string& text : lengths) {
    parsed.push_back(iet::parse_scalar(text, basis));
  }
  return iet::build_iet(iet::IETSpec{std::move(basis), std::move(parsed),
                                     iet::Permutation(std::move(image))});
}

inline iet::IET e1() {
  return make_iet(iet::Basis::create({2}),
                  {"-1 + 1*sqrt(2)", "2 - 1*sqrt(2)"}, {2, 1});
}

inline iet::IET e2() {
  return make_iet(iet::Basis::rational_only(), {"1/2", "1/2"}, {2, 1});
}

inline iet::IET e3() {
  return make_iet(iet::Basis::create({2, 3}),
                  {"-1 + 1*sqrt(2)", "-3/2 + 1*sqrt(3)",
                   "7/2 - 1*sqrt(2) - 1*sqrt(3)"},
                  {3, 2, 1});
}

inline iet::IET e4() {
  return make_iet(iet::Basis::create({2, 3}),
                  {"-1 + 1*sqrt(2)", "-3/2 + 1*sqrt(3)",
                   "7/2 - 1*sqrt(2) - 1*sqrt(3)"},
                  {2, 3, 1});
}

inline iet::IET identity2() {
  return make_iet(iet::Basis::rational_only(), {"1/2", "1/2"}, {1, 2});
}

// Point literals over the exchange's own basis.
inline iet::ExactScalar pt(const iet::IET& t, const std::string& literal) {
  return iet::parse_scalar(literal, t.basis());
}

inline iet::ExactScalar scalar(const iet::BasisPtr& basis,
                               std::vector<iet::Rational> coeffs) {
  return iet::ExactScalar(basis, std::move(coeffs));
}

inline iet::Rational random_rational(std::mt19937& rng, int max_num = 99,
                                     int max_den = 99) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return iet::make_rational(num(rng), den(rng));
}

inline iet::ExactScalar random_scalar(const iet::BasisPtr& basis,
                                      std::mt19937& rng) {
  std::vector<iet::Rational> coeffs;
  coeffs.reserve(basis->size() + 1);
  for (std::size_t j = 0; j <= basis->size(); ++j) {
    coeffs.push_back(random_rational(rng));
  }
  return iet::ExactScalar(basis, std::move(coeffs));
}

// Random rational point in [0,1).
inline iet::ExactScalar random_unit_point(const iet::BasisPtr& basis,
                                          std::mt19937& rng) {
  std::uniform_int_distribution<int> den(2, 997);
  const int d = den(rng);
  std::uniform_int_distribution<int> num(0, d - 1);
  return iet::ExactScalar::rational(basis, iet::make_rational(num(rng), d));
}

}  // namespace fixtures
