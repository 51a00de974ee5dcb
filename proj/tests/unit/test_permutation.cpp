#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include <iet/errors.hpp>
#include <iet/permutation.hpp>

using iet::DomainError;
using iet::Permutation;
using iet::PermutationClass;
using iet::classify_permutation;

TEST_CASE("permutation validation") {
  CHECK_NOTHROW(Permutation({2, 1}));
  CHECK_THROWS_AS(Permutation({1}), DomainError);        // n >= 2
  CHECK_THROWS_AS(Permutation({1, 1}), DomainError);     // not a bijection
  CHECK_THROWS_AS(Permutation({0, 1}), DomainError);     // out of range
  CHECK_THROWS_AS(Permutation({1, 3}), DomainError);
}

TEST_CASE("inverse") {
  Permutation p({2, 3, 1});
  CHECK(p.inverse() == Permutation({3, 1, 2}));
  CHECK(p.inverse().inverse() == p);
}

TEST_CASE("classification of the basic examples") {
  const auto swap2 = classify_permutation(Permutation({2, 1}));
  CHECK(swap2.irreducible);
  CHECK(swap2.split);
  CHECK_FALSE(swap2.fully_split);

  const auto cycle3 = classify_permutation(Permutation({2, 3, 1}));
  CHECK(cycle3.irreducible);
  CHECK_FALSE(cycle3.split);
  CHECK_FALSE(cycle3.fully_split);

  const auto reversal3 = classify_permutation(Permutation({3, 2, 1}));
  CHECK(reversal3.irreducible);
  CHECK(reversal3.split);
  CHECK(reversal3.fully_split);

  const auto id2 = classify_permutation(Permutation({1, 2}));
  CHECK_FALSE(id2.irreducible);
  CHECK_FALSE(id2.split);

  const auto reducible = classify_permutation(Permutation({2, 1, 3}));
  CHECK_FALSE(reducible.irreducible);
}

TEST_CASE("classification is invariant under inversion") {
  // Exhaustive over all permutations of sizes 2..6.
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    do {
      const Permutation p(image);
      const PermutationClass a = classify_permutation(p);
      const PermutationClass b = classify_permutation(p.inverse());
      CHECK(a.irreducible == b.irreducible);
      CHECK(a.split == b.split);
      CHECK(a.fully_split == b.fully_split);
    } while (std::next_permutation(image.begin(), image.end()));
  }
}
