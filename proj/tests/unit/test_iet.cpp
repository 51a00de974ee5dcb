#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include <iet/errors.hpp>
#include <iet/iet.hpp>

#include "fixtures.hpp"
#include "naive_iet.hpp"

using iet::DomainError;
using iet::ExactScalar;
using iet::Variant;
using iet::apply;
using iet::boundary_images;
using fixtures::pt;

TEST_CASE("build computes breakpoints, image breakpoints and translations") {
  SUBCASE("two intervals, irrational rotation") {
    const auto t = fixtures::e1();
    CHECK(t.breakpoints()[1] == pt(t, "-1 + 1*sqrt(2)"));
    CHECK(t.image_breakpoints()[1] == pt(t, "2 - 1*sqrt(2)"));
    CHECK(t.translations()[0] == pt(t, "2 - 1*sqrt(2)"));
    CHECK(t.translations()[1] == pt(t, "1 - 1*sqrt(2)"));
    CHECK(t.classification().split);
    CHECK_FALSE(t.classification().fully_split);
  }

  SUBCASE("three intervals, reversal") {
    const auto t = fixtures::e3();
    CHECK(t.image_breakpoints()[1] == pt(t, "7/2 - 1*sqrt(2) - 1*sqrt(3)"));
    CHECK(t.image_breakpoints()[2] == pt(t, "2 - 1*sqrt(2)"));
    CHECK(t.translations()[0] == pt(t, "2 - 1*sqrt(2)"));
    CHECK(t.translations()[1] == pt(t, "9/2 - 2*sqrt(2) - 1*sqrt(3)"));
    CHECK(t.translations()[2] == pt(t, "5/2 - 1*sqrt(2) - 1*sqrt(3)"));
    CHECK(t.classification().fully_split);
  }

  SUBCASE("identity permutation translates by zero") {
    const auto t = fixtures::identity2();
    CHECK(t.translations()[0].is_zero());
    CHECK(t.translations()[1].is_zero());
  }
}

TEST_CASE("build rejects invalid data") {
  auto basis = iet::Basis::rational_only();
  const auto lengths = [&](std::vector<std::string> texts) {
    std::vector<ExactScalar> out;
    for (const auto& s : texts) out.push_back(iet::parse_scalar(s, basis));
    return out;
  };

  CHECK_THROWS_WITH_AS(
      (void)iet::build_iet({basis, lengths({"1/2", "1/3"}),
                            iet::Permutation({2, 1})}),
      "lengths sum to 1 + (-1/6)", DomainError);
  CHECK_THROWS_AS((void)iet::build_iet({basis, lengths({"3/2", "-1/2"}),
                                        iet::Permutation({2, 1})}),
                  DomainError);
  CHECK_THROWS_AS((void)iet::build_iet({basis, lengths({"1/2", "1/2", "0"}),
                                        iet::Permutation({3, 2, 1})}),
                  DomainError);
  CHECK_THROWS_AS((void)iet::build_iet({basis, lengths({"1/2", "1/2"}),
                                        iet::Permutation({3, 2, 1})}),
                  DomainError);
}

TEST_CASE("apply follows the translations and checks domains") {
  const auto t = fixtures::e1();
  const auto b1 = pt(t, "-1 + 1*sqrt(2)");

  CHECK(apply(t, Variant::T, 1, pt(t, "0")) == pt(t, "2 - 1*sqrt(2)"));
  CHECK(apply(t, Variant::T, 1, b1) == pt(t, "0"));
  CHECK(apply(t, Variant::Dual, 1, b1) == pt(t, "1"));
  CHECK(apply(t, Variant::T, -1, b1) == pt(t, "-2 + 2*sqrt(2)"));
  CHECK(apply(t, Variant::T, -2, b1) == pt(t, "-4 + 3*sqrt(2)"));

  CHECK_THROWS_AS((void)apply(t, Variant::T, 1, pt(t, "1")), DomainError);
  CHECK_THROWS_AS((void)apply(t, Variant::Dual, 1, pt(t, "0")), DomainError);
  CHECK_THROWS_AS((void)apply(t, Variant::T, 1, pt(t, "-1/10")), DomainError);

  const auto id = fixtures::identity2();
  const auto x = pt(id, "1/3");
  for (long long k : {-5LL, -1LL, 0LL, 1LL, 7LL}) {
    CHECK(apply(id, Variant::T, k, x) == x);
  }
}

TEST_CASE("inversion and the naive evaluator agree with apply") {
  std::mt19937 rng(7151);
  for (const auto& t : {fixtures::e1(), fixtures::e3(), fixtures::e4()}) {
    const auto naive = oracle::NaiveIet::of(t);
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = fixtures::random_unit_point(t.basis(), rng);
      const auto fwd = apply(t, Variant::T, 1, x);
      CHECK(fwd == naive.forward(x, /*dual=*/false));
      CHECK(apply(t, Variant::T, -1, fwd) == x);

      if (!x.is_zero()) {
        const auto dual_fwd = apply(t, Variant::Dual, 1, x);
        CHECK(dual_fwd == naive.forward(x, /*dual=*/true));
        CHECK(apply(t, Variant::Dual, -1, dual_fwd) == x);
      }

      CHECK(apply(t, Variant::T, -7, apply(t, Variant::T, 7, x)) == x);
    }
  }
}

TEST_CASE("length preservation and unit partition") {
  std::mt19937 rng(99001);
  for (const auto& t : {fixtures::e1(), fixtures::e3(), fixtures::e4()}) {
    const auto& tau = t.permutation();
    for (int i = 1; i <= t.interval_count(); ++i) {
      const auto image_len =
          t.image_breakpoints()[static_cast<std::size_t>(tau(i))] -
          t.image_breakpoints()[static_cast<std::size_t>(tau(i) - 1)];
      const auto len = t.breakpoints()[static_cast<std::size_t>(i)] -
                       t.breakpoints()[static_cast<std::size_t>(i - 1)];
      CHECK(image_len == len);
    }

    // Every point of [0,1) lies in exactly one interval.
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = fixtures::random_unit_point(t.basis(), rng);
      int containing = 0;
      for (int i = 1; i <= t.interval_count(); ++i) {
        const auto& lo = t.breakpoints()[static_cast<std::size_t>(i - 1)];
        const auto& hi = t.breakpoints()[static_cast<std::size_t>(i)];
        if (iet::compare(lo, x) <= 0 && iet::compare(x, hi) < 0) ++containing;
      }
      CHECK(containing == 1);
      CHECK(t.interval_index(x, Variant::T) >= 1);
    }
  }
}

TEST_CASE("the two variants agree along breakpoint-free orbits") {
  const auto t = fixtures::e3();
  std::mt19937 rng(5150);
  const int depth = 15;
  int exercised = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = fixtures::random_unit_point(t.basis(), rng);
    if (x.is_zero()) continue;

    // Only points whose forward orbit misses {0} and the breakpoints.
    bool clean = true;
    auto y = x;
    for (int j = 0; j < depth && clean; ++j) {
      if (y.is_zero()) clean = false;
      for (const auto& d : t.interior_breakpoints()) {
        if (y == d) clean = false;
      }
      if (j + 1 < depth && clean) y = apply(t, Variant::T, 1, y);
    }
    if (!clean) continue;
    ++exercised;

    for (int j = 1; j <= depth; ++j) {
      const auto fwd = apply(t, Variant::T, j, x);
      CHECK(fwd == apply(t, Variant::Dual, j, x));
      if (j < depth) {
        CHECK(t.interval_index(fwd, Variant::T) ==
              t.interval_index(fwd, Variant::Dual));
      }
    }
  }
  CHECK(exercised > 20);
}

TEST_CASE("boundary images") {
  SUBCASE("two-interval rotation: both endpoint coincidences") {
    const auto t = fixtures::e1();
    const auto images = boundary_images(t);
    REQUIRE(images.interior.size() == 1);
    CHECK(images.interior[0].dual_forward == pt(t, "1"));
    CHECK(images.interior[0].forward == pt(t, "0"));
    CHECK(images.t_zero == pt(t, "2 - 1*sqrt(2)"));
    CHECK(images.forward_coincide);
    CHECK(images.backward_coincide);
    CHECK(images.t_inverse_zero == pt(t, "-1 + 1*sqrt(2)"));
  }

  SUBCASE("fully split reversal: no coincidences") {
    const auto t = fixtures::e3();
    const auto images = boundary_images(t);
    CHECK(images.t_zero == pt(t, "2 - 1*sqrt(2)"));
    CHECK(images.dual_one == pt(t, "7/2 - 1*sqrt(2) - 1*sqrt(3)"));
    CHECK_FALSE(images.forward_coincide);
    CHECK_FALSE(images.backward_coincide);
  }

  SUBCASE("identity fixes every breakpoint") {
    const auto t = fixtures::identity2();
    const auto images = boundary_images(t);
    REQUIRE(images.interior.size() == 1);
    CHECK(images.interior[0].dual_forward == images.interior[0].point);
    CHECK(images.interior[0].forward == images.interior[0].point);
  }
}
