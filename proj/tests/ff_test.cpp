// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/fixtures.hpp"

namespace cff {
namespace {

using testing::field;

TEST(FieldCtx, PrimeFieldArithmetic) {
  auto K = field(1);
  Fq one = K->one(), two = K->from_int(2);
  EXPECT_EQ(one + one, two);
  EXPECT_EQ(two + one, K->zero());
  EXPECT_EQ(two * two, one);
  EXPECT_EQ(-one, two);
  EXPECT_EQ(K->from_int(-1), two);
  EXPECT_EQ(two.inv(), two);
}

TEST(FieldCtx, QuadraticExtension) {
  auto K = field(2);  // t^2 + 1
  Fq a = K->gen();
  EXPECT_EQ(a * a, K->from_int(-1));
  EXPECT_EQ(a.pow(4), K->one());
  EXPECT_EQ(K->elements().size(), 9u);
  EXPECT_TRUE(K->is_square(a));  // a^4 = 1
  EXPECT_TRUE(K->is_square(K->from_int(-1)));
  EXPECT_FALSE(K->is_square(a + K->one()));
}

TEST(FieldCtx, RejectsReducibleModulus) {
  EXPECT_THROW(FieldCtx::make({2, 0, 1}), DomainError);  // t^2 - 1
  EXPECT_THROW(FieldCtx::make({0, 0, 1}), DomainError);
  EXPECT_NO_THROW(FieldCtx::make({2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1}));
}

TEST(FieldCtx, SquaresAreHalfTheUnits) {
  for (int m : {1, 2, 3}) {
    auto K = field(m);
    int squares = 0, units = 0;
    std::set<Fq> seen;
    for (const Fq& a : K->elements()) {
      seen.insert(a);
      if (a.is_zero()) continue;
      ++units;
      squares += K->is_square(a);
    }
    EXPECT_EQ(2 * squares, units);
    EXPECT_EQ(seen.size(), std::size_t(units + 1));
  }
}

TEST(FieldCtx, DigitsRoundTrip) {
  auto K = field(10);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    Fq a = K->random(rng);
    EXPECT_EQ(K->from_digits(K->digits(a)), a);
  }
}

class FieldLaws : public ::testing::TestWithParam<int> {};

TEST_P(FieldLaws, RingAxiomsAndInverse) {
  auto K = field(GetParam());
  std::mt19937_64 rng(GetParam());
  for (int t = 0; t < 300; ++t) {
    Fq a = K->random(rng), b = K->random(rng), c = K->random(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, K->zero());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inv(), K->one());
    }
  }
}

TEST_P(FieldLaws, FrobeniusAndCubeRoot) {
  auto K = field(GetParam());
  std::mt19937_64 rng(7 + GetParam());
  for (int t = 0; t < 200; ++t) {
    Fq a = K->random(rng), b = K->random(rng);
    EXPECT_EQ((a + b) * (a + b) * (a + b), a * a * a + b * b * b);
    Fq r = a.cube_root();
    EXPECT_EQ(r * r * r, a);
  }
}

INSTANTIATE_TEST_SUITE_P(Degrees, FieldLaws, ::testing::Values(1, 2, 3, 10));

}  // namespace
}  // namespace cff
