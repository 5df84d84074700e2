// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"

namespace cff {
namespace {

using testing::field;
using testing::random_nonzero;

Poly P(const FieldCtx& K, const char* text) { return parse_poly(text, K); }

Curve example_curve() {
  static const CurveFile cf = parse_curve(golden::kCurve);
  return cf.curve;
}

Curve index_nine_curve() {
  auto K = field(1);
  return {P(*K, "2 1 0 1 1"), P(*K, "1 0 1 0 1 1 1 0 2")};
}

TEST(Depress, AlreadyDepressed) {
  auto K = field(1);
  Poly o = poly_one(*K), z = poly_zero(*K), x = poly_x(*K);
  Curve c = depress({o, z, o, x});
  EXPECT_EQ(c.A, poly_const(*K, 2));
  EXPECT_EQ(c.B, x);
  c = depress({o, z, -x, x});
  EXPECT_EQ(c.A, x);
  EXPECT_EQ(c.B, x);
}

TEST(Depress, GeneralBranch) {
  auto K = field(1);
  Poly o = poly_one(*K), z = poly_zero(*K), x = poly_x(*K);
  Curve c = depress({o, o, z, x});
  Poly N = o + x;
  EXPECT_EQ(c.A, -(N * N));
  EXPECT_EQ(c.B, N * N);
}

TEST(Depress, Degenerate) {
  auto K = field(1);
  Poly o = poly_one(*K), z = poly_zero(*K);
  EXPECT_THROW(depress({o, z, z, o}), DomainError);
  EXPECT_THROW(depress({z, o, o, o}), DomainError);
  // N = S - U^2 V + U^3 W = 1 - 1 + 0.
  EXPECT_THROW(depress({o, o, o, z}), DomainError);
}

TEST(Criteria, DegreeConditions) {
  auto K = field(1);
  EXPECT_EQ(criterion(example_curve()), Criterion::wild);
  EXPECT_EQ(criterion(index_nine_curve()), Criterion::wild);
  EXPECT_EQ(criterion({P(*K, "0 0 1"), P(*K, "1 0 0 1")}), Criterion::tame);
  EXPECT_EQ(criterion({P(*K, "1"), P(*K, "0 0 0 1")}), Criterion::none);
}

TEST(RemoveSingularFactor, UnitAHasNone) {
  EXPECT_FALSE(remove_singular_factor(example_curve()).has_value());
}

TEST(RemoveSingularFactor, IndexNineCurveIsStandard) {
  EXPECT_FALSE(remove_singular_factor(index_nine_curve()).has_value());
  EXPECT_TRUE(is_standard(index_nine_curve()));
}

TEST(RemoveSingularFactor, TrivialShift) {
  auto K = field(1);
  Poly x = poly_x(*K);
  Poly a = P(*K, "1 1");
  Poly B = P(*K, "2 0 1") * x * x * x;
  auto r = remove_singular_factor({x * x * a, B});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->Q, x);
  EXPECT_TRUE(r->i.is_zero());
  EXPECT_EQ(r->curve.A, a);
  EXPECT_EQ(r->curve.B, P(*K, "2 0 1"));
}

TEST(RemoveSingularFactor, ShiftedRoot) {
  // T -> T + i carries T^3 - x^2 T + x^3 to a curve with B = i^3 - i x^2 + x^3.
  auto K = field(1);
  Poly x = poly_x(*K), o = poly_one(*K);
  Poly i = o;
  Curve c{x * x, i * i * i - i * x * x + x * x * x};
  auto r = remove_singular_factor(c);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->Q, x);
  Poly t = r->i * r->i * r->i - r->i * c.A + c.B;
  EXPECT_TRUE(power(x, 3).divides(t));
}

TEST(ReduceB, LowersDegreeDivisibleByThree) {
  auto K = field(1);
  Curve c{P(*K, "0 1"), P(*K, "0 1 0 1")};
  Curve r = reduce_b_degree(c);
  EXPECT_EQ(criterion(r), Criterion::wild);
  EXPECT_EQ(r.A, c.A);
  EXPECT_EQ(r.B, P(*K, "0 1 1"));
}

TEST(ReduceB, UnchangedWhenCriterionHolds) {
  auto K = field(1);
  Curve wild{P(*K, "1"), P(*K, "1 0 0 0 1")};
  EXPECT_EQ(reduce_b_degree(wild), wild);
  Curve tame{P(*K, "0 0 1"), P(*K, "1 1 0 1")};
  EXPECT_EQ(reduce_b_degree(tame), tame);
}

TEST(ReduceB, BecomesReducible) {
  // T^3 - T + (x^3 - x): the shift T -> T - x leaves B = 0.
  auto K = field(1);
  Curve c{P(*K, "1"), P(*K, "0 2 0 1")};
  EXPECT_THROW(reduce_b_degree(c), DomainError);
}

TEST(Standardize, FixedCurves) {
  for (const Curve& c : {example_curve(), index_nine_curve()}) {
    Standardized s = standardize(c);
    EXPECT_EQ(s.curve, c);
    EXPECT_EQ(s.crit, Criterion::wild);
    EXPECT_TRUE(s.transcript.empty());
  }
}

TEST(Standardize, IdempotentOnRandomCubics) {
  for (int m : {1, 2}) {
    auto K = field(m);
    std::mt19937_64 rng(20 + m);
    for (int t = 0; t < 150; ++t) {
      GeneralCubic g{random_nonzero(*K, 3, rng), random_poly(K->zero(), 3, rng), random_poly(K->zero(), 3, rng),
                     random_nonzero(*K, 4, rng)};
      Standardized s;
      try {
        s = standardize(g);
      } catch (const DomainError&) {
        continue;
      }
      EXPECT_TRUE(is_standard(s.curve));
      Standardized again = standardize(s.curve);
      EXPECT_EQ(again.curve, s.curve);
      EXPECT_TRUE(again.transcript.empty());
    }
  }
}

TEST(Singularity, Examples) {
  auto K = field(1);
  auto d = detect_singularity(example_curve());
  EXPECT_TRUE(d.nonsingular);
  auto e = detect_singularity(index_nine_curve());
  EXPECT_FALSE(e.nonsingular);
  EXPECT_EQ(e.d, P(*K, "2 1 0 1 1"));
}

TEST(ArtinSchreier, SquareA) {
  auto K = field(1);
  EXPECT_TRUE(is_artin_schreier(example_curve()));
  EXPECT_FALSE(is_artin_schreier({P(*K, "0 1"), P(*K, "1 0 1")}));
  EXPECT_TRUE(is_artin_schreier({P(*K, "0 0 1"), P(*K, "1 0 0 0 0 1")}));
}

TEST(PolynomialRoot, Detects) {
  auto K = field(1);
  Poly x = poly_x(*K), o = poly_one(*K);
  // y = x + 1 is a root of T^3 - (x^2 + 1) T + B with B = y A - y^3.
  Poly y = x + o, A = x * x + o;
  EXPECT_TRUE(has_polynomial_root({A, y * A - y * y * y}));
  EXPECT_FALSE(has_polynomial_root({P(*K, "1"), P(*K, "0 1")}));
}

}  // namespace
}  // namespace cff
