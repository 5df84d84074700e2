// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"

namespace cff {
namespace {

using testing::field;
using testing::random_curve;
using testing::random_element;
using testing::typed_curve;

TEST(OrderData, WorkedExampleCurve) {
  CurveFile cf = parse_curve(golden::kCurve);
  OrderData od = compute_order_data(cf.curve, cf.K);
  const FieldCtx& K = *cf.K;
  EXPECT_TRUE(od.I.is_one());
  EXPECT_TRUE(od.i.is_zero());
  EXPECT_TRUE(od.E.is_one());
  EXPECT_EQ(od.F, parse_poly("(0,1) 0 0 0 1", K));
  EXPECT_TRUE(od.Delta.is_one());
  EXPECT_EQ(od.genus, 3);
  EXPECT_EQ(od.infinite.tag, Split::totally_ramified);
  EXPECT_TRUE(od.distinguished_ok);
}

TEST(OrderData, IndexNineCurve) {
  auto K = field(1);
  OrderData od = compute_order_data({parse_poly("2 1 0 1 1", *K), parse_poly("1 0 1 0 1 1 1 0 2", *K)}, K);
  EXPECT_EQ(od.I, parse_poly("2 1 0 1 1", *K));
  EXPECT_EQ(od.FI2.deg(), 9);
  EXPECT_FALSE(od.distinguished_ok);
  EXPECT_EQ(od.genus, 3);
  // i is fixed modulo I by I^2 | i^3 - iA + B.
  EXPECT_EQ(od.i, parse_poly("0 0 2 2", *K));
  EXPECT_TRUE((od.I * od.I).divides(od.i * od.i * od.i - od.i * od.A() + od.B()));
}

TEST(OrderData, NonsingularHasTrivialIndex) {
  auto K = field(1);
  std::mt19937_64 rng(31);
  int seen = 0;
  for (int t = 0; t < 200 && seen < 40; ++t) {
    OrderData od = random_curve(K, rng);
    if (!detect_singularity(od.curve).nonsingular) continue;
    ++seen;
    EXPECT_TRUE(od.I.is_one());
    EXPECT_TRUE(od.i.is_zero());
    EXPECT_EQ(od.Delta, od.A() * od.A() * od.A());
  }
  EXPECT_GT(seen, 0);
}

TEST(OrderData, RejectsNonStandard) {
  auto K = field(1);
  EXPECT_THROW(compute_order_data({parse_poly("1", *K), parse_poly("0 0 0 1", *K)}, K), DomainError);
}

TEST(Genus, Formulas) {
  auto K = field(1);
  OrderData od = compute_order_data({parse_poly("1", *K), parse_poly("0 1", *K)}, K);
  EXPECT_EQ(od.genus, 0);
}

TEST(ElementMul, BasisProducts) {
  auto K = field(1);
  std::mt19937_64 rng(32);
  OrderData od = typed_curve(K, {true, true, true}, rng);
  Element one = elem_one(od), rho = elem_rho(od), omega = elem_omega(od);
  EXPECT_EQ(element_mul(rho, omega, od), (Element{-od.FI, od.zero(), od.zero()}));
  EXPECT_EQ(element_mul(rho, rho, od), (Element{od.A(), od.zero(), od.I}));
  EXPECT_EQ(element_mul(omega, omega, od), (Element{od.zero(), -od.F, -od.E}));
  EXPECT_EQ(element_mul(one + rho, one + omega, od), (Element{od.one() - od.FI, od.one(), od.one()}));
}

TEST(ElementMul, RingLaws) {
  for (int m : {1, 2}) {
    auto K = field(m);
    std::mt19937_64 rng(33 + m);
    for (int c = 0; c < 6; ++c) {
      OrderData od = typed_curve(K, {c % 2 == 0, c % 3 == 0, c % 2 == 1}, rng);
      for (int t = 0; t < 20; ++t) {
        Element x = random_element(od, 3, rng), y = random_element(od, 3, rng), z = random_element(od, 3, rng);
        EXPECT_EQ(element_mul(x, y, od), element_mul(y, x, od));
        EXPECT_EQ(element_mul(element_mul(x, y, od), z, od), element_mul(x, element_mul(y, z, od), od));
        EXPECT_EQ(element_norm(element_mul(x, y, od), od), element_norm(x, od) * element_norm(y, od));
      }
    }
  }
}

TEST(ElementNorm, BasisElements) {
  auto K = field(1);
  std::mt19937_64 rng(34);
  OrderData od = typed_curve(K, {true, true, true}, rng);
  EXPECT_EQ(element_norm(elem_one(od), od), od.one());
  EXPECT_EQ(element_norm(elem_rho(od), od), -od.FI2);
  EXPECT_EQ(element_norm(elem_omega(od), od), od.F2I);
}

TEST(NormDegree, WildCurvesTakeTheMaximum) {
  auto K = field(1);
  std::mt19937_64 rng(35);
  for (int c = 0; c < 5; ++c) {
    OrderData od = typed_curve(K, {}, rng, true);
    for (int t = 0; t < 40; ++t) {
      Element e = random_element(od, 4, rng);
      if (e.is_zero()) continue;
      auto p = norm_degree_parts(e, od);
      EXPECT_EQ(element_norm(e, od).deg(), std::max({p[0], p[1], p[2]}));
    }
  }
}

TEST(NormDegree, Examples) {
  CurveFile cf = parse_curve(golden::kCurve);
  OrderData od = compute_order_data(cf.curve, cf.K);
  Poly x2 = parse_poly("0 0 1", *cf.K);
  auto p = norm_degree_parts({x2, od.zero(), od.zero()}, od);
  EXPECT_EQ(p[0], 6);
  EXPECT_LT(p[1], 0);
  EXPECT_LT(p[2], 0);
  auto q = norm_degree_parts({x2, x2, x2}, od);
  EXPECT_EQ(q, (std::array<int, 3>{6, 10, 14}));
}

TEST(NormDegree, NeedsDistinguishedCurve) {
  auto K = field(1);
  OrderData od = compute_order_data({parse_poly("2 1 0 1 1", *K), parse_poly("1 0 1 0 1 1 1 0 2", *K)}, K);
  EXPECT_THROW(norm_degree_parts(elem_one(od), od), ApplicabilityError);
}

}  // namespace
}  // namespace cff
