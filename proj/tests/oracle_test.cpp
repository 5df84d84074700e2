// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/fixtures.hpp"

namespace cff {
namespace {

using testing::field;
using testing::random_element;
using testing::typed_curve;

TEST(Triangularize, UnitAndPrincipal) {
  auto K = field(1);
  std::mt19937_64 rng(400);
  OrderData od = typed_curve(K, {true, true, false}, rng);
  EXPECT_EQ(module_triangularize({elem_one(od), elem_rho(od), elem_omega(od)}), unit_ideal(od));
  EXPECT_THROW(module_triangularize({elem_one(od)}), DomainError);
  Poly x = poly_x(*K);
  GeneratorSet g = {elem_one(od).scale(x), elem_rho(od).scale(x), elem_omega(od).scale(x)};
  EXPECT_EQ(module_triangularize(g), principal_poly(x));
  EXPECT_THROW(module_triangularize({}), DomainError);
}

TEST(Triangularize, IndependentOfGeneratorOrder) {
  auto K = field(2);
  std::mt19937_64 rng(401);
  OrderData od = typed_curve(K, {false, true, true}, rng);
  for (int t = 0; t < 30; ++t) {
    Element a = random_element(od, 3, rng);
    Poly n = testing::random_nonzero(*K, 3, rng);
    GeneratorSet g;
    for (const auto& b : {elem_one(od), elem_rho(od), elem_omega(od)}) {
      g.push_back(element_mul(a, b, od));
      g.push_back(b.scale(n));
    }
    Ideal J = module_triangularize(g);
    std::reverse(g.begin(), g.end());
    EXPECT_EQ(module_triangularize(g), J);
    EXPECT_TRUE(is_ideal(J.primitive(), od));
    EXPECT_TRUE(ideal_member(a, J));
  }
}

TEST(Triangularize, ContainmentOfProducts) {
  auto K = field(1);
  std::mt19937_64 rng(402);
  OrderData od = typed_curve(K, {true, false, true}, rng);
  for (int t = 0; t < 20; ++t) {
    Ideal A = testing::random_ideal(od, rng, 4), B = testing::random_ideal(od, rng, 4);
    Ideal AB = oracle_ideal_mul(A, B, od);
    EXPECT_TRUE(oracle_contains(AB, A));
    EXPECT_TRUE(oracle_contains(AB, B));
    EXPECT_EQ(oracle_contains(A, B), ideal_contains(A, B));
    if (!(A.s == AB.s)) {
      EXPECT_FALSE(oracle_contains(A, AB));
    }
    EXPECT_EQ(ideal_norm(AB), (ideal_norm(A) * ideal_norm(B)).monic());
  }
}

TEST(MinNorm, UnitIdealAndBudget) {
  auto K = field(1);
  std::mt19937_64 rng(403);
  OrderData od = typed_curve(K, {}, rng, true);
  EXPECT_EQ(oracle_min_norm(unit_ideal(od), 1, od), 0);
  EXPECT_THROW(oracle_min_norm(unit_ideal(od), 40, od), DomainError);
}

TEST(Split, EnumerationExamples) {
  auto K = field(1);
  OrderData od = compute_order_data({poly_one(*K), poly_x(*K)}, K);
  EXPECT_EQ(oracle_split(poly_x(*K), od).tag, Split::completely_split);
  EXPECT_EQ(oracle_split(parse_poly("2 1", *K), od).tag, Split::inert);
  EXPECT_EQ(oracle_split_infinite(od.curve).tag, Split::totally_ramified);
}

}  // namespace
}  // namespace cff
