// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"

namespace cff {
namespace {

using testing::field;
using testing::monic_irreducibles;
using testing::random_curve;
using testing::typed_curve;

OrderData as_x_curve() {
  auto K = field(1);
  return compute_order_data({poly_one(*K), poly_x(*K)}, K);
}

TEST(SplitFinite, ArtinSchreierExamples) {
  OrderData od = as_x_curve();
  const FieldCtx& K = *od.K;
  SplittingType at_x = split_finite(poly_x(K), od);
  EXPECT_EQ(at_x.tag, Split::completely_split);
  EXPECT_EQ(at_x.roots.size(), 3u);
  EXPECT_EQ(split_finite(parse_poly("2 1", K), od).tag, Split::inert);
}

TEST(SplitFinite, RejectsReducible) {
  OrderData od = as_x_curve();
  EXPECT_THROW(split_finite(parse_poly("0 0 1", *od.K), od), DomainError);
}

TEST(SplitFinite, MatchesEnumeration) {
  for (int m : {1, 2}) {
    auto K = field(m);
    std::mt19937_64 rng(40 + m);
    std::vector<Poly> places = monic_irreducibles(*K, 1);
    for (const auto& P : monic_irreducibles(*K, 2)) places.push_back(P);
    for (int c = 0; c < 12; ++c) {
      OrderData od = random_curve(K, rng);
      for (const auto& P : places) EXPECT_EQ(split_finite(P, od).tag, oracle_split(P, od).tag);
      EXPECT_EQ(od.infinite.tag, oracle_split_infinite(od.curve).tag);
    }
  }
}

TEST(SplitInfinite, Cases) {
  auto K = field(1);
  CurveFile cf = parse_curve(golden::kCurve);
  EXPECT_EQ(split_infinite(cf.curve).tag, Split::totally_ramified);
  EXPECT_EQ(split_infinite({parse_poly("0 1", *K), parse_poly("1", *K)}).tag, Split::partially_ramified);
  // Y^3 - Y over GF(3) vanishes everywhere, Y^3 - Y + 1 nowhere.
  EXPECT_EQ(split_infinite({parse_poly("0 0 1", *K), parse_poly("1 0 0 0", *K)}).tag, Split::completely_split);
  EXPECT_EQ(split_infinite({parse_poly("0 0 1", *K), parse_poly("1 0 0 1", *K)}).tag, Split::inert);
  EXPECT_EQ(split_infinite({parse_poly("0 0 2", *K), parse_poly("1", *K)}).tag, Split::partially_split);
}

TEST(PrimeType, Classification) {
  auto K = field(1);
  std::mt19937_64 rng(44);
  OrderData od = typed_curve(K, {true, true, true}, rng);
  int counts[4] = {};
  for (const auto& P : monic_irreducibles(*K, 1)) ++counts[int(prime_type(P, od))];
  EXPECT_EQ(counts[int(PrimeType::II)], 1);
  EXPECT_EQ(counts[int(PrimeType::III)], 1);
  EXPECT_EQ(counts[int(PrimeType::IV)], 1);
}

TEST(PrimeBasis, WorkedExamplePrimeAboveX) {
  CurveFile cf = parse_curve(golden::kCurve);
  OrderData od = compute_order_data(cf.curve, cf.K);
  const FieldCtx& K = *cf.K;
  auto above = primes_above(poly_x(K), od);
  Poly u1 = parse_poly(golden::kU1, K);
  bool found = false;
  for (const auto& f : above) {
    if (f.prime.kind != PrimeKind::degree_one) continue;
    Ideal p = prime_basis(poly_x(K), f.prime, od);
    if (p.u != u1) continue;
    found = true;
    EXPECT_EQ(p.v, od.one() - u1 * u1);
  }
  EXPECT_TRUE(found);
}

TEST(PrimeBasis, ProductOfPrimesIsP) {
  for (int m : {1, 2}) {
    auto K = field(m);
    std::mt19937_64 rng(45 + m);
    for (int c = 0; c < 4; ++c) {
      OrderData od = typed_curve(K, {true, true, true}, rng);
      for (const auto& P : monic_irreducibles(*K, 1)) {
        Ideal prod = unit_ideal(od);
        for (const auto& f : primes_above(P, od)) {
          Ideal p = prime_basis(P, f.prime, od);
          EXPECT_TRUE(is_ideal(p, od));
          prod = oracle_ideal_mul(prod, oracle_power(p, f.e, od), od);
        }
        EXPECT_EQ(prod, principal_poly(P));
      }
    }
  }
}

// p^i and p^i q^(i+j) against repeated oracle products, for every prime type.
TEST(PrimePowerBasis, MatchesRepeatedProducts) {
  for (int m : {1, 2}) {
    auto K = field(m);
    std::mt19937_64 rng(47 + m);
    for (int c = 0; c < 3; ++c) {
      OrderData od = typed_curve(K, {true, true, true}, rng);
      for (const auto& P : monic_irreducibles(*K, 1)) {
        auto above = primes_above(P, od);
        for (const auto& f : above) {
          Ideal p = prime_basis(P, f.prime, od);
          for (int i = 1; i <= 4; ++i) EXPECT_EQ(prime_power_basis(P, f.prime, i, od), oracle_power(p, i, od));
        }
        if (above.size() < 2) continue;
        const LocalPrime &a = above[0].prime, &b = above[1].prime;
        Ideal pa = prime_basis(P, a, od), pb = prime_basis(P, b, od);
        for (int i = 0; i <= 4; ++i)
          for (int j = 0; i + j <= 4; ++j)
            EXPECT_EQ(prime_power_basis(P, a, b, i, j, od),
                      oracle_ideal_mul(oracle_power(pa, i, od), oracle_power(pb, i + j, od), od));
      }
    }
  }
}

}  // namespace
}  // namespace cff
