// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "support/fixtures.hpp"

namespace cff {
namespace {

using testing::field;

std::string parse_error(const std::string& text) {
  try {
    parse_curve(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(Format, FieldElementsAndPolynomials) {
  auto K = field(10);
  EXPECT_EQ(format_fq(K->zero()), "0");
  EXPECT_EQ(format_fq(K->from_int(2)), "2");
  EXPECT_EQ(format_fq(K->gen()), "(0,1)");
  EXPECT_EQ(format_poly(poly_zero(*K)), "0");
  EXPECT_EQ(format_poly(parse_poly("(0,1) 0 0 0 1", *K)), "(0,1) 0 0 0 1");
  EXPECT_EQ(format_poly(parse_poly("(1,0,0) 2", *K)), "1 2");
}

TEST(RoundTrip, Polynomials) {
  for (int m : {1, 2, 10}) {
    auto K = field(m);
    std::mt19937_64 rng(300 + m);
    for (int t = 0; t < 100; ++t) {
      Poly f = random_poly(K->zero(), int(rng() % 8), rng);
      EXPECT_EQ(parse_poly(format_poly(f), *K), f);
    }
  }
}

TEST(RoundTrip, Ideals) {
  auto K = field(2);
  std::mt19937_64 rng(310);
  OrderData od = testing::typed_curve(K, {true, false, true}, rng);
  for (int t = 0; t < 40; ++t) {
    Ideal J = with_content(testing::random_ideal(od, rng, 5), testing::random_nonzero(*K, 2, rng));
    EXPECT_EQ(parse_ideal(format_ideal(J), *K), J);
  }
}

TEST(RoundTrip, Curves) {
  CurveFile cf = parse_curve(golden::kCurve);
  EXPECT_EQ(format_curve(*cf.K, cf.curve), golden::kCurve);
  CurveFile again = parse_curve(format_curve(*cf.K, cf.curve));
  EXPECT_EQ(format_curve(*again.K, again.curve), golden::kCurve);
}

TEST(ParseCurve, CommentsAndBlankLines) {
  CurveFile cf = parse_curve("# header\n\ncharacteristic 3 # prime\nextension 1\nmodulus 0 1\nA 1\n\nB 0 1\n");
  EXPECT_EQ(cf.K->m(), 1);
  EXPECT_EQ(format_poly(cf.curve.B), "0 1");
}

TEST(ParseCurve, Errors) {
  EXPECT_NE(parse_error("characteristic 5\nextension 1\nmodulus 0 1\nA 1\nB 0 1\n").find("line 1"), std::string::npos);
  EXPECT_NE(parse_error("characteristic 3\nextension 1\nmodulus 0 1\nA 1\nB\n").find("line 5"), std::string::npos);
  EXPECT_NE(parse_error("characteristic 3\nextension 2\nmodulus 2 0 1\nA 1\nB 0 1\n").find("line 3"),
            std::string::npos);
  EXPECT_NE(parse_error("characteristic 3\nextension 1\nmodulus 0 1\nA 1\nB 0 -1\n").find("write 2 for -1"),
            std::string::npos);
  EXPECT_NE(parse_error("characteristic 3\nextension 1\nmodulus 0 1\nA 1\nB 0 3\n").find("column"), std::string::npos);
  EXPECT_NE(parse_error("characteristic 3\nextension 1\nmodulus 0 1 1\nA 1\nB 0 1\n").find("m + 1"),
            std::string::npos);
  EXPECT_NE(parse_error("characteristic 3\nextension 1\nmodulus 0 1\nB 0 1\nA 1\n").find("expected 'A'"),
            std::string::npos);
  EXPECT_NE(parse_error("characteristic 3\nextension 1\nmodulus 0 1\nA 1\n").find("expected 'B'"), std::string::npos);
  EXPECT_NE(parse_error("characteristic 3\nextension 1\nmodulus 0 1\nA 1\nB (1,1)\n").find("more than m"),
            std::string::npos);
}

TEST(ParseCurve, ErrorColumn) {
  std::string e = parse_error("characteristic 3\nextension 1\nmodulus 0 1\nA 1\nB 0 1 7\n");
  EXPECT_NE(e.find("line 5, column 7"), std::string::npos) << e;
}

TEST(ParseIdeal, Defaults) {
  auto K = field(1);
  Ideal J = parse_ideal("ideal s=0 1 u=2", *K);
  EXPECT_TRUE(J.d.is_one());
  EXPECT_TRUE(J.sp.is_one());
  EXPECT_TRUE(J.spp.is_one());
  EXPECT_EQ(format_poly(J.u), "2");
  EXPECT_TRUE(J.v.is_zero());
  Ideal U = parse_ideal("ideal", *K);
  EXPECT_TRUE(U.s.is_one());
}

TEST(ParseIdeal, Errors) {
  auto K = field(1);
  EXPECT_THROW(parse_ideal("ideal q=1", *K), ParseError);
  EXPECT_THROW(parse_ideal("ideal s=0 1 s=0 1", *K), ParseError);
  EXPECT_THROW(parse_ideal("ideal s=0 1 sp=0 0 1", *K), ParseError);
  EXPECT_THROW(parse_ideal("ideals s=1", *K), ParseError);
  EXPECT_THROW(parse_ideal("ideal s=", *K), ParseError);
}

}  // namespace
}  // namespace cff
