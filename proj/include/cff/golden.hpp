// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

// The published worked example over GF(3^10): the class of I1^6 on
// T^3 - T + x^4 + alpha, reduced step by step and compared item by item
// with the printed intermediates.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cff/classgroup.hpp"
#include "cff/io.hpp"

namespace cff::golden {

inline constexpr const char* kCurve =
    "characteristic 3\n"
    "extension 10\n"
    "modulus 2 1 0 0 2 2 2 0 0 0 1\n"
    "A 1\n"
    "B (0,1) 0 0 0 1\n";

// Printed constants, in the digit syntax of io.hpp.
inline constexpr const char* kU1 = "(0,0,0,2,2,1,1,1,2,2)";
inline constexpr const char* kV1 = "(0,0,1,2,1,2,2,0,1)";

struct Item {
  std::string key;
  std::string got;
  std::string expected;
  bool match() const { return got == expected; }
};

struct Report {
  std::vector<Item> items;
  // Whether the printed ideals are closed under rho and omega.
  std::vector<std::pair<std::string, bool>> printed_is_ideal;
  OrderData od;
  CompRedTrace trace;
  Ideal I1, I1sq;
  int mismatches() const {
    int n = 0;
    for (const auto& it : items) n += !it.match();
    return n;
  }
  const Item* find(const std::string& key) const {
    for (const auto& it : items)
      if (it.key == key) return &it;
    return nullptr;
  }
};

// I1 = [x, u1 + rho, v + omega]. The printed v1 fails N(v + omega) = 0
// modulo x; the input uses v = A - u1^2, the only value that makes I1 an
// ideal with the printed u1.
inline Ideal first_ideal(const OrderData& od, const FieldCtx& K) {
  Poly u1 = parse_poly(kU1, K);
  Poly o = poly_one(K);
  return make_ideal(poly_x(K), o, o, u1, od.A() - u1 * u1, poly_zero(K));
}

inline Report run() {
  CurveFile cf = parse_curve(kCurve);
  const FieldCtx& K = *cf.K;
  Report r;
  r.od = compute_order_data(cf.curve, cf.K);
  const OrderData& od = r.od;
  auto add = [&](std::string key, std::string got, std::string expected) {
    r.items.push_back({std::move(key), std::move(got), std::move(expected)});
  };
  auto P = [&](const char* text) { return format_poly(parse_poly(text, K)); };

  add("genus", std::to_string(od.genus), "3");
  add("artin_schreier", is_artin_schreier(od.curve) ? "true" : "false", "true");
  add("infinite", split_name(od.infinite.tag), "totally_ramified");

  r.I1 = first_ideal(od, K);
  Ideal I2 = ideal_mul_primitive(r.I1, r.I1, od);
  Ideal I3 = ideal_mul_primitive(I2, r.I1, od);
  r.I1sq = I2;
  r.trace = comp_red_trace(I3, I3, od);
  const CompRedTrace& t = r.trace;

  const Ideal& J6 = t.product.J;
  add("step1.D", format_poly(t.product.D), "1");
  add("step1.s", format_poly(J6.s), P("0 0 0 0 0 0 1"));
  add("step1.u", format_poly(J6.u), P("(0,0,0,2,2,1,1,1,2,2) 0 0 0 1"));
  add("step1.v", format_poly(J6.v), P("(2,0,2,1,2,1,1,0,2) 0 0 0 (0,0,0,2,2,1,1,1,2,2)"));

  // Printed as v3 = -v2, w3 = -u2.
  add("step2.s", format_poly(t.inverse.s), P("0 0 0 0 0 0 1"));
  add("step2.sp", format_poly(t.inverse.sp), P("0 0 0 0 0 0 1"));
  add("step2.v", format_poly(t.inverse.v), P("(1,0,1,2,1,2,2,0,1) 0 0 0 (0,0,0,1,1,2,2,2,1,1)"));
  add("step2.w", format_poly(t.inverse.w), P("(0,0,0,1,1,2,2,2,1,1) 0 0 0 2"));

  add("step3.a", format_poly(t.alpha.a), P("0 0 (2,0,1,2,1,2,2,0,1)"));
  add("step3.b", format_poly(t.alpha.b), P("0 0 (0,0,0,1,1,2,2,2,1,1)"));
  add("step3.c", format_poly(t.alpha.c), P("0 0 1"));

  add("step4", format_ideal(t.principal),
      "ideal d=" + P("0 0 1") + " s=" + P("0 0 0 0 1") + " sp=" + P("0 0 0 0 1") + " spp=1 u=0 v=" +
          P("(2,0,1,2,1,2,2,0,1)") + " w=" + P("(0,0,0,1,1,2,2,2,1,1)"));

  add("step5.s", format_poly(t.result.s), P("0 0 1"));
  add("step5.u", format_poly(t.result.u), P(kU1));
  add("step5.v", format_poly(t.result.v), P(kV1));
  Poly o = poly_one(K), z = poly_zero(K);
  auto check = [&](const char* key, const Poly& s, const char* u, const char* v) {
    r.printed_is_ideal.push_back({key, is_ideal(make_ideal(s, o, o, parse_poly(u, K), parse_poly(v, K), z), od)});
  };
  check("I1", poly_x(K), kU1, kV1);
  check("step1", parse_poly("0 0 0 0 0 0 1", K), "(0,0,0,2,2,1,1,1,2,2) 0 0 0 1",
        "(2,0,2,1,2,1,1,0,2) 0 0 0 (0,0,0,2,2,1,1,1,2,2)");
  check("step5", parse_poly("0 0 1", K), kU1, kV1);
  add("step5.equals_I1_squared", format_ideal(t.result) == format_ideal(I2) ? "true" : "false", "true");
  return r;
}

}  // namespace cff::golden
