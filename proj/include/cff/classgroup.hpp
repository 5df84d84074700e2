// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

// Minimal-norm elements, canonical bases of principal ideals and
// composition with reduction to the distinguished representative.

#pragma once

#include <algorithm>
#include <array>

#include "cff/idealarith.hpp"

namespace cff {

inline void require_distinguished(const OrderData& od) {
  if (!od.distinguished_ok)
    throw ApplicabilityError(
        "reduction needs a wildly ramified infinite place with 3 not dividing deg F I^2");
}

// A basis row b = (b1, b2, b3) in coordinates 1, rho, omega together with
// its column weights 3 deg b1, 3 deg b2 + deg F I^2, 3 deg b3 + deg F^2 I.
struct WeightedRow {
  std::array<Poly, 3> b;
  std::array<int, 3> w{};
  int a = 0;     // argmax position
  int wmax = 0;  // deg N(b)
  int index = 0;

  void reweigh(const OrderData& od) {
    const int off[3] = {0, od.FI2.deg(), od.F2I.deg()};
    for (int k = 0; k < 3; ++k) w[k] = b[k].is_zero() ? kNegInf : 3 * b[k].deg() + off[k];
    a = int(std::max_element(w.begin(), w.end()) - w.begin());
    wmax = w[a];
  }
  Element element() const { return {b[0], b[1], b[2]}; }
};

namespace detail {

// dst -= c src with c the quotient of the dominating entries at column k.
inline void cancel(WeightedRow& dst, const WeightedRow& src, int k, const OrderData& od) {
  Poly c = dst.b[k] / src.b[k];
  for (int j = 0; j < 3; ++j) dst.b[j] = dst.b[j] - c * src.b[j];
  dst.reweigh(od);
}

inline void order_rows(std::array<WeightedRow, 3>& r) {
  std::stable_sort(r.begin(), r.end(), [](const WeightedRow& x, const WeightedRow& y) {
    if (x.wmax != y.wmax) return x.wmax < y.wmax;
    return x.index < y.index;
  });
}

}  // namespace detail

// A nonzero element of J whose norm has least degree, scaled so that its
// dominating coordinate is monic.
inline Element min_element(const Ideal& J, const OrderData& od) {
  require_distinguished(od);
  detail::require_primitive(J, "minimal element search needs a primitive ideal");
  auto rows = J.rows();
  std::array<WeightedRow, 3> r;
  for (int k = 0; k < 3; ++k) {
    r[k].b = {rows[k].a, rows[k].b, rows[k].c};
    r[k].index = k;
    r[k].reweigh(od);
  }
  detail::order_rows(r);
  while (r[0].a == r[1].a || r[1].a == r[2].a || r[0].a == r[2].a) {
    if (r[0].a == r[1].a) detail::cancel(r[1], r[0], r[0].a, od);
    else if (r[0].a == r[2].a) detail::cancel(r[2], r[0], r[0].a, od);
    else detail::cancel(r[2], r[1], r[1].a, od);
    detail::order_rows(r);
  }
  Element e = r[0].element();
  return e.scale(r[0].b[r[0].a].lc().inv());
}

// Content and canonical basis of <alpha>, from the rows alpha, alpha rho,
// alpha omega.
inline Ideal can_basis(const Element& alpha, const OrderData& od) {
  if (alpha.is_zero()) throw DomainError("canonical basis of the zero ideal");
  const Poly &a = alpha.a, &b = alpha.b, &c = alpha.c;
  std::array<std::array<Poly, 3>, 3> m = {{
      {a, b, c},
      {b * od.A() - c * od.FI, a, b * od.I},
      {-(b * od.FI), -(c * od.F), a - c * od.E},
  }};
  // Lower triangular by unimodular 2x2 steps: column 2 into row 2, then
  // column 1 into row 1.
  auto combine = [&](int keep, int kill, int col) {
    if (m[kill][col].is_zero()) return;
    if (m[keep][col].is_zero()) {
      std::swap(m[keep], m[kill]);
      return;
    }
    auto g = xgcd(m[keep][col], m[kill][col]);
    Poly p = exact_div(m[keep][col], g.d), q = exact_div(m[kill][col], g.d);
    std::array<Poly, 3> top, bot;
    for (int j = 0; j < 3; ++j) {
      top[j] = g.s * m[keep][j] + g.t * m[kill][j];
      bot[j] = p * m[kill][j] - q * m[keep][j];
    }
    m[keep] = top;
    m[kill] = bot;
  };
  combine(2, 0, 2);
  combine(2, 1, 2);
  combine(1, 0, 1);
  for (int k = 0; k < 3; ++k) {
    if (m[k][k].is_zero()) throw InvariantError("principal ideal basis is singular");
    Fq li = m[k][k].lc().inv();
    for (auto& x : m[k]) x = x.scale(li);
  }
  // Rows (c3, 0, 0), (c2, b2, 0), (c1, b1, a1).
  Poly c3 = m[0][0], c2 = m[1][0] % c3, b2 = m[1][1];
  Poly d = gcd(m[2][2], b2);
  Poly s = exact_div(c3, d), sp = exact_div(b2, d), spp = exact_div(m[2][2], d);
  Poly h21 = exact_div(c2, d);
  Poly u = exact_div(h21, sp);
  Poly b1 = exact_div(m[2][1], d), c1 = exact_div(m[2][0], d);
  // Clear b1 modulo s' so that s'' divides the rho entry of the third row.
  if (!spp.is_one()) {
    auto x = xgcd(sp, spp);
    Poly k = -(exact_div(b1, x.d) * x.s);
    b1 = b1 + k * sp;
    c1 = c1 + k * h21;
  }
  Poly w = exact_div(b1, spp), v = exact_div(c1, spp);
  return make_ideal(s, sp, spp, u, v, w, d);
}

inline bool is_reduced(const Ideal& J, const OrderData& od) {
  detail::require_primitive(J, "reducedness is defined for primitive ideals");
  return ideal_norm(J).deg() <= od.genus;
}

// Intermediate values of one composition and reduction.
struct CompRedTrace {
  Product product;   // I1 I2 = <D> I3
  Ideal inverse;     // <s> I3^{-1}
  Element alpha;     // minimal element of the inverse
  Ideal principal;   // <alpha> with content
  Ideal result;
};

inline CompRedTrace comp_red_trace(const Ideal& I1, const Ideal& I2, const OrderData& od) {
  require_distinguished(od);
  CompRedTrace t;
  t.product = ideal_mul(I1, I2, od);
  t.inverse = ideal_invert(t.product.J, od);
  t.alpha = min_element(t.inverse, od);
  t.principal = can_basis(t.alpha, od);
  Product q = ideal_divide_nonprimitive(t.principal.d, t.principal.primitive(), t.inverse, od);
  if (!q.D.is_one()) throw InvariantError("reduction produced a non-primitive ideal");
  if (ideal_norm(q.J).deg() > od.genus) throw InvariantError("reduction produced an ideal that is not reduced");
  t.result = q.J;
  return t;
}

// The distinguished ideal in the class of I1 I2.
inline Ideal comp_red(const Ideal& I1, const Ideal& I2, const OrderData& od) {
  return comp_red_trace(I1, I2, od).result;
}

}  // namespace cff
