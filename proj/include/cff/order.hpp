// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <vector>

#include "cff/curve.hpp"
#include "cff/splitting.hpp"

namespace cff {

// Integral basis {1, rho, omega} of the maximal order, with
// rho = y - i and omega = (y^2 + i y + i^2 - A) / I.
struct OrderData {
  std::shared_ptr<const FieldCtx> K;
  Curve curve;
  Criterion crit = Criterion::none;
  Poly i, I, E, F;
  Poly FI, FI2, F2I;  // F I, F I^2, F^2 I
  Poly Delta;         // A^3 / I^2
  std::vector<Poly> index_primes;
  int genus = 0;
  SplittingType infinite;
  bool distinguished_ok = false;

  const Poly& A() const { return curve.A; }
  const Poly& B() const { return curve.B; }
  Poly zero() const { return curve.A.zero(); }
  Poly one() const { return curve.A.one(); }
};

struct Element {
  Poly a, b, c;
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
  Element operator+(const Element& o) const { return {a + o.a, b + o.b, c + o.c}; }
  Element operator-(const Element& o) const { return {a - o.a, b - o.b, c - o.c}; }
  Element operator-() const { return {-a, -b, -c}; }
  Element scale(const Poly& t) const { return {a * t, b * t, c * t}; }
  Element scale(const Fq& t) const { return {a.scale(t), b.scale(t), c.scale(t)}; }
  bool operator==(const Element& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const Element& o) const { return !(*this == o); }
};

inline Element elem_one(const OrderData& od) { return {od.one(), od.zero(), od.zero()}; }
inline Element elem_rho(const OrderData& od) { return {od.zero(), od.one(), od.zero()}; }
inline Element elem_omega(const OrderData& od) { return {od.zero(), od.zero(), od.one()}; }

// rho^2 = I omega + A, omega^2 = -E omega - F rho, rho omega = -F I.
inline Element element_mul(const Element& u, const Element& v, const OrderData& od) {
  Poly bb = u.b * v.b, cc = u.c * v.c, bc = u.b * v.c + v.b * u.c;
  return {u.a * v.a + bb * od.A() - bc * od.FI,
          u.a * v.b + v.a * u.b - cc * od.F,
          u.a * v.c + v.a * u.c + bb * od.I - cc * od.E};
}

// Rows are the coordinates of u, u rho, u omega.
inline std::array<Element, 3> mult_matrix(const Element& u, const OrderData& od) {
  return {Element{u.a, u.b, u.c},
          Element{u.b * od.A() - u.c * od.FI, u.a, u.b * od.I},
          Element{-(u.b * od.FI), -(u.c * od.F), u.a - u.c * od.E}};
}

inline Poly element_norm(const Element& u, const OrderData& od) {
  auto m = mult_matrix(u, od);
  const Element &r0 = m[0], &r1 = m[1], &r2 = m[2];
  return r0.a * (r1.b * r2.c - r1.c * r2.b) - r0.b * (r1.a * r2.c - r1.c * r2.a) +
         r0.c * (r1.a * r2.b - r1.b * r2.a);
}

inline std::array<int, 3> norm_degree_parts_unchecked(const Element& u, const OrderData& od) {
  auto d3 = [](const Poly& p) { return p.is_zero() ? kNegInf : 3 * p.deg(); };
  return {d3(u.a), u.b.is_zero() ? kNegInf : d3(u.b) + od.FI2.deg(),
          u.c.is_zero() ? kNegInf : d3(u.c) + od.F2I.deg()};
}

inline std::array<int, 3> norm_degree_parts(const Element& u, const OrderData& od) {
  if (!od.distinguished_ok)
    throw ApplicabilityError("norm degree rule needs criterion (wild) and 3 not dividing deg F I^2");
  return norm_degree_parts_unchecked(u, od);
}

inline int genus_of(const Curve& c, Criterion k, const Poly& I) {
  int g2;
  if (k == Criterion::wild) {
    g2 = 2 * (c.B.deg() - I.deg() - 1);
  } else {
    int da = c.A.deg();
    g2 = 3 * da - 2 * I.deg() + (da % 2) - 4;
  }
  if (g2 % 2 != 0 || g2 < 0) throw InvariantError("genus formula gave a non-integral or negative value");
  return g2 / 2;
}

inline int genus(const OrderData& od) { return genus_of(od.curve, od.crit, od.I); }

inline OrderData compute_order_data(const Curve& c, std::shared_ptr<const FieldCtx> K = nullptr) {
  validate(c);
  Criterion k = criterion(c);
  if (k == Criterion::none) throw DomainError("curve is not in standard form (degree criteria)");
  if (remove_singular_factor(c)) throw DomainError("curve is not in standard form (removable singular factor)");
  OrderData od;
  od.K = std::move(K);
  od.curve = c;
  od.crit = k;
  Poly d = singular_support(c);
  std::vector<std::pair<Poly, Poly>> eqs;
  Poly I = c.A.one();
  if (d.deg() > 0) {
    for (const auto& [P, e] : factor(d)) {
      if (!P.divides(c.A)) continue;
      Poly i0 = cube_root_mod(-(c.B % P), P);
      Poly t = i0 * i0 * i0 - i0 * c.A + c.B;
      if (!(P * P).divides(t)) continue;
      od.index_primes.push_back(P);
      eqs.push_back({i0, P});
      I = I * P;
    }
  }
  od.I = I;
  od.i = crt(eqs, c.A.proto());
  od.E = exact_div(c.A, I);
  od.FI2 = od.i * od.i * od.i - od.i * c.A + c.B;
  od.F = exact_div(od.FI2, I * I);
  od.FI = od.F * I;
  od.F2I = od.F * od.FI;
  od.Delta = exact_div(c.A * c.A * c.A, I * I);
  od.genus = genus_of(c, k, I);
  od.infinite = split_infinite(c);
  od.distinguished_ok = k == Criterion::wild && od.FI2.deg() % 3 != 0;
  return od;
}

}  // namespace cff
