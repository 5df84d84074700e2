// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

// Ideal arithmetic on canonical triangular bases. Every operation peels the
// content, factors the support by prime type, works per type and recombines
// the pieces by CRT.

#pragma once

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "cff/places.hpp"

namespace cff {

struct Product {
  Poly D;   // content
  Ideal J;  // primitive part
};

// ---------------------------------------------------------------------------
// Coprime multiplication and type factoring

// I1 I2 for primitive ideals with gcd(s1, s2) = 1.
inline Ideal ideal_mul_coprime(const Ideal& I1, const Ideal& I2) {
  if (!I1.is_primitive() || !I2.is_primitive()) throw DomainError("coprime multiplication needs primitive ideals");
  if (!gcd(I1.s, I2.s).is_one()) throw DomainError("coprime multiplication of ideals with common support");
  if (I1.s.is_one()) return I2;
  if (I2.s.is_one()) return I1;
  const Fq& z = I1.s.proto();
  Poly u = crt<Fq>({{I1.u, exact_div(I1.s, I1.sp)}, {I2.u, exact_div(I2.s, I2.sp)}}, z);
  Poly w = crt<Fq>({{I1.w, I1.sp}, {I2.w, I2.sp}}, z);
  Poly v = crt<Fq>({{I1.v + I1.u * (w - I1.w), exact_div(I1.s, I1.spp)},
                    {I2.v + I2.u * (w - I2.w), exact_div(I2.s, I2.spp)}},
                   z);
  return make_ideal(I1.s * I2.s, I1.sp * I2.sp, I1.spp * I2.spp, u, v, w);
}

inline Ideal ideal_mul_coprime(const std::vector<Ideal>& parts, const OrderData& od) {
  Ideal r = unit_ideal(od);
  for (const auto& p : parts) r = ideal_mul_coprime(r, p);
  return r;
}

namespace detail {

// J + t O for t | s with gcd(t, s / t) = 1.
inline Ideal localize(const Ideal& J, const Poly& t) {
  return make_ideal(t, gcd(J.sp, t), gcd(J.spp, t), J.u, J.v, J.w);
}

inline int type_index(PrimeType t) { return static_cast<int>(t); }

// The primes dividing f grouped by type.
inline std::array<std::vector<Poly>, 4> primes_by_type(const Poly& f, const OrderData& od) {
  std::array<std::vector<Poly>, 4> out;
  if (f.deg() < 1) return out;
  for (const auto& [P, e] : factor(f)) out[type_index(prime_type(P, od))].push_back(P);
  return out;
}

inline Poly part_at(const Poly& f, const std::vector<Poly>& primes) {
  Poly r = f.one();
  if (f.is_zero()) throw DomainError("support of the zero polynomial");
  for (const auto& P : primes) r = r * power(P, valuation(f, P));
  return r;
}

inline Ideal coarsen(const Ideal& J, const Poly& s, const Poly& sp, const Poly& spp) {
  return make_ideal(s, sp, spp, J.u, J.v, J.w);
}

inline void require_primitive(const Ideal& J, const char* what) {
  if (!J.is_primitive()) throw DomainError(what);
}

}  // namespace detail

// Split a primitive ideal into its Type I, II, III and IV parts, indexed by
// PrimeType. The parts have pairwise coprime norms and multiply back to J.
inline std::array<Ideal, 4> type_factor(const Ideal& J, const OrderData& od) {
  detail::require_primitive(J, "type factoring needs a primitive ideal");
  std::array<Ideal, 4> out;
  auto by = detail::primes_by_type(J.s, od);
  for (int t = 0; t < 4; ++t) out[t] = detail::localize(J, detail::part_at(J.s, by[t]));
  return out;
}

// ---------------------------------------------------------------------------
// Types I and II

namespace detail {

inline Poly inv_I(const Poly& m, const OrderData& od) { return inv_mod(od.I % m, m); }

// <s> J^{-1} for J = [s, s'(u + rho), v + w rho + omega].
inline Ideal invert_12(const Ideal& J, const OrderData& od) {
  if (J.s.is_one()) return J;
  Poly s_sp = exact_div(J.s, J.sp);
  Poly U = (-(od.I * J.w)) % J.sp;
  Poly W = (-(J.u * inv_I(s_sp, od))) % s_sp;
  Poly V = (od.E - J.v - W * od.I * J.w) % J.s;
  return make_ideal(J.s, s_sp, J.s.one(), U, V, W);
}

// Lift U from a root of N(U + rho) = U^3 - A U - F I^2 modulo L to the root
// modulo T, L | T. The derivative is -A, a unit at Type I primes.
inline Poly lift_u(Poly U, Poly L, const Poly& T, const OrderData& od) {
  while (L.deg() < T.deg()) {
    Poly g = gcd(L, exact_div(T, L));
    if (g.is_one()) throw InvariantError("U is not determined modulo s/s'");
    Poly N = U * U * U - U * od.A() - od.FI2;
    Poly k = (exact_div(N, L) * inv_mod(od.A() % g, g)) % g;
    U = U + k * L;
    L = L * g;
  }
  return U % T;
}

// Exact quotient I2 I1^{-1} when I2 is contained in I1.
inline Ideal divide_12(const Ideal& I2, const Ideal& I1, const OrderData& od) {
  Poly a1 = exact_div(I1.s, I1.sp), a2 = exact_div(I2.s, I2.sp);
  Poly d = gcd(a2, a1, I1.u - I2.u);
  Poly S = exact_div(I2.s, I1.sp * d);
  Poly Sp = exact_div(I2.sp * d, I1.s);
  Poly m1 = exact_div(a1, d), m2 = exact_div(a2, d);
  Poly U = crt2((od.I * I2.w - I1.u) % m1, m1, I2.u % m2, m2);
  U = lift_u(U, lcm(m1, m2), exact_div(S, Sp), od);
  return make_ideal(S, Sp, S.one(), U, I2.v, I2.w);
}

// Product of the omega-row candidates; returns v + w rho + omega in the
// product, or throws when the omega coefficients do not generate 1.
inline Element omega_row(const Ideal& I1, const Ideal& I2, const Poly& S, const OrderData& od) {
  Poly z = od.zero();
  Element g1{I1.v, I1.w, od.one()}, g2{I2.v, I2.w, od.one()};
  Element r1{I1.sp * I1.u, I1.sp, z}, r2{I2.sp * I2.u, I2.sp, z};
  Element terms[6] = {g1.scale(I2.s),           g2.scale(I1.s),           element_mul(r1, r2, od),
                      element_mul(r1, g2, od), element_mul(r2, g1, od), element_mul(g1, g2, od)};
  auto red = [&](Element e) { return Element{e.a % S, e.b % S, e.c % S}; };
  Element acc{z, z, z};
  for (auto& t : terms) {
    t = red(t);
    if (t.c.is_zero()) continue;
    if (acc.c.is_zero()) {
      acc = t.scale(t.c.lc().inv());
    } else {
      auto x = xgcd(acc.c, t.c);
      acc = red(acc.scale(x.s) + t.scale(x.t));
    }
    if (acc.c.is_one()) return acc;
  }
  if (S.is_one()) return Element{z, z, od.one()};
  throw InvariantError("omega coefficients of the product do not generate 1; product is not primitive");
}

// I1 I2 for Type I ideals whose product is primitive.
inline Ideal mul_primitive_1(const Ideal& I1, const Ideal& I2, const OrderData& od) {
  if (gcd(I1.s, I2.s).is_one()) return ideal_mul_coprime(I1, I2);
  Poly a1 = exact_div(I1.s, I1.sp), a2 = exact_div(I2.s, I2.sp);
  Poly d = gcd(a1, a2);
  Poly d1 = gcd(d, I1.u - I2.u);
  Poly S = exact_div(I1.s * I2.s * d1, d);
  Poly Sp = exact_div(I1.sp * I2.sp * d, d1);
  Poly m1 = exact_div(a1 * d1, d), m2 = exact_div(a2 * d1, d);
  Poly u3 = crt2(I1.u % m1, m1, I2.u % m2, m2);
  // u3 is known modulo lcm(m1, m2) = S / (S' d1); one lift step fixes the
  // remaining factor d1.
  Poly U = lift_u(u3, lcm(m1, m2), exact_div(S, Sp), od);
  Element e = omega_row(I1, I2, S, od);
  return make_ideal(S, Sp, S.one(), U, e.a, e.b);
}

inline Product mul_12(const Ideal& I1, const Ideal& I2, PrimeType t, const OrderData& od);

// <d> I2 I1^{-1} for Type I or II operands; the product step uses the
// multiplication for type t.
inline Product nonprim_divide_12(const Poly& d, const Ideal& I2, const Ideal& I1, PrimeType t,
                                 const OrderData& od) {
  Poly D1 = gcd(I1.sp, d);
  Poly D2 = gcd(exact_div(I1.s, I1.sp), exact_div(d, D1));
  Poly D3 = exact_div(d, D1 * D2);
  Poly o = d.one();
  Ideal Id = divide_12(I2, coarsen(I1, exact_div(I1.s, D1 * D2), exact_div(I1.sp, D1), o), od);
  Ideal Im = invert_12(coarsen(I1, D1 * D2, D1, o), od);
  Product p = mul_12(Id, Im, t, od);
  return {(p.D * D3).monic(), p.J};
}

// General Type I multiplication.
inline Product mul_1(const Ideal& I1, const Ideal& I2, const OrderData& od) {
  Poly o = od.one();
  if (gcd(I1.s, I2.s).is_one()) return {o, ideal_mul_coprime(I1, I2)};
  Poly a1 = exact_div(I1.s, I1.sp), a2 = exact_div(I2.s, I2.sp);
  Poly D1 = gcd(I2.sp, a1, I1.u + od.I * I2.w);
  Poly D2 = gcd(I1.sp, a2, I2.u + od.I * I1.w);
  Poly g1 = exact_div(I1.sp, D2), g2 = exact_div(I2.sp, D1);
  Poly D3 = exact_div(gcd(g1, g2), gcd(g1, g2, I1.w - I2.w));
  Ideal J1 = coarsen(I1, exact_div(I1.s, D1 * D2 * D3), exact_div(I1.sp, D2 * D3), o);
  Ideal J2 = coarsen(I2, exact_div(I2.s, D1 * D2 * D3), exact_div(I2.sp, D1 * D3), o);
  Ideal I3 = mul_primitive_1(J1, J2, od);
  if (D3.deg() > 0) {
    Ideal b1 = invert_12(coarsen(I1, D3, D3, o), od);
    Ideal b2 = invert_12(coarsen(I2, D3, D3, o), od);
    Product J = nonprim_divide_12(D3, unit_ideal(od), mul_primitive_1(b1, b2, od), PrimeType::I, od);
    if (!J.D.is_one()) throw InvariantError("ideal of the square-free pair part is not primitive");
    I3 = mul_primitive_1(I3, J.J, od);
  }
  return {(D1 * D2 * D3).monic(), I3};
}

// Type II: s is squarefree, s/s' holds the primes p and s' the primes p^2.
inline Ideal build_2(const Poly& singles, const Poly& doubles, const OrderData& od) {
  Poly s = singles * doubles;
  if (s.is_one()) return unit_ideal(od);
  std::vector<Poly> primes;
  for (const auto& [P, e] : factor(s)) primes.push_back(P);
  Poly f = cube_root_mod_squarefree(od.FI2 % s, primes);
  Poly Ii = inv_I(s, od);
  Poly U = f % singles;
  Poly W = (-(Ii * f)) % doubles;
  Poly V = crt<Fq>({{Ii * f * f, doubles}, {W * f - Ii * f * f, singles}}, s.proto());
  return make_ideal(s, doubles, s.one(), U, V, W);
}

// Product of Type II ideals whose product is primitive.
inline Ideal mul_primitive_2(const Ideal& I1, const Ideal& I2, const OrderData& od) {
  Poly a1 = exact_div(I1.s, I1.sp), a2 = exact_div(I2.s, I2.sp);
  Poly d = gcd(a1, a2);
  if (!gcd(I1.sp, I2.s).is_one() || !gcd(I2.sp, I1.s).is_one())
    throw InvariantError("product of Type II ideals is not primitive");
  Poly S = exact_div(I1.s * I2.s, d), Sp = d * I1.sp * I2.sp;
  return build_2(exact_div(S, Sp), Sp, od);
}

inline Product mul_2(const Ideal& I1, const Ideal& I2, const OrderData& od) {
  Poly a1 = exact_div(I1.s, I1.sp), a2 = exact_div(I2.s, I2.sp);
  Poly D1 = gcd(a1, I2.sp), D2 = gcd(a2, I1.sp), D3 = gcd(I1.sp, I2.sp);
  Poly o = od.one();
  Ideal J1 = coarsen(I1, exact_div(I1.s, D1 * D2 * D3), exact_div(I1.sp, D2 * D3), o);
  Ideal J2 = coarsen(I2, exact_div(I2.s, D1 * D2 * D3), exact_div(I2.sp, D1 * D3), o);
  Ideal J = build_2(D3, o, od);
  return {(D1 * D2 * D3).monic(), mul_primitive_2(mul_primitive_2(J1, J2, od), J, od)};
}

inline Product mul_12(const Ideal& I1, const Ideal& I2, PrimeType t, const OrderData& od) {
  return t == PrimeType::I ? mul_1(I1, I2, od) : mul_2(I1, I2, od);
}

// (pq)^i split against p^i: I2 = [s, s rho, v2 + w2 rho + omega],
// I1 = [s, u1 + rho, v1 + omega].
inline Ideal split_12(const Ideal& I2, const Ideal& I1, const OrderData& od) {
  const Poly& s = I2.s;
  Poly U = (od.I * I2.w - I1.u) % s;
  Poly V = (I2.v - od.I * I2.w * I2.w + I1.u * I2.w) % s;
  return make_ideal(s, s.one(), s.one(), U, V, s.zero());
}

// ---------------------------------------------------------------------------
// Type III: [s, rho, s'' omega]; s/s'' holds p and s'' holds p^2.

inline Ideal build_3(const Poly& s, const Poly& spp) {
  Poly z = s.zero();
  return make_ideal(s, s.one(), spp, z, z, z);
}

inline Ideal invert_3(const Ideal& J) { return build_3(J.s, exact_div(J.s, J.spp)); }

inline Ideal divide_3(const Ideal& I2, const Ideal& I1) {
  Poly d = gcd(exact_div(I1.s, I1.spp), exact_div(I2.s, I2.spp));
  return build_3(exact_div(I2.s, I1.spp * d), exact_div(I2.spp * d, I1.s));
}

inline Ideal mul_primitive_3(const Ideal& I1, const Ideal& I2) {
  if (!gcd(I1.spp, I2.s).is_one() || !gcd(I2.spp, I1.s).is_one())
    throw InvariantError("product of Type III ideals is not primitive");
  Poly d = gcd(exact_div(I1.s, I1.spp), exact_div(I2.s, I2.spp));
  return build_3(exact_div(I1.s * I2.s, d), I1.spp * I2.spp * d);
}

inline Product mul_3(const Ideal& I1, const Ideal& I2) {
  Poly a1 = exact_div(I1.s, I1.spp), a2 = exact_div(I2.s, I2.spp);
  Poly D1 = gcd(a1, I2.spp), D2 = gcd(a2, I1.spp), D3 = gcd(I1.spp, I2.spp);
  Ideal J1 = build_3(exact_div(I1.s, D1 * D2 * D3), exact_div(I1.spp, D2 * D3));
  Ideal J2 = build_3(exact_div(I2.s, D1 * D2 * D3), exact_div(I2.spp, D1 * D3));
  Ideal J = build_3(D3, D3.one());
  return {(D1 * D2 * D3).monic(), mul_primitive_3(mul_primitive_3(J1, J2), J)};
}

inline Product nonprim_divide_3(const Poly& d, const Ideal& I2, const Ideal& I1) {
  Poly D1 = gcd(I1.spp, d);
  Poly D2 = gcd(exact_div(I1.s, I1.spp), exact_div(d, D1));
  Poly D3 = exact_div(d, D1 * D2);
  Ideal Id = divide_3(I2, build_3(exact_div(I1.s, D1 * D2), exact_div(I1.spp, D1)));
  Ideal Im = invert_3(build_3(D1 * D2, D1));
  Product p = mul_3(Id, Im);
  return {(p.D * D3).monic(), p.J};
}

// ---------------------------------------------------------------------------
// Type IV, prime by prime: P O = p q^2 and a primitive ideal supported at P
// is p^a q^b with a = 0 or b <= 1.

struct Exps4 {
  int a = 0, b = 0;
};

inline Exps4 read_4(const Ideal& J, const Poly& P) {
  int es = J.s.is_one() ? 0 : valuation(J.s, P);
  int i = J.sp.is_one() ? 0 : valuation(J.sp, P);
  int j = J.spp.is_one() ? 0 : valuation(J.spp, P);
  if (es == 0) return {};
  if (j >= 1) return {es, 1};
  if (i >= 1) return {0, 2 * i + (es - i)};
  if (!(J.v % P).is_zero()) return {es, 0};
  if (es != 1) throw InvariantError("Type IV ideal outside the expected shapes");
  return {0, 1};
}

// Content and primitive part of (P^c) p^a q^b.
inline Product build_4(const Poly& P, int c, int a, int b, const OrderData& od) {
  if (a < 0 || b < 0 || c < 0) throw DomainError("quotient is not integral");
  Poly z = od.zero();
  Ideal J = local_ideal(P, {{{PrimeKind::tame_single, z}, a}, {{PrimeKind::tame_double, z}, b}}, od);
  return {(J.d * power(P, c)).monic(), J.primitive()};
}

// Combine per-prime Type IV results.
template <class F>
inline Product per_prime_4(const std::vector<Poly>& primes, F&& fn, const OrderData& od) {
  Poly D = od.one();
  std::vector<Ideal> parts;
  for (const auto& P : primes) {
    Product p = fn(P);
    D = D * p.D;
    parts.push_back(p.J);
  }
  return {D.monic(), ideal_mul_coprime(parts, od)};
}

inline std::vector<Poly> union_primes(std::vector<Poly> a, const std::vector<Poly>& b) {
  for (const auto& P : b)
    if (std::find(a.begin(), a.end(), P) == a.end()) a.push_back(P);
  return a;
}

// ---------------------------------------------------------------------------
// Dispatch over the four parts.

inline std::vector<Poly> primes_of(const Ideal& J) {
  std::vector<Poly> out;
  if (J.s.deg() < 1) return out;
  for (const auto& [P, e] : factor(J.s)) out.push_back(P);
  return out;
}

}  // namespace detail

// <s> J^{-1}.
inline Ideal ideal_invert(const Ideal& J, const OrderData& od) {
  detail::require_primitive(J, "inversion needs a primitive ideal");
  auto parts = type_factor(J, od);
  std::vector<Ideal> out;
  out.push_back(detail::invert_12(parts[0], od));
  out.push_back(detail::invert_12(parts[1], od));
  out.push_back(detail::invert_3(parts[2]));
  const Ideal& J4 = parts[3];
  Product p4 = detail::per_prime_4(
      detail::primes_of(J4),
      [&](const Poly& P) {
        auto e = detail::read_4(J4, P);
        int es = valuation(J4.s, P);
        return detail::build_4(P, 0, es - e.a, 2 * es - e.b, od);
      },
      od);
  if (!p4.D.is_one()) throw InvariantError("Type IV inverse has content");
  out.push_back(p4.J);
  return ideal_mul_coprime(out, od);
}

// I2 I1^{-1} for primitive I2 contained in primitive I1.
inline Ideal ideal_divide(const Ideal& I2, const Ideal& I1, const OrderData& od) {
  detail::require_primitive(I1, "division needs primitive ideals");
  detail::require_primitive(I2, "division needs primitive ideals");
  if (!ideal_contains(I2, I1)) throw DomainError("dividend is not contained in the divisor");
  auto p2 = type_factor(I2, od), p1 = type_factor(I1, od);
  std::vector<Ideal> out;
  out.push_back(detail::divide_12(p2[0], p1[0], od));
  out.push_back(detail::divide_12(p2[1], p1[1], od));
  out.push_back(detail::divide_3(p2[2], p1[2]));
  auto primes = detail::primes_of(p2[3]);
  Product p4 = detail::per_prime_4(
      primes,
      [&](const Poly& P) {
        auto e2 = detail::read_4(p2[3], P), e1 = detail::read_4(p1[3], P);
        return detail::build_4(P, 0, e2.a - e1.a, e2.b - e1.b, od);
      },
      od);
  if (!p4.D.is_one()) throw InvariantError("Type IV quotient has content");
  out.push_back(p4.J);
  return ideal_mul_coprime(out, od);
}

// Content and primitive part of I1 I2 for primitive I1, I2.
inline Product ideal_mul(const Ideal& I1, const Ideal& I2, const OrderData& od) {
  detail::require_primitive(I1, "multiplication needs primitive ideals");
  detail::require_primitive(I2, "multiplication needs primitive ideals");
  if (gcd(I1.s, I2.s).is_one()) return {od.one(), ideal_mul_coprime(I1, I2)};
  auto a = type_factor(I1, od), b = type_factor(I2, od);
  Product r1 = detail::mul_1(a[0], b[0], od);
  Product r2 = detail::mul_2(a[1], b[1], od);
  Product r3 = detail::mul_3(a[2], b[2]);
  Product r4 = detail::per_prime_4(
      detail::union_primes(detail::primes_of(a[3]), detail::primes_of(b[3])),
      [&](const Poly& P) {
        auto x = detail::read_4(a[3], P), y = detail::read_4(b[3], P);
        return detail::build_4(P, 0, x.a + y.a, x.b + y.b, od);
      },
      od);
  Poly D = (r1.D * r2.D * r3.D * r4.D).monic();
  return {D, ideal_mul_coprime({r1.J, r2.J, r3.J, r4.J}, od)};
}

// I1 I2 when the product is known to be primitive.
inline Ideal ideal_mul_primitive(const Ideal& I1, const Ideal& I2, const OrderData& od) {
  detail::require_primitive(I1, "multiplication needs primitive ideals");
  detail::require_primitive(I2, "multiplication needs primitive ideals");
  if (gcd(I1.s, I2.s).is_one()) return ideal_mul_coprime(I1, I2);
  auto a = type_factor(I1, od), b = type_factor(I2, od);
  Ideal r1 = detail::mul_primitive_1(a[0], b[0], od);
  Ideal r2 = detail::mul_primitive_2(a[1], b[1], od);
  Ideal r3 = detail::mul_primitive_3(a[2], b[2]);
  Product r4 = detail::per_prime_4(
      detail::union_primes(detail::primes_of(a[3]), detail::primes_of(b[3])),
      [&](const Poly& P) {
        auto x = detail::read_4(a[3], P), y = detail::read_4(b[3], P);
        return detail::build_4(P, 0, x.a + y.a, x.b + y.b, od);
      },
      od);
  if (!r4.D.is_one()) throw InvariantError("product of Type IV ideals is not primitive");
  return ideal_mul_coprime({r1, r2, r3, r4.J}, od);
}

// <d> I2 I1^{-1} as content and primitive part; requires <d> I2 in I1.
inline Product ideal_divide_nonprimitive(const Poly& d, const Ideal& I2, const Ideal& I1, const OrderData& od) {
  detail::require_primitive(I1, "division needs a primitive divisor");
  detail::require_primitive(I2, "pass the content of the dividend separately");
  if (d.is_zero()) throw DomainError("zero content");
  if (!ideal_contains(with_content(I2, d), I1)) throw DomainError("dividend is not contained in the divisor");
  Poly dm = d.monic();
  auto p2 = type_factor(I2, od), p1 = type_factor(I1, od);
  auto dt = detail::primes_by_type(dm, od);
  Poly d_t[4];
  for (int t = 0; t < 4; ++t) d_t[t] = detail::part_at(dm, dt[t]);
  Product r1 = detail::nonprim_divide_12(d_t[0], p2[0], p1[0], PrimeType::I, od);
  Product r2 = detail::nonprim_divide_12(d_t[1], p2[1], p1[1], PrimeType::II, od);
  Product r3 = detail::nonprim_divide_3(d_t[2], p2[2], p1[2]);
  auto primes = detail::union_primes(detail::union_primes(detail::primes_of(p2[3]), detail::primes_of(p1[3])),
                                     dt[3]);
  Product r4 = detail::per_prime_4(
      primes,
      [&](const Poly& P) {
        auto x = detail::read_4(p2[3], P), y = detail::read_4(p1[3], P);
        int c = d_t[3].is_one() ? 0 : valuation(d_t[3], P);
        return detail::build_4(P, 0, c + x.a - y.a, 2 * c + x.b - y.b, od);
      },
      od);
  Poly D = (r1.D * r2.D * r3.D * r4.D).monic();
  return {D, ideal_mul_coprime({r1.J, r2.J, r3.J, r4.J}, od)};
}

// I2 I1^{-1} for the splitting shapes: Types I and II take
// I2 = [s, s rho, v2 + w2 rho + omega] over I1 = [s, u1 + rho, v1 + omega],
// Type III takes [s, rho, s omega] over [s, rho, omega], Type IV takes
// [s's'', s' rho, s''(v2 + w2 rho + omega)] over [s's'', rho, v1 + omega].
inline Ideal ideal_split_conjugate(const Ideal& I2, const Ideal& I1, const OrderData& od) {
  detail::require_primitive(I1, "splitting needs primitive ideals");
  detail::require_primitive(I2, "splitting needs primitive ideals");
  if (I1.s != I2.s) throw DomainError("splitting needs ideals with the same s");
  if (!ideal_contains(I2, I1)) throw DomainError("dividend is not contained in the divisor");
  auto p2 = type_factor(I2, od), p1 = type_factor(I1, od);
  std::vector<Ideal> out;
  for (int t = 0; t < 2; ++t) {
    if (p2[t].sp != p2[t].s || !p1[t].sp.is_one()) throw DomainError("operands do not have the splitting shape");
    out.push_back(detail::split_12(p2[t], p1[t], od));
  }
  if (p2[2].spp != p2[2].s || !p1[2].spp.is_one()) throw DomainError("operands do not have the splitting shape");
  out.push_back(detail::build_3(p2[2].s, p2[2].s.one()));
  // Type IV: V = E modulo the ramified primes of I1, 0 elsewhere.
  const Ideal& J2 = p2[3];
  const Ideal& J1 = p1[3];
  if (J2.s != J2.sp * J2.spp || !J1.sp.is_one() || !J1.spp.is_one())
    throw DomainError("operands do not have the splitting shape");
  Poly dq = gcd(J2.spp, J1.v);
  Poly rest = exact_div(J2.s, dq);
  Poly V = crt<Fq>({{od.E % dq, dq}, {od.zero(), rest}}, od.zero().proto());
  out.push_back(make_ideal(J2.s, J2.s.one(), J2.s.one(), od.zero(), V, od.zero()));
  return ideal_mul_coprime(out, od);
}

}  // namespace cff
