// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "cff/order.hpp"

namespace cff {

// d [s, s'(u + rho), s''(v + w rho + omega)], an F_q[x]-basis of an
// integral ideal. Canonical form: d, s, s', s'' monic, s' | s, s'' | s,
// deg u < deg(s/s'), deg w < deg s', deg v < deg(s/s'').
//
// The representative ranges make the basis unique: v is only determined
// modulo s/s'' because s''(v + s/s'') differs from s'' v by a multiple of
// s. With s'' = 1 these are the usual ranges deg v < deg s.
struct Ideal {
  Poly d, s, sp, spp, u, v, w;

  bool is_primitive() const { return d.is_one(); }
  bool is_unit() const { return d.is_one() && s.is_one(); }
  bool operator==(const Ideal& o) const {
    return d == o.d && s == o.s && sp == o.sp && spp == o.spp && u == o.u && v == o.v && w == o.w;
  }
  bool operator!=(const Ideal& o) const { return !(*this == o); }

  Ideal primitive() const {
    Ideal r = *this;
    r.d = d.one();
    return r;
  }

  // The three basis elements, content included.
  std::array<Element, 3> rows() const {
    Poly z = s.zero();
    return {Element{d * s, z, z}, Element{d * sp * u, d * sp, z},
            Element{d * spp * v, d * spp * w, d * spp}};
  }
};

// Reduce (u, v, w) to canonical ranges. Requires s' | s, s'' | s.
inline Ideal make_ideal(Poly s, Poly sp, Poly spp, Poly u, Poly v, Poly w, Poly d) {
  if (s.is_zero() || sp.is_zero() || spp.is_zero() || d.is_zero())
    throw InvariantError("ideal basis with a zero diagonal entry");
  s = s.monic();
  sp = sp.monic();
  spp = spp.monic();
  d = d.monic();
  Poly s_sp = s / sp;
  Poly s_spp = s / spp;
  if (!(s_sp * sp == s) || !(s_spp * spp == s)) throw InvariantError("ideal diagonal does not divide s");
  u = u % s_sp;
  auto [k, wr] = w.divmod(sp);
  v = (v - k * sp * u) % s_spp;
  return Ideal{d, s, sp, spp, u, v, wr};
}

inline Ideal make_ideal(const Poly& s, const Poly& sp, const Poly& spp, const Poly& u, const Poly& v,
                        const Poly& w) {
  return make_ideal(s, sp, spp, u, v, w, s.one());
}

inline Ideal unit_ideal(const OrderData& od) {
  Poly o = od.one(), z = od.zero();
  return Ideal{o, o, o, o, z, z, z};
}

// <a> O for a nonzero polynomial a.
inline Ideal principal_poly(const Poly& a) {
  Poly o = a.one(), z = a.zero();
  return Ideal{a.monic(), o, o, o, z, z, z};
}

inline Ideal with_content(Ideal J, const Poly& d) {
  J.d = (J.d * d).monic();
  return J;
}

inline Poly ideal_norm(const Ideal& J) { return (J.d * J.d * J.d * J.s * J.sp * J.spp).monic(); }

// Membership of an element in J by triangular back-substitution.
inline bool ideal_member(Element e, const Ideal& J) {
  auto r = J.rows();
  auto [q3, r3] = e.c.divmod(r[2].c);
  if (!r3.is_zero()) return false;
  e = e - r[2].scale(q3);
  auto [q2, r2] = e.b.divmod(r[1].b);
  if (!r2.is_zero()) return false;
  e = e - r[1].scale(q2);
  return (e.a % r[0].a).is_zero();
}

// I1 subset of I2. For primitive operands these are the six divisibility
// and congruence conditions on the canonical data; contents go through
// membership of the basis rows.
inline bool ideal_contains(const Ideal& I1, const Ideal& I2) {
  if (I1.is_primitive() && I2.is_primitive()) {
    if (!I2.s.divides(I1.s) || !I2.sp.divides(I1.sp) || !I2.spp.divides(I1.spp)) return false;
    if (!((I1.sp * I1.u - I1.sp * I2.u) % I2.s).is_zero()) return false;
    if (!((I1.spp * I1.w - I1.spp * I2.w) % I2.sp).is_zero()) return false;
    Poly rhs = I1.spp * (I2.v + I2.u * (I1.w - I2.w));
    return ((I1.spp * I1.v - rhs) % I2.s).is_zero();
  }
  for (const auto& e : I1.rows())
    if (!ideal_member(e, I2)) return false;
  return true;
}

// Whether the module spanned by the rows is closed under multiplication by
// rho and omega.
inline bool is_ideal(const Ideal& J, const OrderData& od) {
  for (const auto& r : J.rows())
    for (const auto& g : {elem_rho(od), elem_omega(od)})
      if (!ideal_member(element_mul(r, g, od), J)) return false;
  return true;
}

}  // namespace cff
