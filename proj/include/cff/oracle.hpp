// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

// Slow reference implementations. Nothing here calls the ideal arithmetic
// of idealarith.hpp; only field, polynomial and element arithmetic.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cff/ideal.hpp"
#include "cff/splitting.hpp"

namespace cff {

using GeneratorSet = std::vector<Element>;

namespace detail {

inline Poly& coord(Element& e, int k) { return k == 0 ? e.a : (k == 1 ? e.b : e.c); }

// Euclid on column k across rows; leaves at most one row with a nonzero
// entry there and returns its index (or -1).
inline int eliminate_column(std::vector<Element>& rows, int k) {
  for (;;) {
    int piv = -1;
    for (int r = 0; r < int(rows.size()); ++r) {
      const Poly& x = coord(rows[r], k);
      if (x.is_zero()) continue;
      if (piv < 0 || x.deg() < coord(rows[piv], k).deg()) piv = r;
    }
    if (piv < 0) return -1;
    bool other = false;
    for (int r = 0; r < int(rows.size()); ++r) {
      if (r == piv || coord(rows[r], k).is_zero()) continue;
      Poly q = coord(rows[r], k) / coord(rows[piv], k);
      rows[r] = rows[r] - rows[piv].scale(q);
      if (!coord(rows[r], k).is_zero()) other = true;
    }
    if (!other) return piv;
  }
}

}  // namespace detail

// Hermite normal form of the F_q[x]-module spanned by the rows, returned in
// content-and-canonical ideal shape.
inline Ideal module_triangularize(GeneratorSet rows) {
  if (rows.empty()) throw DomainError("empty generator set");
  Element piv[3];
  for (int k = 2; k >= 0; --k) {
    int p = detail::eliminate_column(rows, k);
    if (p < 0) throw DomainError("generators do not span a rank-3 module");
    Element e = rows[p];
    rows.erase(rows.begin() + p);
    piv[k] = e.scale(detail::coord(e, k).lc().inv());
  }
  Element r1 = piv[0], r2 = piv[1], r3 = piv[2];
  r2.a = r2.a % r1.a;
  r3 = r3 - r2.scale(r3.b / r2.b);
  r3.a = r3.a % r1.a;

  Poly d = gcd(gcd(r1.a, r2.a, r2.b), gcd(r3.a, r3.b, r3.c));
  Poly s = exact_div(r1.a, d), sp = exact_div(r2.b, d), spp = exact_div(r3.c, d);
  Poly h21 = exact_div(r2.a, d), h31 = exact_div(r3.a, d), h32 = exact_div(r3.b, d);
  Poly u = exact_div(h21, sp);
  // Add k * row2 so that s'' divides the rho entry of row 3.
  auto g = xgcd(sp, spp);
  auto [hq, hr] = h32.divmod(g.d);
  if (!hr.is_zero()) throw InvariantError("triangular basis with gcd(s', s'') not dividing the rho entry");
  Poly k = -(hq * g.s);
  Poly b3 = h32 + k * sp;
  Poly a3 = h31 + k * h21;
  Poly w = exact_div(b3, spp);
  Poly v = exact_div(a3, spp);
  return make_ideal(s, sp, spp, u, v, w, d);
}

inline Ideal oracle_ideal_mul(const Ideal& I1, const Ideal& I2, const OrderData& od) {
  GeneratorSet g;
  for (const auto& x : I1.rows())
    for (const auto& y : I2.rows()) g.push_back(element_mul(x, y, od));
  return module_triangularize(std::move(g));
}

inline Ideal oracle_power(const Ideal& J, int e, const OrderData& od) {
  Ideal r = unit_ideal(od);
  for (int k = 0; k < e; ++k) r = oracle_ideal_mul(r, J, od);
  return r;
}

// Membership of every basis row, by reduction against the HNF of I2.
inline bool oracle_contains(const Ideal& I1, const Ideal& I2) {
  GeneratorSet g;
  for (const auto& e : I2.rows()) g.push_back(e);
  Ideal h = module_triangularize(g);
  auto r = h.rows();
  for (Element e : I1.rows()) {
    for (int k = 2; k >= 0; --k) {
      auto [q, rem] = detail::coord(e, k).divmod(detail::coord(r[k], k));
      if (!rem.is_zero()) return false;
      e = e - r[k].scale(q);
    }
  }
  return true;
}

namespace detail {

// Every polynomial over F_q of degree <= bound, zero first.
inline std::vector<Poly> all_polys(const FieldCtx& K, int bound) {
  std::vector<Fq> el = K.elements();
  std::vector<Poly> out = {Poly(K.zero())};
  for (int k = 0; k <= bound; ++k) {
    std::vector<Poly> next;
    for (const auto& p : out)
      for (const auto& c : el) next.push_back(p + Poly::monomial(c, k));
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

// Minimum degree of element_norm over nonzero combinations of the basis
// rows with coefficient degrees <= bound. Only combinations whose first
// nonzero coefficient is monic are visited; scaling by a constant does not
// change the norm degree.
inline int oracle_min_norm(const Ideal& J, int bound, const OrderData& od,
                           std::uint64_t budget = 10'000'000) {
  const FieldCtx& K = *od.one().proto().ctx();
  double n = 1;
  for (int k = 0; k < 3 * (bound + 1) * K.m(); ++k) n *= 3;
  if (n > double(budget)) throw DomainError("minimum norm enumeration exceeds budget");
  std::vector<Poly> ps = detail::all_polys(K, bound);
  auto r = J.rows();
  // The multiplication matrix is linear in the element, so the matrices of
  // the scaled rows are summed instead of recomputed.
  using Mat = std::array<Element, 3>;
  auto add = [](const Mat& x, const Mat& y) { return Mat{x[0] + y[0], x[1] + y[1], x[2] + y[2]}; };
  std::vector<Mat> m[3];
  for (int k = 0; k < 3; ++k)
    for (const auto& c : ps) m[k].push_back(mult_matrix(r[k].scale(c), od));
  auto det = [](const Mat& t) {
    const Element &r0 = t[0], &r1 = t[1], &r2 = t[2];
    return r0.a * (r1.b * r2.c - r1.c * r2.b) - r0.b * (r1.a * r2.c - r1.c * r2.a) +
           r0.c * (r1.a * r2.b - r1.b * r2.a);
  };
  int best = kNegInf;
  bool found = false;
  for (std::size_t i0 = 0; i0 < ps.size(); ++i0) {
    bool z0 = ps[i0].is_zero();
    if (!z0 && !ps[i0].lc().is_one()) continue;
    for (std::size_t i1 = 0; i1 < ps.size(); ++i1) {
      bool z1 = ps[i1].is_zero();
      if (z0 && !z1 && !ps[i1].lc().is_one()) continue;
      Mat s01 = add(m[0][i0], m[1][i1]);
      for (std::size_t i2 = 0; i2 < ps.size(); ++i2) {
        if (z0 && z1 && (ps[i2].is_zero() || !ps[i2].lc().is_one())) continue;
        int dn = det(add(s01, m[2][i2])).deg();
        if (!found || dn < best) {
          best = dn;
          found = true;
        }
      }
    }
  }
  return best;
}

namespace detail {

inline SplittingType split_from_root_count(std::size_t n) {
  SplittingType s;
  if (n == 0) s.tag = Split::inert;
  else if (n == 1) s.tag = Split::partially_split;
  else if (n == 3) s.tag = Split::completely_split;
  else throw InvariantError("separable cubic with exactly two roots");
  return s;
}

}  // namespace detail

// Splitting of P by enumeration of F_q[x]/(P).
inline SplittingType oracle_split(const Poly& P, const OrderData& od) {
  if (!is_irreducible(P)) throw DomainError("place must be a monic irreducible polynomial");
  const FieldCtx& K = *P.proto().ctx();
  if (long(K.m()) * P.deg() > 10) throw DomainError("residue field too large for enumeration");
  int vd = valuation(od.Delta, P);
  SplittingType s;
  if (vd >= 2) {
    s.tag = Split::totally_ramified;
    return s;
  }
  if (vd == 1) {
    s.tag = Split::partially_ramified;
    return s;
  }
  // t -> t^3 - a t is GF(3)-linear on F_q[x]/(P). Every residue is visited
  // in digit-counter order, updating L(t) by one basis image per step.
  Poly a = od.A() % P, b = od.B() % P;
  int m = int(K.m()), d = P.deg(), n = m * d;
  auto pack = [&](const Poly& r, std::uint64_t& p1, std::uint64_t& p2) {
    p1 = p2 = 0;
    for (int k = 0; k < d; ++k) {
      Fq c = r.coeff(k);
      p1 |= c.plane1() << (k * m);
      p2 |= c.plane2() << (k * m);
    }
  };
  std::vector<std::uint64_t> img1(static_cast<std::size_t>(n)), img2(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<int> dig(std::size_t(m), 0);
    dig[std::size_t(i % m)] = 1;
    Poly e = Poly::monomial(K.from_digits(dig), i / m);
    pack((e * e * e - a * e) % P, img1[std::size_t(i)], img2[std::size_t(i)]);
  }
  std::uint64_t t1, t2;
  pack((-b) % P, t1, t2);
  std::vector<int> ctr(std::size_t(n), 0);
  std::uint64_t v1 = 0, v2 = 0;
  std::size_t roots = 0;
  for (;;) {
    if (v1 == t1 && v2 == t2) ++roots;
    int i = 0;
    while (i < n) {
      detail::add3(v1, v2, img1[std::size_t(i)], img2[std::size_t(i)], v1, v2);
      if (++ctr[std::size_t(i)] < 3) break;
      ctr[std::size_t(i++)] = 0;
    }
    if (i == n) break;
  }
  return detail::split_from_root_count(roots);
}

// Infinite place by direct enumeration of the leading-coefficient cubic.
inline SplittingType oracle_split_infinite(const Curve& c) {
  int da = c.A.deg(), db = c.B.deg();
  SplittingType s;
  if (2 * db > 3 * da) {
    if (db % 3 == 0) throw DomainError("curve is not in standard form");
    s.tag = Split::totally_ramified;
    return s;
  }
  if (da % 2 != 0) {
    s.tag = Split::partially_ramified;
    return s;
  }
  int n = da / 2;
  Fq a = c.A.coeff(2 * n), b = c.B.coeff(3 * n);
  std::size_t cnt = 0;
  for (const Fq& y : c.A.proto().ctx()->elements())
    if ((y * y * y - a * y + b).is_zero()) ++cnt;
  return detail::split_from_root_count(cnt);
}

}  // namespace cff
