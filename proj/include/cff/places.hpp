// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <vector>

#include "cff/ideal.hpp"
#include "cff/splitting.hpp"

namespace cff {

enum class PrimeType { I, II, III, IV };

inline const char* prime_type_name(PrimeType t) {
  switch (t) {
    case PrimeType::I: return "I";
    case PrimeType::II: return "II";
    case PrimeType::III: return "III";
    case PrimeType::IV: return "IV";
  }
  return "?";
}

// Splitting of a finite place. Roots, M and W describe the reduction of
// T^3 - A T + B modulo P, the minimal polynomial of y.
inline SplittingType split_finite(const Poly& P, const OrderData& od) {
  if (!is_irreducible(P)) throw DomainError("place must be a monic irreducible polynomial");
  SplittingType s;
  int vd = valuation(od.Delta, P);
  if (vd > 2) {
    s.tag = Split::totally_ramified;
    return s;
  }
  if (vd == 1) {
    s.tag = Split::partially_ramified;
    return s;
  }
  if (vd == 2) throw InvariantError("discriminant valuation 2 at a finite place");
  auto r = cubic_residue_factor(od.A() % P, od.B() % P, P);
  s.tag = split_from_gcd_degree(r.gcd_degree);
  s.roots = r.roots;
  s.M = r.M;
  s.W = r.W;
  return s;
}

inline PrimeType prime_type(const Poly& P, const OrderData& od) {
  if (!P.divides(od.A())) return PrimeType::I;
  if (!P.divides(od.I)) return PrimeType::II;
  return (P * P).divides(od.A()) ? PrimeType::III : PrimeType::IV;
}

// A prime above P, addressed by its residue data.
enum class PrimeKind {
  ramified,     // the unique prime of a totally ramified place
  tame_single,  // e = 1 prime of a partially ramified place
  tame_double,  // e = 2 prime of a partially ramified place
  degree_one,   // unramified, inertia 1; alpha is the root of rho's cubic
  degree_two,   // unramified, inertia 2
  inert,        // unramified, inertia 3, equal to P O
};

struct LocalPrime {
  PrimeKind kind;
  Poly alpha;  // degree_one only
  bool operator==(const LocalPrime& o) const {
    return kind == o.kind && (kind != PrimeKind::degree_one || alpha == o.alpha);
  }
};

struct LocalFactor {
  LocalPrime prime;
  int e = 0;
};

// The primes above P together with their ramification indices.
inline std::vector<LocalFactor> primes_above(const Poly& P, const OrderData& od) {
  Poly z = od.zero();
  switch (prime_type(P, od)) {
    case PrimeType::II:
    case PrimeType::III: return {{{PrimeKind::ramified, z}, 3}};
    case PrimeType::IV: return {{{PrimeKind::tame_single, z}, 1}, {{PrimeKind::tame_double, z}, 2}};
    case PrimeType::I: break;
  }
  auto r = cubic_residue_factor(od.A() % P, od.FI2 % P, P);
  std::vector<LocalFactor> out;
  for (const auto& a : r.roots) out.push_back({{PrimeKind::degree_one, a}, 1});
  if (r.gcd_degree == 0) out.push_back({{PrimeKind::inert, z}, 1});
  if (r.gcd_degree == 1) out.push_back({{PrimeKind::degree_two, z}, 1});
  return out;
}

namespace detail {

inline Poly inv_or_throw(const Poly& a, const Poly& m, const char* what) {
  if (m.deg() <= 0) return m.zero();
  auto g = xgcd(a % m, m);
  if (!g.d.is_one()) throw InvariantError(what);
  return g.s % m;
}

// f with f^3 = F I^2 mod P, for a totally ramified P not dividing I.
inline Poly wild_f(const Poly& P, const OrderData& od) { return cube_root_mod(od.FI2 % P, P); }

inline Poly Iinv(const Poly& P, const OrderData& od) {
  return inv_or_throw(od.I, P, "I is not invertible modulo P");
}

// Roots X_k of rho's cubic and Z_k of omega's cubic modulo P^k for a
// degree-one prime [P, -X_1 + rho, -Z_1 + omega].
struct Lift {
  std::vector<Poly> X, Z;  // index k holds the value modulo P^k; index 0 unused
};

inline Lift lift_degree_one(const Poly& P, const Poly& X1, const Poly& Z1, int n, const OrderData& od) {
  Lift L;
  L.X = {od.zero(), X1 % P};
  L.Z = {od.zero(), Z1 % P};
  Poly Pk = P;
  if (!(Z1 % P).is_zero()) {
    // Z_{k+1} = Z_k + c P^k, c = C_k (E Z_k)^{-1}, C_k = m(Z_k) / P^k with
    // m(Z) = Z^3 + E Z^2 - F^2 I the minimal polynomial of omega.
    for (int k = 1; k < n; ++k) {
      const Poly& Z = L.Z[k];
      Poly C = exact_div(Z * Z * Z + od.E * Z * Z - od.F2I, Pk);
      Poly c = (C * inv_or_throw(od.E * Z, P, "E Z_k is not invertible modulo P")) % P;
      Poly Pk1 = Pk * P;
      L.Z.push_back((Z + c * Pk) % Pk1);
      L.X.push_back((-(od.FI) * inv_or_throw(L.Z.back(), Pk1, "Z_k is not invertible")) % Pk1);
      Pk = Pk1;
    }
  } else {
    // Z_1 = 0 mod P: lift X instead. g(X) = X^3 - A X + F I^2, g' = -A.
    Poly Ii = Iinv(P, od);
    Poly Ai = inv_or_throw(od.A(), P, "A is not invertible modulo P");
    for (int k = 1; k < n; ++k) {
      const Poly& X = L.X[k];
      Poly C = exact_div(X * X * X - od.A() * X + od.FI2, Pk);
      Poly Pk1 = Pk * P;
      L.X.push_back((X + ((C * Ai) % P) * Pk) % Pk1);
      Poly Ik = inv_or_throw(od.I, Pk1, "I is not invertible modulo P");
      L.Z.push_back((Ik * (L.X.back() * L.X.back() - od.A())) % Pk1);
      Pk = Pk1;
    }
    (void)Ii;
  }
  return L;
}

// Initial (X_1, Z_1) of a degree-one prime.
inline std::pair<Poly, Poly> degree_one_start(const Poly& P, const LocalPrime& p, const OrderData& od) {
  if (p.kind == PrimeKind::tame_single) return {od.zero(), (-od.E) % P};
  Poly a = p.alpha % P;
  return {a, (Iinv(P, od) * (a * a - od.A())) % P};
}

// (N_1, M_1) of an ideal r = [P, P rho, N_1 - M_1 rho + omega].
inline std::pair<Poly, Poly> pair_start(const Poly& P, const LocalPrime& a, const LocalPrime* b,
                                        const OrderData& od) {
  if (a.kind == PrimeKind::tame_double) {
    Poly Ei = inv_or_throw(od.E, P, "E is not invertible modulo P");
    return {od.zero(), (-(Ei * od.F)) % P};
  }
  Poly Ii = Iinv(P, od);
  if (a.kind == PrimeKind::degree_two) {
    auto r = cubic_residue_factor(od.A() % P, od.FI2 % P, P);
    if (r.gcd_degree != 1) throw DomainError("no inertia-two prime above P");
    return {(Ii * (*r.W + od.A())) % P, (Ii * *r.M) % P};
  }
  // Product of two distinct degree-one primes.
  const Poly &a1 = a.alpha, &a2 = b->alpha;
  return {(Ii * (od.A() + a1 * a2)) % P, (Ii * (a1 + a2)) % P};
}

// r^n = [P^n, P^n rho, N_n - M_n rho + omega] by expanding
// (N_{n-1} - M_{n-1} rho + omega)(N_1 - M_1 rho + omega).
inline std::vector<std::pair<Poly, Poly>> pair_powers(const Poly& P, Poly N1, Poly M1, int n,
                                                      const OrderData& od) {
  std::vector<std::pair<Poly, Poly>> out = {{od.zero(), od.zero()}, {N1, M1}};
  Element g1{N1, -M1, od.one()};
  Poly Pk = P;
  for (int k = 2; k <= n; ++k) {
    Pk = Pk * P;
    const auto& [N, M] = out.back();
    Element e = element_mul(Element{N, -M, od.one()}, g1, od);
    Poly t = inv_or_throw(e.c, Pk, "omega coefficient of r^k is not a unit");
    out.push_back({(t * e.a) % Pk, (-(t * e.b)) % Pk});
  }
  return out;
}

inline Poly P_pow(const Poly& P, int e) { return power(P, e); }

}  // namespace detail

// Basis of a single prime above P.
inline Ideal prime_basis(const Poly& P, const LocalPrime& which, const OrderData& od) {
  Poly o = od.one(), z = od.zero();
  PrimeType t = prime_type(P, od);
  auto bad = [] { return DomainError("prime selector inconsistent with the splitting of P"); };
  switch (which.kind) {
    case PrimeKind::ramified: {
      if (t == PrimeType::III) return make_ideal(P, o, o, z, z, z);
      if (t != PrimeType::II) throw bad();
      Poly f = detail::wild_f(P, od);
      return make_ideal(P, o, o, f, -(detail::Iinv(P, od) * f * f), z);
    }
    case PrimeKind::tame_single:
      if (t != PrimeType::IV) throw bad();
      return make_ideal(P, o, o, z, od.E, z);
    case PrimeKind::tame_double:
      if (t != PrimeType::IV) throw bad();
      return make_ideal(P, o, o, z, z, z);
    case PrimeKind::degree_one: {
      if (t != PrimeType::I) throw bad();
      Poly a = which.alpha % P;
      if (!((a * a * a - od.A() * a + od.FI2) % P).is_zero()) throw bad();
      return make_ideal(P, o, o, -a, -(detail::Iinv(P, od) * (a * a - od.A())), z);
    }
    case PrimeKind::degree_two: {
      if (t != PrimeType::I) throw bad();
      auto [N, M] = detail::pair_start(P, which, nullptr, od);
      return make_ideal(P, P, o, z, N, -M);
    }
    case PrimeKind::inert:
      if (t != PrimeType::I) throw bad();
      return with_content(unit_ideal(od), P);
  }
  throw bad();
}

// prod p^e over primes above P, returned with content. Every primitive
// ideal supported above a single P arises this way.
inline Ideal local_ideal(const Poly& P, std::vector<LocalFactor> fs, const OrderData& od) {
  Poly o = od.one(), z = od.zero();
  fs.erase(std::remove_if(fs.begin(), fs.end(), [](const LocalFactor& f) { return f.e == 0; }), fs.end());
  for (const auto& f : fs)
    if (f.e < 0) throw DomainError("negative exponent");
  // Merge repeated primes.
  std::vector<LocalFactor> m;
  for (const auto& f : fs) {
    auto it = std::find_if(m.begin(), m.end(), [&](const LocalFactor& g) { return g.prime == f.prime; });
    if (it == m.end()) m.push_back(f);
    else it->e += f.e;
  }
  auto above = primes_above(P, od);
  auto exp_of = [&](const LocalPrime& p) {
    for (const auto& f : m)
      if (f.prime == p) return f.e;
    return 0;
  };
  for (const auto& f : m) {
    bool ok = false;
    for (const auto& a : above) ok = ok || (a.prime == f.prime);
    if (!ok) throw DomainError("prime selector inconsistent with the splitting of P");
  }
  // Content: min over primes of floor(e_p / ramification index).
  int c = 1 << 30;
  for (const auto& a : above) c = std::min(c, exp_of(a.prime) / a.e);
  Poly d = detail::P_pow(P, c);
  std::vector<LocalFactor> rest;
  for (const auto& a : above) {
    int e = exp_of(a.prime) - c * a.e;
    if (e > 0) rest.push_back({a.prime, e});
  }
  if (rest.empty()) return with_content(unit_ideal(od), d);

  PrimeType t = prime_type(P, od);
  if (t == PrimeType::II || t == PrimeType::III) {
    int e = rest[0].e;
    if (e == 1) return with_content(prime_basis(P, rest[0].prime, od), d);
    if (t == PrimeType::III) return with_content(make_ideal(P, o, P, z, z, z), d);
    Poly f = detail::wild_f(P, od), Ii = detail::Iinv(P, od);
    return with_content(make_ideal(P, P, o, z, Ii * f * f, -(Ii * f)), d);
  }

  if (t == PrimeType::IV) {
    int a = 0, b = 0;
    for (const auto& r : rest) (r.prime.kind == PrimeKind::tame_single ? a : b) = r.e;
    if (a > 0) {
      auto [X1, Z1] = detail::degree_one_start(P, {PrimeKind::tame_single, z}, od);
      auto L = detail::lift_degree_one(P, X1, Z1, a, od);
      Poly Pa = detail::P_pow(P, a);
      if (b == 0) return with_content(make_ideal(Pa, o, o, -L.X[a], -L.Z[a], z), d);
      // p^a q = [P^a, -X_a + rho, P(-Z_a + omega)].
      return with_content(make_ideal(Pa, o, P, -L.X[a], -L.Z[a], z), d);
    }
    int i = b / 2;
    auto [N1, M1] = detail::pair_start(P, {PrimeKind::tame_double, z}, nullptr, od);
    auto pw = detail::pair_powers(P, N1, M1, std::max(i, 1), od);
    Poly Pi = detail::P_pow(P, i);
    if (b % 2 == 0) return with_content(make_ideal(Pi, Pi, o, z, pw[i].first, -pw[i].second), d);
    // q^{2i+1} via (N_i - M_i rho + omega) omega, scaled to omega coefficient 1.
    Poly Pi1 = Pi * P;
    Element g = i == 0 ? Element{z, z, o} : Element{pw[i].first, -pw[i].second, o};
    Element e = element_mul(g, elem_omega(od), od);
    Poly tinv = detail::inv_or_throw(e.c, Pi1, "omega coefficient of q^k is not a unit");
    return with_content(make_ideal(Pi1, Pi, o, z, tinv * e.a, tinv * e.b), d);
  }

  // Type I.
  if (rest.size() == 1) {
    const LocalFactor& r = rest[0];
    int e = r.e;
    Poly Pe = detail::P_pow(P, e);
    if (r.prime.kind == PrimeKind::degree_one) {
      auto [X1, Z1] = detail::degree_one_start(P, r.prime, od);
      auto L = detail::lift_degree_one(P, X1, Z1, e, od);
      return with_content(make_ideal(Pe, o, o, -L.X[e], -L.Z[e], z), d);
    }
    if (r.prime.kind == PrimeKind::degree_two) {
      auto [N1, M1] = detail::pair_start(P, r.prime, nullptr, od);
      auto pw = detail::pair_powers(P, N1, M1, e, od);
      return with_content(make_ideal(Pe, Pe, o, z, pw[e].first, -pw[e].second), d);
    }
    throw InvariantError("inert prime left after content extraction");
  }
  if (rest.size() != 2) throw InvariantError("three primes left after content extraction");
  // Two degree-one primes p^i q^{i+j}.
  LocalFactor lo = rest[0], hi = rest[1];
  if (lo.e > hi.e) std::swap(lo, hi);
  int i = lo.e, j = hi.e - lo.e;
  Poly Pi = detail::P_pow(P, i);
  if (j == 0) {
    auto [N1, M1] = detail::pair_start(P, lo.prime, &hi.prime, od);
    auto pw = detail::pair_powers(P, N1, M1, i, od);
    return with_content(make_ideal(Pi, Pi, o, z, pw[i].first, -pw[i].second), d);
  }
  int n = i + j;
  Poly Pn = detail::P_pow(P, n);
  auto [Xp1, Zp1] = detail::degree_one_start(P, lo.prime, od);
  auto [Xq1, Zq1] = detail::degree_one_start(P, hi.prime, od);
  auto Lp = detail::lift_degree_one(P, Xp1, Zp1, i, od);
  auto Lq = detail::lift_degree_one(P, Xq1, Zq1, n, od);
  // (-X_p + rho)(-Z_q + omega) or (-X_q + rho)(-Z_p + omega), whichever has
  // a unit omega coefficient.
  Element e;
  if (!(Lp.X[i] % P).is_zero()) {
    e = element_mul(Element{-Lp.X[i], o, z}, Element{-Lq.Z[n], z, o}, od);
  } else {
    e = element_mul(Element{-Lq.X[n], o, z}, Element{-Lp.Z[i], z, o}, od);
  }
  Poly N = detail::inv_or_throw(e.c, Pn, "omega coefficient of p^i q^(i+j) is not a unit");
  Poly Pj = detail::P_pow(P, j);
  return with_content(make_ideal(Pn, Pi, o, -Lq.X[j] % Pj, N * e.a, N * e.b), d);
}

inline Ideal prime_power_basis(const Poly& P, const LocalPrime& p, int i, const OrderData& od) {
  return local_ideal(P, {{p, i}}, od);
}

// p^i q^{i+j}.
inline Ideal prime_power_basis(const Poly& P, const LocalPrime& p, const LocalPrime& q, int i, int j,
                               const OrderData& od) {
  return local_ideal(P, {{p, i}, {q, i + j}}, od);
}

}  // namespace cff
