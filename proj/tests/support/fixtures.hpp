// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

// Shared generators for tests and the acceptance runner.

#pragma once

#include <optional>
#include <random>
#include <vector>

#include "cff/cff.hpp"

namespace cff::testing {

// Cached so that repeated calls share one context.
inline std::shared_ptr<const FieldCtx> field(int m) {
  static const auto f1 = FieldCtx::make({0, 1});
  static const auto f2 = FieldCtx::make({1, 0, 1});     // t^2 + 1
  static const auto f3 = FieldCtx::make({1, 2, 0, 1});  // t^3 + 2t + 1
  static const auto f10 = FieldCtx::make({2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1});
  switch (m) {
    case 1: return f1;
    case 2: return f2;
    case 3: return f3;
    case 10: return f10;
  }
  throw DomainError("no fixture field of that degree");
}

inline std::vector<Poly> monic_irreducibles(const FieldCtx& K, int deg) {
  std::vector<Poly> out;
  std::vector<Fq> el = K.elements();
  std::vector<Poly> polys = {Poly::monomial(K.one(), deg)};
  for (int k = 0; k < deg; ++k) {
    std::vector<Poly> next;
    for (const auto& p : polys)
      for (const auto& c : el) next.push_back(p + Poly::monomial(c, k));
    polys = std::move(next);
  }
  for (auto& p : polys)
    if (is_irreducible(p)) out.push_back(p);
  return out;
}

inline Poly random_nonzero(const FieldCtx& K, int deg_below, std::mt19937_64& rng) {
  for (;;) {
    Poly p = random_poly(K.zero(), deg_below, rng);
    if (!p.is_zero()) return p;
  }
}

// A random standard-form curve, or nothing when the draw is unusable.
inline std::optional<OrderData> try_order(const Curve& c) {
  if (c.A.is_zero() || c.B.is_zero()) return std::nullopt;
  if (!is_standard(c) || has_polynomial_root(c)) return std::nullopt;
  try {
    return compute_order_data(c);
  } catch (const InvariantError&) {
    return std::nullopt;
  }
}

struct TypeWish {
  bool II = false, III = false, IV = false;
};

// Curves T^3 - A T + B with A = E I, B = F I^2 - i^3 + i A built so that
// the requested ramified prime types occur among the degree-one places.
inline OrderData typed_curve(const std::shared_ptr<const FieldCtx>& K, TypeWish want, std::mt19937_64& rng,
                             bool wild = false) {
  auto lin = monic_irreducibles(*K, 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(lin.begin(), lin.end(), rng);
    Poly o = poly_one(*K);
    Poly P3 = lin[0], P4 = lin[1 % lin.size()], P2 = lin[2 % lin.size()];
    Poly I = o, E = o;
    if (want.III) {
      I = I * P3;
      E = E * P3;
    }
    if (want.IV) {
      if (want.III && P4 == P3) continue;
      I = I * P4;
    }
    if (want.II) {
      if ((want.III && P2 == P3) || (want.IV && P2 == P4)) continue;
      E = E * P2;
    }
    E = E * random_nonzero(*K, 2, rng);
    Poly A = E * I;
    Poly F = random_nonzero(*K, wild ? 4 : 2, rng);
    Poly i = random_poly(K->zero(), 2, rng);
    Poly B = F * I * I - i * i * i + i * A;
    if (wild) B = B + Poly::monomial(K->one(), 3 * (A.deg() / 2 + 1) + 1);
    auto od = try_order({A, B});
    if (!od) continue;
    if (wild && !od->distinguished_ok) continue;
    auto has = [&](const Poly& P, PrimeType t) { return P.divides(od->A()) && prime_type(P, *od) == t; };
    if (want.III && !has(P3, PrimeType::III)) continue;
    if (want.IV && !has(P4, PrimeType::IV)) continue;
    if (want.II && !has(P2, PrimeType::II)) continue;
    return *od;
  }
  throw InvariantError("could not build a curve with the requested prime types");
}

// A random standard curve with 2 deg B <= 3 deg A or the wild criterion.
inline OrderData random_curve(const std::shared_ptr<const FieldCtx>& K, std::mt19937_64& rng, int max_deg_a = 4) {
  for (;;) {
    int da = 1 + int(rng() % max_deg_a);
    Poly A = random_nonzero(*K, da + 1, rng);
    Poly B = random_nonzero(*K, (3 * A.deg()) / 2 + 1, rng);
    if (rng() % 3 == 0) {
      int db = 3 * A.deg() / 2 + 1;
      if (db % 3 == 0) ++db;
      B = B + Poly::monomial(K->one(), db);
    }
    if (auto od = try_order({A, B})) return *od;
  }
}

// The ideal generated by alpha and n, content stripped.
inline Ideal ideal_from_generators(const Element& alpha, const Poly& n, const OrderData& od) {
  GeneratorSet g;
  for (const auto& b : {elem_one(od), elem_rho(od), elem_omega(od)}) {
    g.push_back(element_mul(alpha, b, od));
    g.push_back(b.scale(n));
  }
  return module_triangularize(g).primitive();
}

inline Element random_element(const OrderData& od, int deg_below, std::mt19937_64& rng) {
  const Fq& z = od.one().proto();
  return {random_poly(z, deg_below, rng), random_poly(z, deg_below, rng), random_poly(z, deg_below, rng)};
}

// Primitive ideals with small s built through the oracle only: either a
// product of random prime powers above small places, or <alpha, n>.
inline Ideal random_ideal(const OrderData& od, std::mt19937_64& rng, int max_deg_s = 6) {
  const FieldCtx& K = *od.one().proto().ctx();
  static thread_local std::vector<Poly> places;
  static thread_local const FieldCtx* cached = nullptr;
  if (cached != &K) {
    places = monic_irreducibles(K, 1);
    cached = &K;
  }
  for (;;) {
    Ideal J = unit_ideal(od);
    if (rng() % 3 != 0) {
      int n = 1 + int(rng() % 4);
      for (int k = 0; k < n; ++k) {
        const Poly& P = places[rng() % places.size()];
        auto above = primes_above(P, od);
        const auto& f = above[rng() % above.size()];
        if (f.prime.kind == PrimeKind::inert) continue;
        Ideal p = prime_basis(P, f.prime, od);
        int e = 1 + int(rng() % 3);
        for (int t = 0; t < e; ++t) J = oracle_ideal_mul(J, p, od).primitive();
      }
    } else {
      Poly n = poly_one(K);
      int parts = 1 + int(rng() % 2);
      for (int k = 0; k < parts; ++k) n = n * places[rng() % places.size()];
      J = ideal_from_generators(random_element(od, n.deg() + 1, rng), n, od);
    }
    if (J.s.deg() <= max_deg_s) return J;
  }
}

}  // namespace cff::testing
