// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cff/poly.hpp"

namespace cff {

// S T^3 + U T^2 + V T + W.
struct GeneralCubic {
  Poly S, U, V, W;
};

// Which degree criterion a standard model satisfies.
enum class Criterion {
  none,
  wild,  // 3 does not divide deg B and 2 deg B > 3 deg A
  tame,  // 2 deg B <= 3 deg A
};

// T^3 - A T + B.
struct Curve {
  Poly A, B;
  bool operator==(const Curve& o) const { return A == o.A && B == o.B; }
};

inline Criterion criterion(const Curve& c) {
  int a = c.A.deg(), b = c.B.deg();
  if (2 * b <= 3 * a) return Criterion::tame;
  if (b % 3 != 0) return Criterion::wild;
  return Criterion::none;
}

inline void validate(const Curve& c) {
  if (c.A.is_zero()) throw DomainError("A = 0 gives a purely inseparable extension");
  if (c.B.is_zero()) throw DomainError("B = 0 makes T^3 - AT + B reducible");
}

// Transformation records; y' denotes the new generator.
struct DepressStep {
  std::optional<Poly> N;  // absent when U = 0
};
struct RemoveStep {
  Poly Q, i;  // y' = (y + i) / Q
};
struct ShiftStep {
  Fq c;
  int n;  // y' = y + c x^n
};
using Step = std::variant<DepressStep, RemoveStep, ShiftStep>;

inline Curve depress(const GeneralCubic& g) {
  if (g.S.is_zero() || g.W.is_zero()) throw DomainError("general cubic needs S W != 0");
  if (g.U.is_zero() && g.V.is_zero()) throw DomainError("U = V = 0 gives a purely inseparable extension");
  if (g.U.is_zero()) return {-(g.S * g.V), g.S * g.S * g.W};
  Poly N = g.S - g.U * g.U * g.V + g.U * g.U * g.U * g.W;
  if (N.is_zero()) throw DomainError("transformed cubic degenerates (N = 0): reducible curve");
  Poly N2 = N * N;
  return {-(N2 * g.U * g.U), N2 * g.S};
}

struct Removal {
  Curve curve;
  Poly Q, i;
};

// d = gcd(A, A'^3 B + B'^3); the curve is nonsingular iff deg d = 0.
inline Poly singular_support(const Curve& c) {
  Poly dA = c.A.derivative(), dB = c.B.derivative();
  return gcd(c.A, dA * dA * dA * c.B + dB * dB * dB);
}

struct Singularity {
  Poly d;
  bool nonsingular;
};

inline Singularity detect_singularity(const Curve& c) {
  Poly d = singular_support(c);
  return {d, d.deg() <= 0};
}

namespace detail {

inline std::optional<Removal> try_remove_at(const Curve& c, const Poly& P) {
  Poly P2 = P * P;
  if (!P2.divides(c.A)) return std::nullopt;
  Poly i0 = cube_root_mod(-(c.B % P), P);
  Poly t = i0 * i0 * i0 - i0 * c.A + c.B;
  Poly P3 = P2 * P;
  if (!P3.divides(t)) return std::nullopt;
  return Removal{{exact_div(c.A, P2), exact_div(t, P3)}, P, i0};
}

}  // namespace detail

inline std::optional<Removal> remove_singular_factor(const Curve& c) {
  validate(c);
  if (c.A.deg() < 2) return std::nullopt;
  Poly d = singular_support(c);
  std::vector<Poly> tried;
  if (d.deg() > 0) {
    for (const auto& [P, e] : factor(d)) {
      tried.push_back(P);
      if (auto r = detail::try_remove_at(c, P)) return r;
    }
  }
  for (const auto& [P, e] : factor(c.A)) {
    if (e < 2) continue;
    if (std::find(tried.begin(), tried.end(), P) != tried.end()) continue;
    if (auto r = detail::try_remove_at(c, P)) return r;
  }
  return std::nullopt;
}

// One step T -> T - b^(1/3) x^n, with b the leading coefficient of B.
inline std::optional<std::pair<Curve, ShiftStep>> reduce_b_step(const Curve& c) {
  int db = c.B.deg();
  if (db % 3 != 0 || 2 * db <= 3 * c.A.deg()) return std::nullopt;
  int n = db / 3;
  Fq b = c.B.lc();
  Fq r = b.cube_root();
  Poly B = c.B - Poly::monomial(b, 3 * n) + c.A * Poly::monomial(r, n);
  if (B.is_zero()) throw DomainError("curve became reducible while lowering deg B");
  return std::make_pair(Curve{c.A, B}, ShiftStep{r, n});
}

inline Curve reduce_b_degree(Curve c) {
  validate(c);
  while (auto s = reduce_b_step(c)) c = s->first;
  return c;
}

struct Standardized {
  Curve curve;
  Criterion crit;
  std::vector<Step> transcript;
};

inline Standardized standardize(Curve c, std::vector<Step> transcript = {}) {
  validate(c);
  while (auto r = remove_singular_factor(c)) {
    transcript.push_back(RemoveStep{r->Q, r->i});
    c = r->curve;
  }
  while (auto s = reduce_b_step(c)) {
    transcript.push_back(s->second);
    c = s->first;
  }
  Criterion k = criterion(c);
  require(k != Criterion::none, "standardization left neither degree criterion satisfied");
  return {c, k, std::move(transcript)};
}

inline Standardized standardize(const GeneralCubic& g) {
  std::vector<Step> t;
  if (g.U.is_zero()) {
    t.push_back(DepressStep{std::nullopt});
  } else {
    t.push_back(DepressStep{g.S - g.U * g.U * g.V + g.U * g.U * g.U * g.W});
  }
  return standardize(depress(g), std::move(t));
}

inline bool is_standard(const Curve& c) {
  return criterion(c) != Criterion::none && !remove_singular_factor(c).has_value();
}

inline bool is_artin_schreier(const Curve& c) {
  validate(c);
  return sqrt_poly(c.A).has_value();
}

// Whether T^3 - A T + B has a root in F_q[x] (equivalently in F_q(x)).
inline bool has_polynomial_root(const Curve& c) {
  validate(c);
  if (criterion(c) == Criterion::wild) return false;
  int bound = c.A.deg() / 2;
  const Fq& z = c.A.proto();
  // Monic divisors of B with degree <= bound.
  std::vector<Poly> divs = {c.A.one()};
  if (c.B.deg() > 0) {
    for (const auto& [P, e] : factor(c.B)) {
      std::vector<Poly> next;
      for (const auto& d : divs) {
        Poly cur = d;
        for (int k = 0; k <= e && cur.deg() <= bound; ++k) {
          next.push_back(cur);
          cur = cur * P;
        }
      }
      divs = std::move(next);
    }
  }
  for (const auto& g : divs) {
    // y = t g: t^3 g^3 - t A g + B = 0. Pick a coefficient that pins t.
    Poly g3 = g * g * g, ag = c.A * g;
    int top = std::max({g3.deg(), ag.deg(), c.B.deg()});
    for (int k = 0; k <= top; ++k) {
      Poly eq(z, {c.B.coeff(k), -ag.coeff(k), z, g3.coeff(k)});
      if (eq.is_zero()) continue;
      if (eq.deg() <= 0) break;
      for (const Fq& t : roots(eq)) {
        Poly y = g.scale(t);
        if ((y * y * y - c.A * y + c.B).is_zero()) return true;
      }
      break;
    }
  }
  return false;
}

}  // namespace cff
