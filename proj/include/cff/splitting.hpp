// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cff/curve.hpp"

namespace cff {

enum class Split {
  totally_ramified,    // p^3
  partially_ramified,  // q p^2
  inert,               // p
  partially_split,     // p q, inertia degrees 1 and 2
  completely_split,    // p q r
};

inline const char* split_name(Split s) {
  switch (s) {
    case Split::totally_ramified: return "totally_ramified";
    case Split::partially_ramified: return "partially_ramified";
    case Split::inert: return "inert";
    case Split::partially_split: return "partially_split";
    case Split::completely_split: return "completely_split";
  }
  return "?";
}

struct SplittingType {
  Split tag = Split::inert;
  // Roots of the reduced cubic in the residue field (constants for infinity).
  std::vector<Poly> roots;
  // T^3 - aT + b = (T - root)(T^2 - M T + W) in the partially split case.
  std::optional<Poly> M, W;

  // (ramification index, inertia degree) of each prime above the place.
  std::vector<std::pair<int, int>> ef() const {
    switch (tag) {
      case Split::totally_ramified: return {{3, 1}};
      case Split::partially_ramified: return {{1, 1}, {2, 1}};
      case Split::inert: return {{1, 3}};
      case Split::partially_split: return {{1, 1}, {1, 2}};
      case Split::completely_split: return {{1, 1}, {1, 1}, {1, 1}};
    }
    return {};
  }
  bool operator==(const SplittingType& o) const { return tag == o.tag; }
};

inline Split split_from_gcd_degree(int d) {
  switch (d) {
    case 0: return Split::inert;
    case 1: return Split::partially_split;
    case 3: return Split::completely_split;
  }
  throw InvariantError("cubic residue gcd has degree 2");
}

// Splitting of the place at infinity of a standard model.
inline SplittingType split_infinite(const Curve& c) {
  SplittingType s;
  switch (criterion(c)) {
    case Criterion::none: throw DomainError("curve is not in standard form");
    case Criterion::wild: s.tag = Split::totally_ramified; return s;
    case Criterion::tame: break;
  }
  if (c.A.deg() % 2 != 0) {
    s.tag = Split::partially_ramified;
    return s;
  }
  int n = c.A.deg() / 2;
  // Y^3 - a_{2n} Y + b_{3n} over F_q, i.e. over F_q[x]/(x).
  Poly x = c.A.x();
  Fq a = c.A.coeff(2 * n), b = c.B.coeff(3 * n);
  auto r = cubic_residue_factor(Poly::constant(a), Poly::constant(b), x);
  s.tag = split_from_gcd_degree(r.gcd_degree);
  s.roots = r.roots;
  s.M = r.M;
  s.W = r.W;
  return s;
}

}  // namespace cff
