// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cff/errors.hpp"
#include "cff/ff.hpp"

namespace cff {

// Degree of the zero polynomial. Far enough below zero that small sums and
// multiples (3 deg b + deg FI^2 and the like) stay negative without overflow.
inline constexpr int kNegInf = -(1 << 24);

// Dense univariate polynomial over a finite field of characteristic 3.
//
// E is the coefficient type. It must provide zero(), one(), is_zero(),
// is_one(), ring operators, inv(), cube_root(), log3_size() (the field has
// 3^log3_size() elements), a strict weak order, and a free function
// random_like(proto, rng). Every E carries its own context, so a
// polynomial keeps one prototype element around to mint constants.
template <class E>
class PolyT {
 public:
  PolyT() = default;
  explicit PolyT(const E& proto) : zero_(proto.zero()) {}
  PolyT(const E& proto, std::vector<E> coeffs) : zero_(proto.zero()), c_(std::move(coeffs)) {
    trim();
  }

  static PolyT constant(const E& c) { return PolyT(c, {c}); }
  static PolyT monomial(const E& c, int n) {
    std::vector<E> v(std::size_t(n) + 1, c.zero());
    v[std::size_t(n)] = c;
    return PolyT(c, std::move(v));
  }

  const E& proto() const noexcept { return zero_; }
  PolyT zero() const { return PolyT(zero_); }
  PolyT one() const { return constant(zero_.one()); }
  PolyT x() const { return monomial(zero_.one(), 1); }
  PolyT lift(const E& c) const { return constant(c); }

  int deg() const noexcept { return c_.empty() ? kNegInf : int(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
  bool is_const() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
  const std::vector<E>& coeffs() const noexcept { return c_; }
  E coeff(int i) const {
    return (i >= 0 && std::size_t(i) < c_.size()) ? c_[std::size_t(i)] : zero_;
  }
  E lc() const { return c_.empty() ? zero_ : c_.back(); }
  E operator[](int i) const { return coeff(i); }

  void set_coeff(int i, const E& v) {
    if (std::size_t(i) >= c_.size()) c_.resize(std::size_t(i) + 1, zero_);
    c_[std::size_t(i)] = v;
    trim();
  }

  PolyT operator+(const PolyT& b) const {
    std::vector<E> r(std::max(c_.size(), b.c_.size()), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return PolyT(zero_, std::move(r));
  }
  PolyT operator-(const PolyT& b) const {
    std::vector<E> r(std::max(c_.size(), b.c_.size()), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return PolyT(zero_, std::move(r));
  }
  PolyT operator-() const {
    std::vector<E> r(c_);
    for (auto& v : r) v = -v;
    return PolyT(zero_, std::move(r));
  }
  PolyT operator*(const PolyT& b) const {
    if (c_.empty() || b.c_.empty()) return zero();
    std::vector<E> r(c_.size() + b.c_.size() - 1, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * b.c_[j];
    }
    return PolyT(zero_, std::move(r));
  }
  PolyT scale(const E& s) const {
    if (s.is_zero()) return zero();
    std::vector<E> r(c_);
    for (auto& v : r) v = v * s;
    return PolyT(zero_, std::move(r));
  }
  PolyT shift(int n) const {
    if (c_.empty()) return zero();
    std::vector<E> r(std::size_t(n) + c_.size(), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + std::size_t(n)] = c_[i];
    return PolyT(zero_, std::move(r));
  }
  PolyT& operator+=(const PolyT& b) { return *this = *this + b; }
  PolyT& operator-=(const PolyT& b) { return *this = *this - b; }
  PolyT& operator*=(const PolyT& b) { return *this = *this * b; }

  // (quotient, remainder) with deg remainder < deg b.
  std::pair<PolyT, PolyT> divmod(const PolyT& b) const {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (deg() < b.deg()) return {zero(), *this};
    std::vector<E> r(c_);
    std::vector<E> q(c_.size() - b.c_.size() + 1, zero_);
    E li = b.c_.back().inv();
    std::size_t nb = b.c_.size();
    for (std::size_t k = q.size(); k-- > 0;) {
      E t = r[k + nb - 1] * li;
      q[k] = t;
      if (t.is_zero()) continue;
      for (std::size_t j = 0; j < nb; ++j) r[k + j] = r[k + j] - t * b.c_[j];
    }
    r.resize(nb - 1, zero_);
    return {PolyT(zero_, std::move(q)), PolyT(zero_, std::move(r))};
  }
  PolyT operator/(const PolyT& b) const { return divmod(b).first; }
  PolyT operator%(const PolyT& b) const {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (deg() < b.deg()) return *this;
    return divmod(b).second;
  }
  bool divides(const PolyT& f) const { return (f % *this).is_zero(); }

  PolyT monic() const {
    if (c_.empty()) return *this;
    if (c_.back().is_one()) return *this;
    return scale(c_.back().inv());
  }

  PolyT derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<E> r(c_.size() - 1, zero_);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      switch (i % 3) {
        case 0: break;
        case 1: r[i - 1] = c_[i]; break;
        default: r[i - 1] = -c_[i]; break;
      }
    }
    return PolyT(zero_, std::move(r));
  }

  E eval(const E& a) const {
    E r = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
    return r;
  }

  // f(x)^3 = sum c_i^3 x^(3i) in characteristic 3.
  PolyT cube() const {
    if (c_.empty()) return zero();
    std::vector<E> r(3 * (c_.size() - 1) + 1, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) r[3 * i] = c_[i] * c_[i] * c_[i];
    return PolyT(zero_, std::move(r));
  }

  bool operator==(const PolyT& b) const {
    if (c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == b.c_[i])) return false;
    return true;
  }
  bool operator!=(const PolyT& b) const { return !(*this == b); }
  // Degree first, then coefficients from the top.
  bool operator<(const PolyT& b) const {
    if (deg() != b.deg()) return deg() < b.deg();
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] < b.c_[i]) return true;
      if (b.c_[i] < c_[i]) return false;
    }
    return false;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  E zero_{};
  std::vector<E> c_;
};

template <class E>
PolyT<E> exact_div(const PolyT<E>& a, const PolyT<E>& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw InvariantError("inexact polynomial division");
  return q;
}

template <class E>
PolyT<E> gcd(PolyT<E> a, PolyT<E> b) {
  while (!b.is_zero()) {
    PolyT<E> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class E>
PolyT<E> gcd(const PolyT<E>& a, const PolyT<E>& b, const PolyT<E>& c) {
  return gcd(gcd(a, b), c);
}

template <class E>
struct Xgcd {
  PolyT<E> d, s, t;
};

// d = s f + t g with d monic.
template <class E>
Xgcd<E> xgcd(const PolyT<E>& f, const PolyT<E>& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("xgcd of two zero polynomials");
  PolyT<E> r0 = f, r1 = g;
  PolyT<E> s0 = f.one(), s1 = f.zero();
  PolyT<E> t0 = f.zero(), t1 = f.one();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyT<E> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    PolyT<E> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  E li = r0.lc().inv();
  return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

template <class E>
PolyT<E> lcm(const PolyT<E>& a, const PolyT<E>& b) {
  if (a.is_zero() || b.is_zero()) return a.zero();
  return (a / gcd(a, b) * b).monic();
}

// a^{-1} modulo m; domain error when gcd(a, m) != 1.
template <class E>
PolyT<E> inv_mod(const PolyT<E>& a, const PolyT<E>& m) {
  if (m.deg() <= 0) {
    if (m.is_zero()) throw DomainError("inverse modulo zero");
    return m.zero();
  }
  auto g = xgcd(a % m, m);
  if (!g.d.is_one()) throw DomainError("element not invertible modulo polynomial");
  return g.s % m;
}

template <class E>
PolyT<E> mulmod(const PolyT<E>& a, const PolyT<E>& b, const PolyT<E>& m) {
  return (a * b) % m;
}

template <class E>
PolyT<E> powmod(PolyT<E> base, std::uint64_t e, const PolyT<E>& m) {
  if (m.is_zero()) throw DomainError("powmod with zero modulus");
  PolyT<E> r = m.one() % m;
  base = base % m;
  while (e) {
    if (e & 1u) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// base^(3^j) mod m.
template <class E>
PolyT<E> frobmod(PolyT<E> base, long j, const PolyT<E>& m) {
  base = base % m;
  for (long i = 0; i < j; ++i) base = base.cube() % m;
  return base;
}

// Solve x = r_i mod m_i for pairwise coprime m_i; result reduced mod prod m_i.
template <class E>
PolyT<E> crt(const std::vector<std::pair<PolyT<E>, PolyT<E>>>& eqs, const E& proto) {
  PolyT<E> x(proto), M = PolyT<E>(proto).one();
  for (const auto& [r, m] : eqs) {
    if (m.is_zero()) throw DomainError("zero modulus in CRT");
    if (m.deg() == 0) continue;
    PolyT<E> mi = M % m;
    auto g = xgcd(mi, m);
    if (!g.d.is_one()) throw DomainError("CRT moduli are not coprime");
    PolyT<E> t = ((r - x) % m * g.s) % m;
    x = x + M * t;
    M = M * m;
    x = x % M;
  }
  return x;
}

// Same, for two congruences whose moduli may share factors. The residues
// must agree modulo the gcd; the answer is reduced modulo the lcm.
template <class E>
PolyT<E> crt2(const PolyT<E>& r1, const PolyT<E>& m1, const PolyT<E>& r2, const PolyT<E>& m2) {
  PolyT<E> g = gcd(m1, m2);
  PolyT<E> diff = r2 - r1;
  if (!(diff % g).is_zero()) throw DomainError("incompatible congruences");
  PolyT<E> m1g = m1 / g, m2g = m2 / g;
  PolyT<E> t(m1.proto());
  if (m2g.deg() > 0) t = ((diff / g) % m2g * inv_mod(m1g % m2g, m2g)) % m2g;
  PolyT<E> L = m1g * m2;
  return (r1 + m1 * t) % L;
}

// Largest e with P^e | f (f != 0).
template <class E>
int valuation(PolyT<E> f, const PolyT<E>& P) {
  if (f.is_zero()) throw DomainError("valuation of zero");
  if (P.deg() <= 0) throw DomainError("valuation at a constant");
  int e = 0;
  for (;;) {
    auto [q, r] = f.divmod(P);
    if (!r.is_zero()) return e;
    f = std::move(q);
    ++e;
  }
}

template <class E>
PolyT<E> power(const PolyT<E>& f, int e) {
  PolyT<E> r = f.one();
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

template <class E>
PolyT<E> random_poly(const E& proto, int deg_below, std::mt19937_64& rng) {
  std::vector<E> v;
  for (int i = 0; i < deg_below; ++i) v.push_back(random_like(proto, rng));
  return PolyT<E>(proto, std::move(v));
}

template <class E>
PolyT<E> random_monic(const E& proto, int deg, std::mt19937_64& rng) {
  auto p = random_poly(proto, deg, rng);
  p.set_coeff(deg, proto.one());
  return p;
}

inline Fq random_like(const Fq& proto, std::mt19937_64& rng) { return proto.ctx()->random(rng); }

using Poly = PolyT<Fq>;

inline Poly poly_zero(const FieldCtx& k) { return Poly(k.zero()); }
inline Poly poly_one(const FieldCtx& k) { return Poly::constant(k.one()); }
inline Poly poly_x(const FieldCtx& k) { return Poly::monomial(k.one(), 1); }
inline Poly poly_const(const FieldCtx& k, long c) { return Poly(k.zero(), {k.from_int(c)}); }
inline Poly poly_from_ints(const FieldCtx& k, const std::vector<long>& c) {
  std::vector<Fq> v;
  for (long a : c) v.push_back(k.from_int(a));
  return Poly(k.zero(), std::move(v));
}

// --- factorization -------------------------------------------------------

template <class E>
using Factorization = std::vector<std::pair<PolyT<E>, int>>;

namespace detail {

// g with g(x^3) = f, coefficients cube-rooted (f' = 0 assumed).
template <class E>
PolyT<E> cube_root_poly(const PolyT<E>& f) {
  std::vector<E> v;
  for (int i = 0; i <= f.deg(); i += 3) v.push_back(f.coeff(i).cube_root());
  return PolyT<E>(f.proto(), std::move(v));
}

template <class E>
void squarefree_rec(const PolyT<E>& f, int mult, Factorization<E>& out) {
  if (f.deg() <= 0) return;
  PolyT<E> df = f.derivative();
  if (df.is_zero()) {
    squarefree_rec(cube_root_poly(f), mult * 3, out);
    return;
  }
  PolyT<E> c = gcd(f, df);
  PolyT<E> w = f.monic() / c;
  int i = 1;
  while (w.deg() > 0) {
    PolyT<E> y = gcd(w, c);
    PolyT<E> z = w / y;
    if (z.deg() > 0) out.push_back({z.monic(), i * mult});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.deg() > 0) squarefree_rec(cube_root_poly(c), mult * 3, out);
}

template <class E>
void edf(const PolyT<E>& g, int d, std::mt19937_64& rng, std::vector<PolyT<E>>& out) {
  if (g.deg() == d) {
    out.push_back(g.monic());
    return;
  }
  int n = g.proto().log3_size();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    PolyT<E> a = random_poly(g.proto(), g.deg(), rng);
    if (a.deg() <= 0) continue;
    // a^((q^d - 1)/2) = prod_{j < n d} a^(3^j)
    PolyT<E> b = g.one(), f = a % g;
    for (long j = 0; j < long(n) * d; ++j) {
      b = mulmod(b, f, g);
      f = f.cube() % g;
    }
    PolyT<E> h = gcd(g, b - g.one());
    if (h.deg() > 0 && h.deg() < g.deg()) {
      edf(h, d, rng, out);
      edf(g / h, d, rng, out);
      return;
    }
  }
  throw InvariantError("equal-degree splitting did not converge");
}

}  // namespace detail

// Square-free decomposition: pairs (squarefree monic part, multiplicity).
template <class E>
Factorization<E> squarefree(const PolyT<E>& f) {
  Factorization<E> out;
  detail::squarefree_rec(f, 1, out);
  return out;
}

// Distinct-degree factorization of a squarefree monic polynomial.
template <class E>
std::vector<std::pair<PolyT<E>, int>> distinct_degree(PolyT<E> f) {
  std::vector<std::pair<PolyT<E>, int>> out;
  int n = f.proto().log3_size();
  PolyT<E> x = f.x();
  PolyT<E> h = x % f;
  for (int d = 1; 2 * d <= f.deg(); ++d) {
    h = frobmod(h, n, f);
    PolyT<E> g = gcd(f, h - x);
    if (g.deg() > 0) {
      out.push_back({g, d});
      f = f / g;
      h = h % f;
    }
  }
  if (f.deg() > 0) out.push_back({f.monic(), f.deg()});
  return out;
}

template <class E>
Factorization<E> factor(const PolyT<E>& f, std::uint64_t seed = 0x5eed) {
  if (f.deg() < 1) throw DomainError("factor of a constant polynomial");
  std::mt19937_64 rng(seed);
  Factorization<E> out;
  for (const auto& [s, mult] : squarefree(f)) {
    for (const auto& [g, d] : distinct_degree(s)) {
      std::vector<PolyT<E>> parts;
      detail::edf(g, d, rng, parts);
      for (auto& p : parts) out.push_back({p, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  // Merge repeated factors that arrived from different square-free layers.
  Factorization<E> merged;
  for (auto& pr : out) {
    if (!merged.empty() && merged.back().first == pr.first) merged.back().second += pr.second;
    else merged.push_back(pr);
  }
  return merged;
}

template <class E>
bool is_irreducible(const PolyT<E>& f) {
  int k = f.deg();
  if (k < 1) return false;
  if (k == 1) return true;
  int n = f.proto().log3_size();
  PolyT<E> x = f.x();
  PolyT<E> h = x % f;
  for (int i = 1; i <= k; ++i) {
    h = frobmod(h, n, f);
    if (i < k) {
      if (2 * i <= k && gcd(f, h - x).deg() > 0) return false;
    } else if (!(h - x % f).is_zero()) {
      return false;
    }
  }
  return true;
}

// Roots of f in the coefficient field, sorted, without multiplicity.
template <class E>
std::vector<E> roots(const PolyT<E>& f, std::uint64_t seed = 0x5eed) {
  std::vector<E> out;
  if (f.deg() < 1) return out;
  PolyT<E> g = f.monic();
  int n = g.proto().log3_size();
  PolyT<E> h = frobmod(g.x(), n, g);
  PolyT<E> r = gcd(g, h - g.x());
  if (r.deg() < 1) return out;
  std::mt19937_64 rng(seed);
  std::vector<PolyT<E>> lin;
  detail::edf(r, 1, rng, lin);
  for (auto& l : lin) out.push_back(-l.coeff(0));
  std::sort(out.begin(), out.end());
  return out;
}

// g with g^2 = f, if f is a square in the polynomial ring.
template <class E>
std::optional<PolyT<E>> sqrt_poly(const PolyT<E>& f) {
  if (f.is_zero()) throw DomainError("square test of zero");
  E lc = f.lc();
  PolyT<E> t = PolyT<E>(lc, {-lc, lc.zero(), lc.one()});
  auto r = roots(t);
  if (r.empty()) return std::nullopt;
  PolyT<E> g = PolyT<E>::constant(r.front());
  if (f.deg() == 0) return g;
  for (const auto& [p, e] : factor(f)) {
    if (e % 2) return std::nullopt;
    g = g * power(p, e / 2);
  }
  return g;
}

// --- residue fields F_q[x]/(P) -------------------------------------------

class ResidueField;

// Element of F_q[x]/(P), P irreducible.
class Res {
 public:
  Res() = default;
  Res(const ResidueField* F, Poly v) : F_(F), v_(std::move(v)) {}
  const ResidueField* field() const noexcept { return F_; }
  const Poly& value() const noexcept { return v_; }

  inline Res zero() const;
  inline Res one() const;
  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_.is_one(); }
  inline Res operator+(const Res& b) const;
  inline Res operator-(const Res& b) const;
  inline Res operator*(const Res& b) const;
  inline Res operator-() const;
  inline Res inv() const;
  inline Res cube_root() const;
  inline int log3_size() const;
  bool operator==(const Res& b) const { return v_ == b.v_; }
  bool operator!=(const Res& b) const { return !(v_ == b.v_); }
  bool operator<(const Res& b) const { return v_ < b.v_; }

 private:
  const ResidueField* F_ = nullptr;
  Poly v_;
};

class ResidueField {
 public:
  explicit ResidueField(Poly P) : P_(std::move(P)) {
    if (P_.deg() < 1) throw DomainError("residue field modulus must be nonconstant");
    n_ = P_.proto().ctx()->m() * P_.deg();
  }
  const Poly& modulus() const noexcept { return P_; }
  int log3_size() const noexcept { return n_; }
  Res make(const Poly& v) const { return Res(this, v % P_); }
  Res zero() const { return Res(this, P_.zero()); }
  Res one() const { return Res(this, P_.one()); }

 private:
  Poly P_;
  int n_;
};

inline Res Res::zero() const { return F_->zero(); }
inline Res Res::one() const { return F_->one(); }
inline Res Res::operator+(const Res& b) const { return Res(F_, v_ + b.v_); }
inline Res Res::operator-(const Res& b) const { return Res(F_, v_ - b.v_); }
inline Res Res::operator*(const Res& b) const { return Res(F_, (v_ * b.v_) % F_->modulus()); }
inline Res Res::operator-() const { return Res(F_, -v_); }
inline Res Res::inv() const {
  if (v_.is_zero()) throw DomainError("inverse of zero residue");
  return Res(F_, inv_mod(v_, F_->modulus()));
}
inline Res Res::cube_root() const {
  return Res(F_, frobmod(v_, F_->log3_size() - 1, F_->modulus()));
}
inline int Res::log3_size() const { return F_->log3_size(); }

inline Res random_like(const Res& proto, std::mt19937_64& rng) {
  const ResidueField* F = proto.field();
  return F->make(random_poly(F->modulus().proto(), F->modulus().deg(), rng));
}

using ResPoly = PolyT<Res>;

// The unique f with f^3 = c (mod P), P irreducible.
inline Poly cube_root_mod(const Poly& c, const Poly& P) {
  if (!is_irreducible(P)) throw DomainError("cube root modulo a reducible polynomial");
  long n = long(P.proto().ctx()->m()) * P.deg();
  return frobmod(c % P, n - 1, P);
}

// Cube root modulo a squarefree S given its irreducible factors.
inline Poly cube_root_mod_squarefree(const Poly& c, const std::vector<Poly>& primes) {
  std::vector<std::pair<Poly, Poly>> eqs;
  for (const auto& P : primes) {
    long n = long(P.proto().ctx()->m()) * P.deg();
    eqs.push_back({frobmod(c % P, n - 1, P), P});
  }
  return crt(eqs, c.proto());
}

// Residue-field data of T^3 - aT + b modulo an irreducible P.
struct CubicResidue {
  int gcd_degree = 0;          // deg gcd(T^{q1} - T, T^3 - aT + b): 0, 1 or 3
  std::vector<Poly> roots;     // roots in F_q[x]/(P), reduced, sorted
  std::optional<Poly> M, W;    // T^3 - aT + b = (T - root)(T^2 - M T + W) when gcd_degree == 1
};

inline CubicResidue cubic_residue_factor(const Poly& a, const Poly& b, const Poly& P,
                                         std::uint64_t seed = 0x5eed) {
  if (!is_irreducible(P)) throw DomainError("cubic residue data needs an irreducible modulus");
  ResidueField K(P);
  Res ra = K.make(a), rb = K.make(b);
  ResPoly cub(K.zero(), {rb, -ra, K.zero(), K.one()});
  ResPoly T = cub.x();
  ResPoly h = frobmod(T, K.log3_size(), cub);
  ResPoly g = gcd(cub, h - T);
  CubicResidue out;
  out.gcd_degree = g.deg() < 0 ? 0 : g.deg();
  if (out.gcd_degree > 0) {
    std::mt19937_64 rng(seed);
    std::vector<ResPoly> lin;
    detail::edf(g, 1, rng, lin);
    for (auto& l : lin) out.roots.push_back((-l.coeff(0)).value());
    std::sort(out.roots.begin(), out.roots.end());
  }
  if (out.gcd_degree == 1) {
    Res r = K.make(out.roots[0]);
    ResPoly quad = cub / ResPoly(K.zero(), {-r, K.one()});
    out.M = (-quad.coeff(1)).value();
    out.W = quad.coeff(0).value();
  }
  return out;
}

}  // namespace cff
