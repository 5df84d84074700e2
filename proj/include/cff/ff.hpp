// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cff/errors.hpp"

namespace cff {

class FieldCtx;

// Element of GF(3^m). Digits are kept as two bit planes: bit k of `one`
// is set when the coefficient of alpha^k is 1, bit k of `two` when it is 2.
class Fq {
 public:
  Fq() = default;

  const FieldCtx* ctx() const noexcept { return ctx_; }
  bool is_zero() const noexcept { return (one_ | two_) == 0; }
  bool is_one() const noexcept { return one_ == 1 && two_ == 0; }
  int digit(int k) const noexcept {
    return int((one_ >> k) & 1u) + 2 * int((two_ >> k) & 1u);
  }
  std::uint64_t plane1() const noexcept { return one_; }
  std::uint64_t plane2() const noexcept { return two_; }

  Fq zero() const noexcept { return Fq(ctx_, 0, 0); }
  Fq one() const noexcept { return Fq(ctx_, 1, 0); }

  inline Fq operator+(const Fq& b) const;
  inline Fq operator-(const Fq& b) const;
  inline Fq operator*(const Fq& b) const;
  Fq operator-() const noexcept { return Fq(ctx_, two_, one_); }
  Fq& operator+=(const Fq& b) { return *this = *this + b; }
  Fq& operator-=(const Fq& b) { return *this = *this - b; }
  Fq& operator*=(const Fq& b) { return *this = *this * b; }

  inline Fq inv() const;
  inline Fq cube_root() const;
  inline Fq pow(std::uint64_t e) const;
  inline int log3_size() const;

  bool operator==(const Fq& b) const noexcept {
    return one_ == b.one_ && two_ == b.two_;
  }
  bool operator!=(const Fq& b) const noexcept { return !(*this == b); }
  // Total order: compare as base-3 integers.
  bool operator<(const Fq& b) const noexcept {
    std::uint64_t diff = (one_ ^ b.one_) | (two_ ^ b.two_);
    if (diff == 0) return false;
    int top = 63 - std::countl_zero(diff);
    return digit(top) < b.digit(top);
  }

 private:
  friend class FieldCtx;
  Fq(const FieldCtx* c, std::uint64_t a, std::uint64_t b) : ctx_(c), one_(a), two_(b) {}
  const FieldCtx* ctx_ = nullptr;
  std::uint64_t one_ = 0;
  std::uint64_t two_ = 0;
};

namespace detail {

// Bitsliced GF(3) addition on packed digit planes.
inline void add3(std::uint64_t a1, std::uint64_t a2, std::uint64_t b1, std::uint64_t b2,
                 std::uint64_t& c1, std::uint64_t& c2) noexcept {
  std::uint64_t t = (a1 | b2) ^ (a2 | b1);
  c1 = (a2 | b2) ^ t;
  c2 = (a1 | b1) ^ t;
}

// Dense GF(3)[t] helpers used only to validate a modulus.
using Dig = std::vector<int>;

inline void trim3(Dig& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Dig mod3(Dig a, const Dig& f) {
  trim3(a);
  int lf = f.back();  // 1 or 2, self-inverse
  while (a.size() >= f.size()) {
    int c = (a.back() * lf) % 3;
    std::size_t sh = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) a[sh + i] = ((a[sh + i] - c * f[i]) % 3 + 3) % 3;
    trim3(a);
  }
  return a;
}

inline Dig gcd3(Dig a, Dig b) {
  trim3(a);
  trim3(b);
  while (!b.empty()) {
    Dig r = mod3(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline bool irreducible3(const Dig& f) {
  int n = int(f.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  Dig h = {0, 1};  // t
  for (int k = 1; k <= n; ++k) {
    Dig c(3 * h.size(), 0);
    for (std::size_t i = 0; i < h.size(); ++i) c[3 * i] = h[i];
    h = mod3(c, f);
    Dig g = h;
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + 2) % 3;
    trim3(g);
    if (k < n) {
      if (2 * k <= n) {
        Dig d = gcd3(f, g);
        if (d.size() > 1) return false;
      }
    } else if (!g.empty()) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

// GF(3^m) = GF(3)[alpha]/(modulus), 1 <= m <= 64. Immutable once built.
class FieldCtx {
 public:
  static std::shared_ptr<const FieldCtx> make(const std::vector<int>& modulus) {
    if (modulus.size() < 2 || modulus.size() > 65)
      throw DomainError("modulus degree must lie in 1..64");
    for (int d : modulus)
      if (d < 0 || d > 2) throw DomainError("modulus digits must lie in {0,1,2}");
    if (modulus.back() != 1) throw DomainError("modulus must be monic");
    if (!detail::irreducible3(modulus)) throw DomainError("modulus is reducible over GF(3)");
    return std::shared_ptr<const FieldCtx>(new FieldCtx(modulus));
  }

  static std::shared_ptr<const FieldCtx> prime_field() { return make({0, 1}); }

  int m() const noexcept { return m_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Fq zero() const noexcept { return Fq(this, 0, 0); }
  Fq one() const noexcept { return Fq(this, 1, 0); }
  Fq from_int(long v) const noexcept {
    int r = int(((v % 3) + 3) % 3);
    return Fq(this, r == 1 ? 1 : 0, r == 2 ? 1 : 0);
  }
  // alpha, the class of t modulo the defining polynomial.
  Fq gen() const noexcept { return mul_alpha(one()); }

  Fq from_digits(const std::vector<int>& d) const {
    if (int(d.size()) > m_) throw DomainError("too many digits for field element");
    std::uint64_t a = 0, b = 0;
    for (std::size_t k = 0; k < d.size(); ++k) {
      int v = ((d[k] % 3) + 3) % 3;
      if (v == 1) a |= std::uint64_t(1) << k;
      if (v == 2) b |= std::uint64_t(1) << k;
    }
    return Fq(this, a, b);
  }
  std::vector<int> digits(const Fq& x) const {
    std::vector<int> d(m_);
    for (int k = 0; k < m_; ++k) d[k] = x.digit(k);
    return d;
  }

  Fq add(const Fq& a, const Fq& b) const {
    check(a);
    check(b);
    std::uint64_t c1, c2;
    detail::add3(a.one_, a.two_, b.one_, b.two_, c1, c2);
    return Fq(this, c1, c2);
  }
  Fq sub(const Fq& a, const Fq& b) const { return add(a, -b); }
  Fq neg(const Fq& a) const {
    check(a);
    return -a;
  }

  Fq mul(const Fq& a, const Fq& b) const {
    check(a);
    check(b);
    Fq acc = zero();
    for (int k = m_ - 1; k >= 0; --k) {
      acc = mul_alpha(acc);
      int d = b.digit(k);
      if (d == 1) acc = raw_add(acc, a);
      else if (d == 2) acc = raw_add(acc, -a);
    }
    return acc;
  }

  // a^(3^k)
  Fq frob(Fq a, long k) const {
    k %= m_;
    if (k < 0) k += m_;
    for (long i = 0; i < k; ++i) a = mul(mul(a, a), a);
    return a;
  }

  Fq cube_root(const Fq& c) const { return frob(c, m_ - 1); }

  Fq pow(Fq a, std::uint64_t e) const {
    check(a);
    Fq r = one();
    while (e) {
      if (e & 1u) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  // a^(3^m - 2) = a * prod_{k=1}^{m-1} (a^(3^k))^2
  Fq inv(const Fq& a) const {
    check(a);
    if (a.is_zero()) throw DomainError("inverse of zero in GF(3^m)");
    Fq r = a;
    Fq f = a;
    for (int k = 1; k < m_; ++k) {
      f = mul(mul(f, f), f);
      r = mul(r, mul(f, f));
    }
    return r;
  }

  // a^((q-1)/2) = prod_{k<m} a^(3^k): the norm down to GF(3).
  Fq euler(const Fq& a) const {
    Fq r = one();
    Fq f = a;
    for (int k = 0; k < m_; ++k) {
      r = mul(r, f);
      f = mul(mul(f, f), f);
    }
    return r;
  }
  bool is_square(const Fq& a) const { return a.is_zero() || euler(a).is_one(); }

  Fq random(std::mt19937_64& rng) const {
    std::uint64_t a = 0, b = 0;
    for (int k = 0; k < m_; ++k) {
      int v = int(rng() % 3);
      if (v == 1) a |= std::uint64_t(1) << k;
      if (v == 2) b |= std::uint64_t(1) << k;
    }
    return Fq(this, a, b);
  }

  // Enumerate every element (only sensible for small fields).
  std::vector<Fq> elements() const {
    if (m_ > 12) throw DomainError("field too large to enumerate");
    std::vector<Fq> out;
    std::size_t n = 1;
    for (int k = 0; k < m_; ++k) n *= 3;
    out.reserve(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
      std::vector<int> d(m_);
      std::size_t t = idx;
      for (int k = 0; k < m_; ++k) {
        d[k] = int(t % 3);
        t /= 3;
      }
      out.push_back(from_digits(d));
    }
    return out;
  }

 private:
  explicit FieldCtx(const std::vector<int>& modulus)
      : m_(int(modulus.size()) - 1), modulus_(modulus) {
    mask_ = m_ == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << m_) - 1);
    for (int k = 0; k < m_; ++k) {
      int v = (3 - modulus[k]) % 3;  // -f_k
      if (v == 1) negf1_ |= std::uint64_t(1) << k;
      if (v == 2) negf2_ |= std::uint64_t(1) << k;
    }
  }

  void check(const Fq& a) const {
    if (a.ctx_ != this) throw InvariantError("field element from a different context");
  }

  Fq raw_add(const Fq& a, const Fq& b) const noexcept {
    std::uint64_t c1, c2;
    detail::add3(a.one_, a.two_, b.one_, b.two_, c1, c2);
    return Fq(this, c1, c2);
  }

  Fq mul_alpha(const Fq& a) const noexcept {
    int top = a.digit(m_ - 1);
    std::uint64_t p1 = m_ == 64 ? a.one_ << 1 : (a.one_ << 1) & mask_;
    std::uint64_t p2 = m_ == 64 ? a.two_ << 1 : (a.two_ << 1) & mask_;
    Fq r(this, p1, p2);
    if (top == 1) r = raw_add(r, Fq(this, negf1_, negf2_));
    if (top == 2) r = raw_add(r, Fq(this, negf2_, negf1_));
    return r;
  }

  int m_;
  std::vector<int> modulus_;
  std::uint64_t mask_ = 0;
  std::uint64_t negf1_ = 0, negf2_ = 0;
};

inline Fq Fq::operator+(const Fq& b) const { return ctx_->add(*this, b); }
inline Fq Fq::operator-(const Fq& b) const { return ctx_->sub(*this, b); }
inline Fq Fq::operator*(const Fq& b) const { return ctx_->mul(*this, b); }
inline Fq Fq::inv() const { return ctx_->inv(*this); }
inline Fq Fq::cube_root() const { return ctx_->cube_root(*this); }
inline Fq Fq::pow(std::uint64_t e) const { return ctx_->pow(*this, e); }
inline int Fq::log3_size() const { return ctx_->m(); }

}  // namespace cff
