// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

// Text forms of field elements, polynomials, curves and ideals.
//
//   coeff := DIGIT | "(" DIGIT ("," DIGIT)* ")"   GF(3) coordinates, alpha^0 first
//   poly  := coeff (SP coeff)*                     constant term first
//
// Curve files are line oriented with '#' comments:
//
//   characteristic 3
//   extension 10
//   modulus 2 1 0 0 2 2 2 0 0 0 1
//   A 1
//   B (0,1) 0 0 0 1

#pragma once

#include <cctype>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cff/curve.hpp"
#include "cff/ideal.hpp"

namespace cff {

inline std::string format_fq(const Fq& a) {
  const FieldCtx& K = *a.ctx();
  auto d = K.digits(a);
  int top = int(d.size()) - 1;
  while (top > 0 && d[top] == 0) --top;
  if (top == 0) return std::to_string(d[0]);
  std::string s = "(";
  for (int k = 0; k <= top; ++k) {
    if (k) s += ',';
    s += char('0' + d[k]);
  }
  return s + ")";
}

inline std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int k = 0; k <= f.deg(); ++k) {
    if (k) s += ' ';
    s += format_fq(f.coeff(k));
  }
  return s;
}

inline std::string format_ideal(const Ideal& J) {
  return "ideal d=" + format_poly(J.d) + " s=" + format_poly(J.s) + " sp=" + format_poly(J.sp) +
         " spp=" + format_poly(J.spp) + " u=" + format_poly(J.u) + " v=" + format_poly(J.v) +
         " w=" + format_poly(J.w);
}

inline std::string format_curve(const FieldCtx& K, const Curve& c) {
  std::string s = "characteristic 3\nextension " + std::to_string(K.m()) + "\nmodulus";
  for (int d : K.modulus()) s += " " + std::to_string(d);
  return s + "\nA " + format_poly(c.A) + "\nB " + format_poly(c.B) + "\n";
}

namespace detail {

// Cursor over one line of input, for error positions.
class Scanner {
 public:
  Scanner(std::string_view text, int line, int col0 = 1) : t_(text), line_(line), col0_(col0) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_) + ", column " + std::to_string(col0_ + int(p_)) + ": " +
                     msg);
  }
  void skip_ws() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  bool done() {
    skip_ws();
    return p_ >= t_.size();
  }
  char peek() const { return p_ < t_.size() ? t_[p_] : '\0'; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++p_;
  }
  int digit() {
    skip_ws();
    char c = peek();
    if (c == '-') fail("signed digits are not accepted; write 2 for -1");
    if (c < '0' || c > '2') fail("expected a digit 0, 1 or 2");
    ++p_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) fail("digits must lie in {0,1,2}");
    return c - '0';
  }
  long integer() {
    skip_ws();
    std::size_t s = p_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++p_;
    if (s == p_) fail("expected an integer");
    if (p_ - s > 9) fail("integer out of range");
    return std::stol(std::string(t_.substr(s, p_ - s)));
  }
  std::string word() {
    skip_ws();
    std::size_t s = p_;
    while (p_ < t_.size() && !std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
    return std::string(t_.substr(s, p_ - s));
  }

 private:
  std::string_view t_;
  std::size_t p_ = 0;
  int line_, col0_;
};

inline Fq parse_coeff(Scanner& sc, const FieldCtx& K) {
  sc.skip_ws();
  if (sc.peek() != '(') return K.from_int(sc.digit());
  sc.expect('(');
  std::vector<int> d = {sc.digit()};
  for (;;) {
    sc.skip_ws();
    if (sc.peek() == ')') break;
    sc.expect(',');
    d.push_back(sc.digit());
  }
  sc.expect(')');
  if (int(d.size()) > K.m()) sc.fail("coefficient has more than m digits");
  return K.from_digits(d);
}

inline Poly parse_poly_scan(Scanner& sc, const FieldCtx& K) {
  std::vector<Fq> c;
  if (sc.done()) sc.fail("expected a polynomial");
  while (!sc.done()) c.push_back(parse_coeff(sc, K));
  return Poly(K.zero(), std::move(c));
}

}  // namespace detail

inline Poly parse_poly(std::string_view text, const FieldCtx& K, int line = 1, int col0 = 1) {
  detail::Scanner sc(text, line, col0);
  return detail::parse_poly_scan(sc, K);
}

struct CurveFile {
  std::shared_ptr<const FieldCtx> K;
  Curve curve;
};

inline CurveFile parse_curve(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream in{std::string(text)};
    std::string l;
    int n = 0;
    while (std::getline(in, l)) {
      ++n;
      if (auto h = l.find('#'); h != std::string::npos) l.erase(h);
      bool blank = true;
      for (char c : l) blank = blank && std::isspace(static_cast<unsigned char>(c));
      if (!blank) lines.push_back({n, l});
    }
  }
  const char* keys[] = {"characteristic", "extension", "modulus", "A", "B"};
  if (lines.size() < 5) {
    int last = lines.empty() ? 1 : lines.back().first + 1;
    throw ParseError("line " + std::to_string(last) + ", column 1: expected '" + keys[lines.size()] + "'");
  }
  if (lines.size() > 5) throw ParseError("line " + std::to_string(lines[5].first) + ", column 1: unexpected input");
  std::vector<detail::Scanner> sc;
  for (int k = 0; k < 5; ++k) {
    detail::Scanner s(lines[k].second, lines[k].first);
    if (s.word() != keys[k])
      detail::Scanner(lines[k].second, lines[k].first).fail(std::string("expected '") + keys[k] + "'");
    sc.push_back(s);
  }
  if (sc[0].integer() != 3) sc[0].fail("only characteristic 3 is supported");
  if (!sc[0].done()) sc[0].fail("unexpected input");
  long m = sc[1].integer();
  if (m < 1 || m > 64) sc[1].fail("extension degree must lie in 1..64");
  if (!sc[1].done()) sc[1].fail("unexpected input");
  std::vector<int> mod;
  while (!sc[2].done()) mod.push_back(sc[2].digit());
  if (long(mod.size()) != m + 1) sc[2].fail("modulus needs exactly m + 1 digits");
  std::shared_ptr<const FieldCtx> K;
  try {
    K = FieldCtx::make(mod);
  } catch (const DomainError& e) {
    sc[2].fail(e.what());
  }
  Poly A = detail::parse_poly_scan(sc[3], *K);
  Poly B = detail::parse_poly_scan(sc[4], *K);
  return {K, Curve{A, B}};
}

// "ideal d=POLY s=POLY ..." with d, s, sp, spp defaulting to 1 and u, v, w
// to 0. A value runs up to the next "key=" token.
inline Ideal parse_ideal(std::string_view text, const FieldCtx& K) {
  detail::Scanner head(text, 1);
  if (head.word() != "ideal") head.fail("expected 'ideal'");
  const char* names[] = {"d", "s", "sp", "spp", "u", "v", "w"};
  Poly vals[7];
  bool seen[7] = {};
  for (int k = 0; k < 7; ++k) vals[k] = k < 4 ? poly_one(K) : poly_zero(K);
  std::size_t p = text.find("ideal") + 5;
  for (;;) {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    if (p >= text.size()) break;
    std::size_t eq = text.find('=', p);
    detail::Scanner at(text.substr(p), 1, int(p) + 1);
    if (eq == std::string_view::npos) at.fail("expected key=value");
    std::string key(text.substr(p, eq - p));
    int idx = -1;
    for (int k = 0; k < 7; ++k)
      if (key == names[k]) idx = k;
    if (idx < 0) at.fail("unknown ideal field '" + key + "'");
    if (seen[idx]) at.fail("repeated ideal field '" + key + "'");
    seen[idx] = true;
    // The value ends where the next key begins.
    std::size_t end = text.size();
    std::size_t nxt = text.find('=', eq + 1);
    if (nxt != std::string_view::npos) {
      std::size_t b = nxt;
      while (b > eq + 1 && !std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
      end = b;
    }
    vals[idx] = parse_poly(text.substr(eq + 1, end - eq - 1), K, 1, int(eq) + 2);
    p = end;
  }
  try {
    return make_ideal(vals[1], vals[2], vals[3], vals[4], vals[5], vals[6], vals[0]);
  } catch (const InvariantError& e) {
    throw ParseError(std::string("ideal literal: ") + e.what());
  }
}

}  // namespace cff
