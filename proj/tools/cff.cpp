// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

// cff: invariants, places, ideal arithmetic and class group reduction for
// cubic function fields T^3 - A T + B over GF(3^m).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "cff/cff.hpp"

namespace {

using namespace cff;

// Status for verify-example when the computation ran but differs.
constexpr int kMismatch = 1;

void out(const std::string& key, const std::string& value) { std::cout << key << " = " << value << "\n"; }

CurveFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_curve(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

OrderData order_of(const CurveFile& cf) {
  try {
    return compute_order_data(cf.curve, cf.K);
  } catch (const DomainError& e) {
    throw DomainError(std::string(e.what()) + "; run 'cff standardize' first");
  }
}

const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::wild: return "wild";
    case Criterion::tame: return "tame";
    case Criterion::none: break;
  }
  return "none";
}

const char* kind_name(PrimeKind k) {
  switch (k) {
    case PrimeKind::ramified: return "ramified";
    case PrimeKind::tame_single: return "tame_single";
    case PrimeKind::tame_double: return "tame_double";
    case PrimeKind::degree_one: return "degree_one";
    case PrimeKind::degree_two: return "degree_two";
    case PrimeKind::inert: return "inert";
  }
  return "?";
}

std::string ef_text(const SplittingType& s) {
  std::string t;
  for (auto [e, f] : s.ef()) t += (t.empty() ? "" : " ") + std::string("(") + std::to_string(e) + "," + std::to_string(f) + ")";
  return t;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_standardize(const std::string& path) {
  CurveFile cf = load(path);
  Standardized s = standardize(cf.curve);
  out("A", format_poly(s.curve.A));
  out("B", format_poly(s.curve.B));
  out("criterion", criterion_name(s.crit));
  out("steps", std::to_string(s.transcript.size()));
  int n = 0;
  for (const auto& st : s.transcript) {
    std::string key = "step." + std::to_string(++n);
    if (auto* r = std::get_if<RemoveStep>(&st)) {
      out(key, "remove Q=" + format_poly(r->Q) + " i=" + format_poly(r->i));
    } else if (auto* h = std::get_if<ShiftStep>(&st)) {
      out(key, "shift c=" + format_fq(h->c) + " n=" + std::to_string(h->n));
    } else if (auto* d = std::get_if<DepressStep>(&st)) {
      out(key, d->N ? "depress N=" + format_poly(*d->N) : std::string("depress"));
    }
  }
  return 0;
}

int cmd_invariants(const std::string& path) {
  CurveFile cf = load(path);
  OrderData od = order_of(cf);
  out("A", format_poly(od.A()));
  out("B", format_poly(od.B()));
  out("criterion", criterion_name(od.crit));
  out("I", format_poly(od.I));
  out("i", format_poly(od.i));
  out("E", format_poly(od.E));
  out("F", format_poly(od.F));
  out("Delta", format_poly(od.Delta));
  out("genus", std::to_string(od.genus));
  out("infinite", split_name(od.infinite.tag));
  out("infinite.ef", ef_text(od.infinite));
  out("artin_schreier", bool_text(is_artin_schreier(od.curve)));
  out("nonsingular", bool_text(detect_singularity(od.curve).nonsingular));
  out("distinguished_ok", bool_text(od.distinguished_ok));
  return 0;
}

int cmd_split(const std::string& path, const std::string& place) {
  CurveFile cf = load(path);
  OrderData od = order_of(cf);
  out("place", place);
  if (place == "inf") {
    out("type", split_name(od.infinite.tag));
    out("ef", ef_text(od.infinite));
    return 0;
  }
  Poly P = parse_poly(place, *cf.K);
  if (P.deg() < 1 || !P.lc().is_one()) throw DomainError("place must be a monic irreducible polynomial");
  SplittingType s = split_finite(P, od);
  out("type", split_name(s.tag));
  out("ef", ef_text(s));
  out("prime_type", prime_type_name(prime_type(P, od)));
  int n = 0;
  for (const auto& f : primes_above(P, od)) {
    std::string key = "prime." + std::to_string(++n);
    out(key + ".kind", kind_name(f.prime.kind));
    out(key + ".e", std::to_string(f.e));
    out(key + ".basis", format_ideal(prime_basis(P, f.prime, od)));
  }
  return 0;
}

int cmd_ideal(const std::string& path, const std::string& op, const std::vector<std::string>& args) {
  CurveFile cf = load(path);
  OrderData od = order_of(cf);
  std::size_t want = op == "inv" ? 1 : 2;
  if (args.size() != want) throw ParseError("'" + op + "' takes " + std::to_string(want) + " ideal literal(s)");
  std::vector<Ideal> J;
  for (const auto& a : args) {
    Ideal x = parse_ideal(a, *cf.K);
    if (!is_ideal(x, od)) throw DomainError("ideal literal is not closed under rho and omega: " + a);
    J.push_back(x);
  }
  Ideal r;
  if (op == "mul") {
    Product p = ideal_mul(J[0].primitive(), J[1].primitive(), od);
    r = with_content(p.J, p.D * J[0].d * J[1].d);
  } else if (op == "inv") {
    r = ideal_invert(J[0], od);
  } else {
    Product p = ideal_divide_nonprimitive(J[0].d, J[0].primitive(), J[1], od);
    r = with_content(p.J, p.D);
  }
  out("result", format_ideal(r));
  out("norm", format_poly(ideal_norm(r)));
  return 0;
}

int cmd_compred(const std::string& path, const std::string& a, const std::string& b) {
  CurveFile cf = load(path);
  OrderData od = order_of(cf);
  require_distinguished(od);
  Ideal I1 = parse_ideal(a, *cf.K), I2 = parse_ideal(b, *cf.K);
  for (const Ideal* x : {&I1, &I2})
    if (!is_ideal(*x, od)) throw DomainError("ideal literal is not closed under rho and omega");
  Ideal r = comp_red(I1, I2, od);
  out("result", format_ideal(r));
  out("norm_degree", std::to_string(ideal_norm(r).deg()));
  out("genus", std::to_string(od.genus));
  return 0;
}

int cmd_verify_example() {
  golden::Report r = golden::run();
  for (const auto& it : r.items) {
    out(it.key, it.got);
    if (!it.match()) out(it.key + ".expected", it.expected);
  }
  for (const auto& [key, ok] : r.printed_is_ideal) out("printed." + key + ".is_ideal", bool_text(ok));
  int bad = r.mismatches();
  out("mismatches", std::to_string(bad));
  out("result", bad == 0 ? "match" : "mismatch");
  return bad == 0 ? 0 : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic function fields of characteristic 3"};
  app.require_subcommand(1);
  std::string file, place, op, lit1, lit2;
  std::vector<std::string> lits;

  auto* st = app.add_subcommand("standardize", "Standard model and transformation transcript");
  st->add_option("FILE", file, "curve file")->required();
  auto* inv = app.add_subcommand("invariants", "Index, discriminant, genus and infinite place");
  inv->add_option("FILE", file, "curve file")->required();
  auto* sp = app.add_subcommand("split", "Splitting of a place and bases of the primes above it");
  sp->add_option("FILE", file, "curve file")->required();
  sp->add_option("--place", place, "monic irreducible polynomial, or inf")->required();
  auto* id = app.add_subcommand("ideal", "Ideal multiplication, inversion and division");
  id->add_option("FILE", file, "curve file")->required();
  id->add_option("OP", op, "mul, inv or div")->required()->check(CLI::IsMember({"mul", "inv", "div"}));
  id->add_option("IDEAL", lits, "ideal literals")->required();
  auto* cr = app.add_subcommand("compred", "Distinguished ideal in the class of a product");
  cr->add_option("FILE", file, "curve file")->required();
  cr->add_option("IDEAL1", lit1, "ideal literal")->required();
  cr->add_option("IDEAL2", lit2, "ideal literal")->required();
  auto* ve = app.add_subcommand("verify-example", "Recompute the GF(3^10) worked example and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : int(ErrorKind::parse);
  }

  try {
    if (*st) return cmd_standardize(file);
    if (*inv) return cmd_invariants(file);
    if (*sp) return cmd_split(file, place);
    if (*id) return cmd_ideal(file, op, lits);
    if (*cr) return cmd_compred(file, lit1, lit2);
    if (*ve) return cmd_verify_example();
  } catch (const Error& e) {
    std::cout.flush();
    std::cerr << "error: " << e.tag() << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "error: internal_error: " << e.what() << "\n";
    return int(ErrorKind::internal);
  }
  return 0;
}
