// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance runner. Prints one line per criterion:
//
//   criterion N: PASS|FAIL <summary> [<seconds>s]
//
// and exits nonzero when any selected criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace cff;
using namespace cff::testing;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> detail;

  void fail(const std::string& why) {
    if (pass || detail.size() < 12) detail.push_back(why);
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

struct Options {
  std::string cli;
  std::string samples;
};

// Golden worked example over GF(3^10).
Outcome golden_example(const Options&) {
  Outcome o;
  golden::Report r = golden::run();
  const char* keys[] = {"genus",   "artin_schreier", "infinite", "step1.D", "step1.s", "step1.u", "step1.v",
                        "step3.a", "step3.b",        "step3.c",  "step4",   "step5.s", "step5.u", "step5.v",
                        "step5.equals_I1_squared"};
  int matched = 0, total = 0;
  for (const char* k : keys) {
    const golden::Item* it = r.find(k);
    ++total;
    if (!it) {
      o.fail(std::string("missing item ") + k);
      continue;
    }
    if (it->match()) {
      ++matched;
    } else {
      o.fail(it->key + ": got " + it->got + ", printed " + it->expected);
    }
  }
  for (const auto& [key, ok] : r.printed_is_ideal)
    if (!ok) o.detail.push_back("printed " + key + " is not closed under rho and omega");
  o.summary = std::to_string(matched) + "/" + std::to_string(total) + " printed values reproduced";
  return o;
}

Outcome splitting(const Options&) {
  Outcome o;
  long places = 0, curves = 0;
  for (int m : {1, 2, 3}) {
    auto K = field(m);
    std::mt19937_64 rng(1000 + m);
    std::vector<Poly> P = monic_irreducibles(*K, 1);
    for (const auto& p : monic_irreducibles(*K, 2)) P.push_back(p);
    for (int c = 0; c < 200; ++c) {
      OrderData od = random_curve(K, rng);
      ++curves;
      for (const auto& p : P) {
        ++places;
        if (split_finite(p, od).tag != oracle_split(p, od).tag)
          o.fail("q=3^" + std::to_string(m) + " A=" + format_poly(od.A()) + " B=" + format_poly(od.B()) +
                 " P=" + format_poly(p));
      }
      if (split_infinite(od.curve).tag != oracle_split_infinite(od.curve).tag)
        o.fail("infinite place, A=" + format_poly(od.A()) + " B=" + format_poly(od.B()));
    }
  }
  o.summary = std::to_string(curves) + " curves, " + std::to_string(places) + " finite places";
  return o;
}

Outcome ideal_arithmetic(const Options&) {
  Outcome o;
  int pairs = 0;
  std::set<int> types;
  for (int m : {1, 2}) {
    auto K = field(m);
    std::mt19937_64 rng(2000 + m);
    int done = 0;
    for (int c = 0; done < 500; ++c) {
      int wish = c % 8;
      OrderData od = wish ? typed_curve(K, {bool(wish & 1), bool(wish & 2), bool(wish & 4)}, rng)
                          : random_curve(K, rng);
      for (int t = 0; t < 20 && done < 500; ++t, ++done) {
        Ideal I1 = random_ideal(od, rng, 6), I2 = random_ideal(od, rng, 6);
        for (const Ideal* J : {&I1, &I2})
          if (J->s.deg() > 0)
            for (const auto& [P, e] : factor(J->s)) types.insert(int(prime_type(P, od)));
        std::string tag = " on A=" + format_poly(od.A()) + " B=" + format_poly(od.B()) + ": " +
                          format_ideal(I1) + " , " + format_ideal(I2);
        try {
          Ideal want = oracle_ideal_mul(I1, I2, od);
          Product p = ideal_mul(I1, I2, od);
          Ideal got = with_content(p.J, p.D);
          o.expect(got == want, "mul" + tag);
          o.expect(ideal_norm(got) == (ideal_norm(I1) * ideal_norm(I2)).monic(), "norm" + tag);
          Ideal inv = ideal_invert(I1, od);
          o.expect(oracle_ideal_mul(I1, inv, od) == principal_poly(I1.s), "invert" + tag);
          if (want.d.is_one()) {
            o.expect(ideal_divide(want, I1, od) == I2, "divide" + tag);
          } else {
            Product q = ideal_divide_nonprimitive(want.d, want.primitive(), I1, od);
            o.expect(with_content(q.J, q.D) == I2, "divide" + tag);
          }
        } catch (const Error& e) {
          o.fail(std::string("exception ") + e.what() + tag);
        }
        ++pairs;
      }
    }
  }
  o.expect(types.size() == 4, "not every prime type occurred");
  o.summary = std::to_string(pairs) + " pairs, prime types seen " + std::to_string(types.size()) + "/4";
  return o;
}

Outcome prime_powers(const Options&) {
  Outcome o;
  int checks = 0;
  std::set<int> types;
  for (int m : {1, 2}) {
    auto K = field(m);
    std::mt19937_64 rng(3000 + m);
    std::vector<Poly> places = monic_irreducibles(*K, 1);
    if (m == 1)
      for (const auto& p : monic_irreducibles(*K, 2)) places.push_back(p);
    for (int c = 0; c < 8; ++c) {
      OrderData od = c == 0 ? random_curve(K, rng) : typed_curve(K, {true, true, true}, rng);
      for (const auto& P : places) {
        auto above = primes_above(P, od);
        PrimeType t = prime_type(P, od);
        types.insert(int(t));
        std::string tag = " P=" + format_poly(P) + " type " + prime_type_name(t);
        for (const auto& f : above) {
          Ideal p = prime_basis(P, f.prime, od);
          for (int i = 1; i <= 4; ++i, ++checks)
            o.expect(prime_power_basis(P, f.prime, i, od) == oracle_power(p, i, od), "p^" + std::to_string(i) + tag);
        }
        for (std::size_t a = 0; a < above.size(); ++a) {
          for (std::size_t b = 0; b < above.size(); ++b) {
            if (a == b) continue;
            const LocalPrime &pa = above[a].prime, &pb = above[b].prime;
            Ideal ia = prime_basis(P, pa, od), ib = prime_basis(P, pb, od);
            for (int i = 0; i <= 4; ++i)
              for (int j = 0; i + j <= 4; ++j, ++checks)
                o.expect(prime_power_basis(P, pa, pb, i, j, od) ==
                             oracle_ideal_mul(oracle_power(ia, i, od), oracle_power(ib, i + j, od), od),
                         "p^" + std::to_string(i) + " q^" + std::to_string(i + j) + tag);
          }
        }
      }
    }
  }
  o.expect(types.size() == 4, "not every prime type occurred");
  o.summary = std::to_string(checks) + " bases, prime types seen " + std::to_string(types.size()) + "/4";
  return o;
}

Outcome min_element_optimal(const Options&) {
  Outcome o;
  auto K = field(1);
  std::mt19937_64 rng(4000);
  int n = 0;
  for (int c = 0; n < 100; ++c) {
    OrderData od = typed_curve(K, {c % 3 == 1, false, c % 3 == 2}, rng, true);
    for (int t = 0; t < 10 && n < 100; ++t, ++n) {
      Ideal J = random_ideal(od, rng, 3);
      Element e = min_element(J, od);
      int got = element_norm(e, od).deg(), want = oracle_min_norm(J, 3, od);
      o.expect(ideal_member(e, J), "not a member: " + format_ideal(J));
      o.expect(got == want, "deg " + std::to_string(got) + " vs " + std::to_string(want) + ": " + format_ideal(J));
    }
  }
  o.summary = std::to_string(n) + " ideals";
  return o;
}

Outcome class_group_laws(const Options&) {
  Outcome o;
  int n = 0;
  for (int m : {1, 2}) {
    auto K = field(m);
    std::mt19937_64 rng(5000 + m);
    for (int c = 0; c < 5; ++c) {
      OrderData od = typed_curve(K, {c % 2 == 1, false, c >= 3}, rng, true);
      Ideal unit = unit_ideal(od);
      for (int t = 0; t < 10; ++t, ++n) {
        Ideal X = random_ideal(od, rng, 5), Y = random_ideal(od, rng, 5), Z = random_ideal(od, rng, 5);
        std::string tag = ": " + format_ideal(X) + " , " + format_ideal(Y) + " , " + format_ideal(Z);
        try {
          Ideal xy = comp_red(X, Y, od);
          o.expect(xy == comp_red(Y, X, od), "commutativity" + tag);
          Ideal l = comp_red(xy, Z, od), r = comp_red(X, comp_red(Y, Z, od), od);
          o.expect(l == r, "associativity" + tag);
          Ideal x = comp_red(X, unit, od);
          o.expect(comp_red(x, unit, od) == x, "idempotence" + tag);
          for (const Ideal* J : {&xy, &l, &x})
            o.expect(J->is_primitive() && ideal_norm(*J).deg() <= od.genus, "not reduced" + tag);
        } catch (const Error& e) {
          o.fail(std::string("exception ") + e.what() + tag);
        }
      }
    }
  }
  o.summary = std::to_string(n) + " triples";
  return o;
}

int run_cli(const Options& opt, const std::string& args) {
  std::string cmd = "\"" + opt.cli + "\" " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Outcome index_nine(const Options& opt) {
  Outcome o;
  auto K = field(1);
  Poly A = parse_poly("2 1 0 1 1", *K), B = parse_poly("1 0 1 0 1 1 1 0 2", *K);
  OrderData od = compute_order_data({A, B}, K);
  Poly I = parse_poly("2 1 1", *K) * parse_poly("1 0 1", *K);
  Poly i_printed = parse_poly("0 0 1 1", *K);
  o.expect(od.I == I, "I = " + format_poly(od.I));
  o.expect(od.i == i_printed, "i = " + format_poly(od.i) + ", printed " + format_poly(i_printed) +
                                  "; I^2 divides i^3 - iA + B for the computed i: " +
                                  ((I * I).divides(od.i * od.i * od.i - od.i * A + B) ? "yes" : "no") +
                                  ", for the printed i: " +
                                  ((I * I).divides(i_printed * i_printed * i_printed - i_printed * A + B) ? "yes" : "no"));
  o.expect((od.i * od.i * od.i - od.i * A + B).deg() == 9, "deg(i^3 - iA + B) != 9");
  o.expect(!od.distinguished_ok, "distinguished_ok is true");
  bool threw = false;
  try {
    Ideal u = unit_ideal(od);
    comp_red(u, u, od);
  } catch (const ApplicabilityError&) {
    threw = true;
  }
  o.expect(threw, "comp_red did not raise the applicability error");
  if (opt.cli.empty() || opt.samples.empty()) {
    o.fail("CLI path or samples directory not given");
  } else {
    int rc = run_cli(opt, "compred \"" + opt.samples + "/index_nine.curve\" ideal ideal");
    o.expect(rc == 3, "CLI exit status " + std::to_string(rc));
  }
  int passed = 6 - int(o.detail.size());
  o.summary = std::to_string(passed) + "/6 items";
  return o;
}

Outcome standard_form(const Options&) {
  Outcome o;
  long total = 0, rejected = 0;
  for (int m : {1, 2}) {
    auto K = field(m);
    std::mt19937_64 rng(6000 + m);
    int done = 0;
    while (done < 1000) {
      GeneralCubic g{random_nonzero(*K, 3, rng), random_poly(K->zero(), 3, rng), random_poly(K->zero(), 4, rng),
                     random_nonzero(*K, 7, rng)};
      Standardized s;
      try {
        s = standardize(g);
      } catch (const DomainError&) {
        ++rejected;  // degenerate or reducible input
        continue;
      }
      ++done;
      ++total;
      const Curve& c = s.curve;
      int da = c.A.deg(), db = c.B.deg();
      bool wild = db % 3 != 0 && 2 * db > 3 * da, tame = 2 * db <= 3 * da;
      std::string tag = ": A=" + format_poly(c.A) + " B=" + format_poly(c.B);
      o.expect(wild != tame, "criteria" + tag);
      o.expect(!remove_singular_factor(c).has_value(), "removable factor left" + tag);
      Standardized again = standardize(c);
      o.expect(again.curve == c && again.transcript.empty(), "not idempotent" + tag);
    }
  }
  o.summary = std::to_string(total) + " cubics (" + std::to_string(rejected) + " degenerate draws skipped)";
  return o;
}

struct Check {
  int id;
  double limit;  // seconds
  std::function<Outcome(const Options&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> which;
  Options opt;
  app.add_option("--criterion", which, "criteria to run (default: all)")->check(CLI::Range(1, 8));
  app.add_option("--cli", opt.cli, "path of the cff executable");
  app.add_option("--samples", opt.samples, "samples directory");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Check> all = {
      {1, 1, golden_example},      {2, 120, splitting},        {3, 300, ideal_arithmetic},
      {4, 300, prime_powers},      {5, 300, min_element_optimal}, {6, 300, class_group_laws},
      {7, 60, index_nine},         {8, 120, standard_form},
  };
  if (which.empty())
    for (const auto& c : all) which.push_back(c.id);

  bool ok = true;
  for (int id : which) {
    const Check& c = all[std::size_t(id - 1)];
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(opt);
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) o.fail("time " + std::to_string(secs) + "s exceeds " + std::to_string(int(c.limit)) + "s");
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.summary << " ["
         << secs << "s]";
    std::cout << line.str() << "\n";
    for (const auto& d : o.detail) std::cout << "  " << d << "\n";
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
