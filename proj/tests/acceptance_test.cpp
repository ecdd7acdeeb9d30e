// Acceptance suite: one [PASS]/[FAIL] line per criterion, exact checks only
// (tolerance zero everywhere).  Documented discrepancies of the source
// formulas are printed as notes and double-checked, never silently skipped.
// Exit status is the number of failed criteria.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qca/sl2.hpp"
#include "reduce_oracle.hpp"
#include "test_util.hpp"

using namespace qca;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& text) { g_notes.push_back(text); }

void run(int index, const std::string& name, bool (*fn)(std::string&)) {
  g_notes.clear();
  std::string detail;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  const double secs = std::chrono::duration<double>(t1 - t0).count();
  if (!ok) ++g_failures;
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << index << " ("
            << name << "): " << detail << "  [" << std::fixed
            << std::setprecision(2) << secs << "s]\n";
  for (const auto& n : g_notes) std::cout << "       note: " << n << "\n";
  std::cout.flush();
}

TorusElement basis(const SkewForm& f, ExponentVector e) {
  return TorusElement::monomial(f, std::move(e));
}

// ---------------------------------------------------------------------------
// 1. Compatibility: d = (1,1) at rank two with the displayed product
//    B~^T Lambda = (D | 0), and every multiplier 1 for n = 1..12.
bool criterion_compatibility(std::string& detail) {
  const Sl2Instance i2 = build_sl2(2);
  bool ok = i2.pair.d(0) == 1 && i2.pair.d(1) == 1;

  const SkewForm& lam = i2.pair.form();
  const ExchangeMatrix& b = i2.pair.b();
  const std::vector<std::vector<long long>> expected{{1, 0, 0}, {0, 1, 0}};
  for (int col = 0; col < b.cols(); ++col) {
    for (int j = 0; j < lam.rank(); ++j) {
      long long sum = 0;
      for (int i = 0; i < b.rows(); ++i) {
        sum += static_cast<long long>(b.entry_at(i, col)) * lam.entry(i, j);
      }
      ok = ok && sum == expected[static_cast<std::size_t>(col)]
                                [static_cast<std::size_t>(j)];
    }
  }

  int certified = 0;
  for (int n = 1; n <= 12; ++n) {
    const Sl2Instance inst = build_sl2(n);
    bool all_one = true;
    for (int k = 0; k < n; ++k) all_one = all_one && inst.pair.d(k) == 1;
    if (all_one) ++certified;
  }
  ok = ok && certified == 12;
  detail = "d = (1,1) with B~^T Lambda = (I | 0) at rank 2; all multipliers 1 for n = 1..12";
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Worked example: the sequence mu_1, mu_1 mu_2, mu_1 mu_2 mu_1 from the
//    initial rank-two seed reproduces the displayed variables term for term.
bool criterion_worked_example(std::string& detail) {
  const Sl2Instance inst = build_sl2(2);
  const SkewForm& f = inst.pair.form();
  const ExponentVector e0{1, 0, 0};
  const ExponentVector e1{0, 1, 0};
  const ExponentVector e2{0, 0, 1};
  const auto q = [](int half) { return HalfPowerLaurent::v_pow(half); };

  // Y_1' = Y_1^{-1} + q^{-1/2} Y_1^{-1} Y_2
  const TorusElement y1p = ordered_product(f, {{e0, -1}}) +
                           q(-1) * ordered_product(f, {{e0, -1}, {e1, 1}});
  // Y_2' = q^{1/2} Y_3 Y_1^{-1} Y_2^{-1} + Y_2^{-1} + Y_1^{-1} Y_3
  const TorusElement y2p =
      q(1) * ordered_product(f, {{e2, 1}, {e0, -1}, {e1, -1}}) +
      ordered_product(f, {{e1, -1}}) +
      ordered_product(f, {{e0, -1}, {e2, 1}});
  // Y_1'' = Y_3 Y_2^{-1} + q^{-1/2} Y_1 Y_2^{-1}
  const TorusElement y1pp = ordered_product(f, {{e2, 1}, {e1, -1}}) +
                            q(-1) * ordered_product(f, {{e0, 1}, {e1, -1}});

  const QuantumSeed s1 = inst.initial.mutate(0);
  const QuantumSeed s2 = s1.mutate(1);
  const QuantumSeed s3 = s2.mutate(0);

  bool ok = s1.var(0) == y1p && s1.var(1) == basis(f, e1) && s1.var(2) == basis(f, e2);
  ok = ok && s2.var(1) == y2p && s2.var(0) == y1p && s2.var(2) == basis(f, e2);
  ok = ok && s3.var(0) == y1pp && s3.var(1) == y2p && s3.var(2) == basis(f, e2);
  // Retracing the sequence returns to the initial seed.
  ok = ok && s3.mutate(0).mutate(1).mutate(0) == inst.initial;

  detail = "mu_1, mu_1 mu_2, mu_1 mu_2 mu_1 reproduce Y_1', Y_2', Y_1'' term for term";
  return ok;
}

// ---------------------------------------------------------------------------
// 3. Presentation: for n = 1..6 every generator pair satisfies the adjacent
//    relation or q-commutation with exponent (-1)^{(l1-l2)/2}.  The measured
//    exponents refute the half-difference rule q^{(l1-l2)/2}; documented.
bool criterion_presentation(std::string& detail) {
  bool ok = true;
  int total_checks = 0;
  int total_mismatches = 0;
  std::string example;
  for (int n = 1; n <= 6; ++n) {
    const PresentationReport rep = verify_presentation(build_sl2(n));
    ok = ok && rep.all_pass;
    ok = ok && rep.checks.size() ==
                   static_cast<std::size_t>(n * (n + 1) / 2);
    // Every non-adjacent pair must refute the half-difference exponent.
    ok = ok && rep.half_difference_mismatches == n * (n - 1) / 2;
    total_checks += static_cast<int>(rep.checks.size());
    total_mismatches += rep.half_difference_mismatches;
    if (example.empty()) {
      for (const auto& c : rep.checks) {
        if (c.kind == "q-commute" && !c.matches_half_difference) {
          std::ostringstream os;
          os << "X_" << c.l1 << " X_" << c.l2 << " = q^"
             << *c.measured_q_exponent << " X_" << c.l2 << " X_" << c.l1
             << ", but the half-difference rule predicts q^"
             << c.half_difference_exponent;
          example = os.str();
        }
      }
    }
  }
  std::ostringstream os;
  os << total_checks << " relation checks pass for n = 1..6";
  detail = os.str();
  std::ostringstream ns;
  ns << total_mismatches
     << " q-commuting pairs refute the plain half-difference exponent; e.g. "
     << example;
  note(ns.str());
  return ok;
}

// ---------------------------------------------------------------------------
// 4. Generation: the corrected identities
//      Y_2 = q^{-1/2} (X_{2n-2} X_{2n} - 1)
//      Y_3 = q^{-1/2} (X_{2n-4} X_{2n-2} X_{2n} - X_{2n-4} - X_{2n})
//    re-expand exactly for n = 2..6 (the printed variants with q^{1/2} and
//    with + X_{2n} fail; both are rechecked and documented).  For n <= 4
//    every enumerated cluster variable is expressed in the generators and
//    re-expands exactly.
bool criterion_generation(std::string& detail) {
  bool ok = true;
  bool verbatim_y2_fails_everywhere = true;
  bool verbatim_y3_fails_everywhere = true;
  for (int n = 2; n <= 6; ++n) {
    const Sl2Instance inst = build_sl2(n);
    const SkewForm& f = inst.pair.form();
    const std::vector<TorusElement> x = generators_X(inst);
    const auto nn = static_cast<std::size_t>(n);
    const TorusElement one = TorusElement::scalar(f, HalfPowerLaurent::one());

    const TorusElement y2 = basis(f, unit_vector(n + 1, 1));
    const TorusElement y3 = basis(f, unit_vector(n + 1, 2));
    const TorusElement rhs2 =
        HalfPowerLaurent::v_pow(-1) * (x[nn - 1] * x[nn] - one);
    const TorusElement rhs3 =
        HalfPowerLaurent::v_pow(-1) *
        (x[nn - 2] * x[nn - 1] * x[nn] - x[nn - 2] - x[nn]);
    ok = ok && rhs2 == y2 && rhs3 == y3;

    const TorusElement verbatim2 =
        HalfPowerLaurent::v_pow(1) * (x[nn - 1] * x[nn] - one);
    const TorusElement verbatim3 =
        HalfPowerLaurent::v_pow(-1) *
        (x[nn - 2] * x[nn - 1] * x[nn] - x[nn - 2] + x[nn]);
    verbatim_y2_fails_everywhere = verbatim_y2_fails_everywhere && verbatim2 != y2;
    verbatim_y3_fails_everywhere = verbatim_y3_fails_everywhere && verbatim3 != y3;

    // The recurrence-generated identities for every initial variable.
    for (const auto& id : express_Y_in_X(inst)) ok = ok && id.verified;
  }
  ok = ok && verbatim_y2_fails_everywhere && verbatim_y3_fails_everywhere;
  note("the same identities with q^{1/2} in place of q^{-1/2}, or + X_{2n} in "
       "place of - X_{2n}, fail for every n = 2..6 (checked)");

  std::size_t expressed = 0;
  std::size_t variables = 0;
  for (int n = 1; n <= 4; ++n) {
    const Sl2Instance inst = build_sl2(n);
    const GrothTorusMap map = make_groth_map(inst);
    const ExchangeGraph g = enumerate_exchange_graph(inst.initial, 100000);
    GeneratorSpan span(map);
    span.extend_to_length(static_cast<std::size_t>(n) + 1);
    for (const auto& var : g.distinct_variables) {
      ++variables;
      auto expr = span.express(var);
      if (!expr) {
        span.extend_to_length(static_cast<std::size_t>(n) + 2);
        expr = span.express(var);
      }
      if (expr && map(*expr) == var) ++expressed;
    }
  }
  ok = ok && expressed == variables;
  std::ostringstream os;
  os << "identities hold as corrected for n = 2..6; " << expressed << "/"
     << variables << " cluster variables for n <= 4 expressed in the "
     << "generators and re-expanded exactly";
  detail = os.str();
  return ok;
}

// ---------------------------------------------------------------------------
// 5. Exchange-graph counts: (n+1)(n+2)/2 distinct variables and Catalan
//    cluster counts 2, 5, 14, 42, 132 for n = 1..5.
bool criterion_counts(std::string& detail) {
  const std::vector<std::size_t> catalan{2, 5, 14, 42, 132};
  bool ok = true;
  std::ostringstream seen;
  for (int n = 1; n <= 5; ++n) {
    const Sl2Instance inst = build_sl2(n);
    const ExchangeGraph g = enumerate_exchange_graph(inst.initial, 100000);
    const std::size_t vars_expected =
        static_cast<std::size_t>((n + 1) * (n + 2) / 2);
    ok = ok && !g.truncated;
    ok = ok && g.nodes.size() == catalan[static_cast<std::size_t>(n - 1)];
    ok = ok && g.distinct_variables.size() == vars_expected;
    // Handshake count: every cluster has n neighbors.
    ok = ok && g.edges.size() == g.nodes.size() * static_cast<std::size_t>(n) / 2;
    if (n > 1) seen << ", ";
    seen << g.nodes.size();
  }
  // Truncation is reported, not silently ignored.
  const ExchangeGraph t = enumerate_exchange_graph(build_sl2(3).initial, 3);
  ok = ok && t.truncated && t.nodes.size() <= 3;
  detail = "cluster counts " + seen.str() +
           " with (n+1)(n+2)/2 distinct variables for n = 1..5";
  return ok;
}

// ---------------------------------------------------------------------------
// 6. Property suites, 1000 random cases each, all exact.
bool criterion_properties(std::string& detail) {
  bool ok = true;
  std::ostringstream failed;
  const auto sub = [&](const char* name, bool pass) {
    if (!pass) {
      ok = false;
      if (failed.tellp() > 0) failed << ", ";
      failed << name;
    }
  };

  // Mutation involutivity on quantum seeds (1000 mutate-undo pairs).
  {
    auto rng = testutil::make_rng(0xA1);
    bool pass = true;
    for (int c = 0; c < 1000; ++c) {
      const int n = 1 + static_cast<int>(c % 3);
      const Sl2Instance inst = build_sl2(n);
      QuantumSeed s = inst.initial;
      std::uniform_int_distribution<int> pick(0, n - 1);
      const int hops = static_cast<int>(c % 3);
      for (int h = 0; h < hops; ++h) s = s.mutate(pick(rng));
      const int k = pick(rng);
      pass = pass && s.mutate(k).mutate(k) == s;
    }
    sub("mutation involutivity", pass);
  }

  // Sign independence and compatibility preservation of pair mutation.
  {
    auto rng = testutil::make_rng(0xB2);
    bool pass = true;
    for (int c = 0; c < 1000; ++c) {
      const int n = 1 + static_cast<int>(c % 4);
      CompatiblePair p = build_sl2(n).pair;
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int h = 0; h < 2; ++h) p = p.mutated(pick(rng));
      const int k = pick(rng);
      const CompatiblePair plus = p.mutated(k, +1);   // re-certified inside
      const CompatiblePair minus = p.mutated(k, -1);
      pass = pass && plus == minus && plus.multipliers() == p.multipliers();
    }
    sub("pair mutation sign independence and compatibility preservation", pass);
  }

  // Associativity of the torus product.
  {
    auto rng = testutil::make_rng(0xC3);
    bool pass = true;
    for (int c = 0; c < 1000; ++c) {
      const SkewForm f = testutil::random_skew_form(rng, 3);
      const TorusElement a = testutil::random_torus_element(rng, f, 3);
      const TorusElement b = testutil::random_torus_element(rng, f, 3);
      const TorusElement d = testutil::random_torus_element(rng, f, 3);
      pass = pass && (a * b) * d == a * (b * d);
    }
    sub("torus associativity", pass);
  }

  // Associativity of the presented-algebra product.
  {
    auto rng = testutil::make_rng(0xD4);
    bool pass = true;
    for (int c = 0; c < 1000; ++c) {
      const int n = 1 + static_cast<int>(c % 3);
      std::uniform_int_distribution<std::size_t> len(0, 3);
      const GrothElement a = reduce(n, testutil::random_even_word(rng, n, len(rng)));
      const GrothElement b = reduce(n, testutil::random_even_word(rng, n, len(rng)));
      const GrothElement d = reduce(n, testutil::random_even_word(rng, n, len(rng)));
      pass = pass && (a * b) * d == a * (b * d);
    }
    sub("presented-algebra associativity", pass);
  }

  // Exact division round trip in the torus.
  {
    auto rng = testutil::make_rng(0xE5);
    bool pass = true;
    for (int c = 0; c < 1000; ++c) {
      const SkewForm f = testutil::random_skew_form(rng, 3);
      const TorusElement a = testutil::random_torus_element(rng, f, 3);
      // Unit-leading divisor: a dominating monomial plus a small tail.
      std::uniform_int_distribution<int> sign(0, 1);
      std::uniform_int_distribution<int> halfpow(-3, 3);
      // Grade 12 dominates every tail monomial (entries bounded by 3).
      TorusElement d = TorusElement::monomial(
          f, {12, 0, 0},
          sign(rng) ? HalfPowerLaurent::v_pow(halfpow(rng))
                    : -HalfPowerLaurent::v_pow(halfpow(rng)));
      d += testutil::random_torus_element(rng, f, 2);
      const TorusElement prod = a * d;
      pass = pass && exact_right_divide(prod, d) == a;
    }
    sub("exact division round trip", pass);
  }

  // q = 1 specialization commutes with mutation (classical oracle).
  {
    auto rng = testutil::make_rng(0xF6);
    bool pass = true;
    for (int c = 0; c < 1000; ++c) {
      const int n = 1 + static_cast<int>(c % 3);
      const Sl2Instance inst = build_sl2(n);
      std::uniform_int_distribution<int> pick(0, n - 1);
      QuantumSeed s = inst.initial;
      for (int h = 0; h < static_cast<int>(c % 2); ++h) s = s.mutate(pick(rng));
      const int k = pick(rng);
      std::vector<ClassicalPoly> cvars;
      for (const auto& v : s.vars()) cvars.push_back(specialize_q1(v));
      const auto cmut = classical_mutate(cvars, s.pair().b(), k);
      pass = pass &&
             specialize_q1(s.mutate(k).var(k)) == cmut[static_cast<std::size_t>(k)];
    }
    sub("classical mutation oracle", pass);
  }

  // Rewrite confluence on 1000 random words.
  {
    auto rng = testutil::make_rng(0x17);
    bool pass = true;
    for (int c = 0; c < 1000; ++c) {
      const int n = 1 + static_cast<int>(c % 3);
      std::uniform_int_distribution<std::size_t> len(0, 6);
      const std::vector<int> w = testutil::random_even_word(rng, n, len(rng));
      pass = pass && testutil::random_strategy_reduce(n, w, rng) == reduce(n, w);
    }
    sub("rewrite confluence", pass);
  }

  // Exhaustive homomorphism check, n <= 3, all word pairs to length 4.
  {
    bool pass = true;
    std::size_t pairs = 0;
    for (int n = 1; n <= 3; ++n) {
      const GrothTorusMap map = make_groth_map(build_sl2(n));
      const HomReport rep = check_homomorphism_exhaustive(map, 4);
      pairs += rep.pairs_checked;
      pass = pass && rep.failures == 0;
    }
    std::ostringstream os;
    os << "homomorphism exhaustive to length 4 (" << pairs << " pairs)";
    sub(os.str().c_str(), pass);
  }

  // Independence of normal-word images, n <= 2, degree <= 3.
  {
    bool pass = true;
    for (int n = 1; n <= 2; ++n) {
      const GrothTorusMap map = make_groth_map(build_sl2(n));
      const IndependenceReport rep = check_independence(map, 3);
      pass = pass && rep.independent && rep.rank == rep.words;
    }
    sub("independence of normal-word images", pass);
  }

  detail = ok ? "involutivity, sign independence, compatibility preservation, "
                "associativity (torus and presented algebra), division round "
                "trip, classical oracle, confluence, exhaustive homomorphism, "
                "independence: all exact"
              : "failed: " + failed.str();
  return ok;
}

}  // namespace

int main() {
  std::cout << "acceptance suite (exact symbolic checks, deterministic)\n";
  const auto t0 = std::chrono::steady_clock::now();
  run(1, "compatibility", criterion_compatibility);
  run(2, "worked example", criterion_worked_example);
  run(3, "presentation", criterion_presentation);
  run(4, "generation", criterion_generation);
  run(5, "exchange-graph counts", criterion_counts);
  run(6, "property suites", criterion_properties);
  const auto t1 = std::chrono::steady_clock::now();
  std::cout << (g_failures == 0 ? "all criteria passed" : "criteria failed")
            << "  [total " << std::fixed << std::setprecision(2)
            << std::chrono::duration<double>(t1 - t0).count() << "s]\n";
  return g_failures;
}
