#include "qca/sl2.hpp"

#include <sstream>

namespace qca {

Sl2Instance build_sl2(int n) {
  if (n < 1) throw BadIndexError("build_sl2: n must be at least 1");
  const int m = n + 1;

  // lambda_{ij} = -1 exactly when i < j, i even, j odd (0-based).
  std::vector<std::vector<int>> lambda(static_cast<std::size_t>(m),
                                       std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (i % 2 == 0 && j % 2 == 1) {
        lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
        lambda[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
      }
    }
  }

  // b_{ik} = +1 for i = k + 1 and -1 for i = k - 1 (0-based), the linear
  // quiver with the frozen vertex n at the end.
  std::vector<int> ex(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) ex[static_cast<std::size_t>(k)] = k;
  std::vector<std::vector<int>> entries(static_cast<std::size_t>(m),
                                        std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int k = 0; k < n; ++k) {
    if (k + 1 < m) entries[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(k)] = 1;
    if (k - 1 >= 0) entries[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k)] = -1;
  }

  CompatiblePair pair = check_compatible(SkewForm(std::move(lambda)),
                                         ExchangeMatrix(m, std::move(ex), std::move(entries)));
  QuantumSeed initial = QuantumSeed::initial(pair);
  return Sl2Instance{n, std::move(pair), std::move(initial)};
}

std::vector<TorusElement> generators_X(const Sl2Instance& inst) {
  std::vector<TorusElement> gens;
  gens.reserve(static_cast<std::size_t>(inst.n) + 1);
  for (int i = 0; i < inst.n; ++i) {
    const int label = inst.n - 1 - i;
    gens.push_back(inst.initial.mutate(label).var(label));
  }
  gens.push_back(inst.initial.var(0));
  return gens;
}

GrothTorusMap make_groth_map(const Sl2Instance& inst) {
  return GrothTorusMap(inst.n, generators_X(inst));
}

PresentationReport verify_presentation(const Sl2Instance& inst) {
  const std::vector<TorusElement> gens = generators_X(inst);
  const SkewForm& ambient = gens.front().form();
  const TorusElement unit = TorusElement::scalar(ambient, HalfPowerLaurent::one());

  PresentationReport report;
  report.n = inst.n;
  report.all_pass = true;

  for (int a = 1; a <= inst.n; ++a) {
    for (int b = 0; b < a; ++b) {
      RelationCheck check;
      check.l1 = 2 * a;
      check.l2 = 2 * b;
      const TorusElement& xa = gens[static_cast<std::size_t>(a)];
      const TorusElement& xb = gens[static_cast<std::size_t>(b)];
      if (a - b == 1) {
        check.kind = "adjacent";
        const TorusElement lhs =
            xa * xb - HalfPowerLaurent::v_pow(-2) * (xb * xa);
        const TorusElement rhs =
            (HalfPowerLaurent::one() - HalfPowerLaurent::v_pow(-2)) * unit;
        check.expected = to_string(rhs);
        check.computed = to_string(lhs);
        check.pass = lhs == rhs;
      } else {
        check.kind = "q-commute";
        check.sign_rule_exponent = (a - b) % 2 == 0 ? 1 : -1;
        check.half_difference_exponent = a - b;
        const auto r = quasi_commutation_exponent(xa, xb);
        std::ostringstream expected;
        expected << "q^" << check.sign_rule_exponent;
        check.expected = expected.str();
        if (r) {
          // quasi_commutation_exponent reports powers of v = q^{1/2}.
          check.measured_q_exponent = *r / 2;
          std::ostringstream computed;
          if (*r % 2 == 0) {
            computed << "q^" << (*r / 2);
          } else {
            computed << "q^(" << *r << "/2)";
          }
          check.computed = computed.str();
          check.pass = *r == 2LL * check.sign_rule_exponent;
          check.matches_half_difference = *r == 2LL * check.half_difference_exponent;
        } else {
          check.computed = "none";
          check.pass = false;
          check.matches_half_difference = false;
        }
        if (!check.matches_half_difference) ++report.half_difference_mismatches;
      }
      if (!check.pass) report.all_pass = false;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

std::vector<GeneratedIdentity> express_Y_in_X(const Sl2Instance& inst) {
  const GrothTorusMap map = make_groth_map(inst);
  const int n = inst.n;
  const HalfPowerLaurent vinv = HalfPowerLaurent::v_pow(-1);

  std::vector<GeneratedIdentity> out;
  out.reserve(static_cast<std::size_t>(n) + 1);

  auto push = [&](int var_index, GrothElement expr) {
    TorusElement expansion = map(expr);
    const bool verified = expansion == inst.initial.var(var_index);
    out.push_back(GeneratedIdentity{var_index, std::move(expr), std::move(expansion), verified});
  };

  GrothElement prev = GrothElement::one(n);         // Y_0 = 1
  GrothElement cur = GrothElement::generator(n, 2 * n);  // Y_1 = X_{2n}
  push(0, cur);
  for (int i = 1; i <= n; ++i) {
    // X_{2(n-i)} Y_i = q^{-1/2} Y_{i-1} + Y_{i+1}    (i even)
    // X_{2(n-i)} Y_i = Y_{i-1} + q^{1/2} Y_{i+1}     (i odd)
    const GrothElement gen = GrothElement::generator(n, 2 * (n - i));
    GrothElement next =
        i % 2 == 1 ? vinv * (gen * cur - prev) : gen * cur - vinv * prev;
    push(i, next);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

MutationSequenceResult full_mutation_sequence(const Sl2Instance& inst) {
  QuantumSeed seed = inst.initial;
  for (int k = 0; k < inst.n; ++k) seed = seed.mutate(k);

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(inst.n) + 1);
  for (int i = 0; i < inst.n; ++i) {
    std::ostringstream os;
    os << "W[" << (i + 1) << "," << (2 * inst.n - 2 * (i + 1)) << "]";
    labels.push_back(os.str());
  }
  {
    std::ostringstream os;
    os << "W[" << (inst.n + 1) << ",0]";
    labels.push_back(os.str());
  }
  return MutationSequenceResult{std::move(seed), std::move(labels)};
}

}  // namespace qca
