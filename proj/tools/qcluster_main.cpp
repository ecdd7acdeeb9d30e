// qcluster: batch workbench for the exact cluster-algebra engine.
// Subcommands: build, mutate, enumerate, verify.  All output is
// deterministic for a fixed invocation (including --rng-seed), so runs can
// be diffed byte for byte.  Exit codes: 0 success, 1 verification or
// runtime failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qca/format.hpp"
#include "qca/json_io.hpp"
#include "qca/sl2.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  int n = 2;
  std::vector<int> mutation_seq;  // 1-based labels
  std::size_t max_seeds = 100000;
  std::uint64_t rng_seed = 0;
  std::string output_path;
  std::string format = "text";
  bool corrupt = false;
};

constexpr std::size_t kHomSamples = 200;
constexpr std::size_t kHomMaxLen = 4;

int emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "qcluster: cannot open output file '" << cfg.output_path << "'\n";
    return 1;
  }
  out << text;
  return out.good() ? 0 : 1;
}

std::string render_d(const qca::CompatiblePair& pair) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& [label, d] : pair.multipliers()) {
    if (!first) os << ", ";
    first = false;
    os << d;
    (void)label;
  }
  os << ")";
  return os.str();
}

int cmd_build(const RunConfig& cfg) {
  const qca::Sl2Instance inst = qca::build_sl2(cfg.n);
  if (cfg.format == "json") {
    Json node;
    node["n"] = cfg.n;
    node["m"] = inst.pair.form().rank();
    node["lambda"] = inst.pair.form().entries();
    Json b;
    b["m"] = inst.pair.b().rows();
    Json ex = Json::array();
    for (int k : inst.pair.b().ex()) ex.push_back(k + 1);
    b["ex"] = std::move(ex);
    b["entries"] = inst.pair.b().entries();
    node["b"] = std::move(b);
    Json d = Json::array();
    for (const auto& [label, dk] : inst.pair.multipliers()) {
      d.push_back(dk);
      (void)label;
    }
    node["d"] = std::move(d);
    return emit(cfg, node.dump() + "\n");
  }
  std::ostringstream os;
  os << "instance n = " << cfg.n << " (rank " << inst.pair.form().rank() << ")\n";
  os << "lambda:\n" << qca::format_matrix(inst.pair.form().entries()) << "\n";
  os << "b (one column per exchangeable label 1.." << cfg.n << "):\n"
     << qca::format_matrix(inst.pair.b().entries()) << "\n";
  os << "d = " << render_d(inst.pair) << "\n";
  return emit(cfg, os.str());
}

int cmd_mutate(const RunConfig& cfg) {
  const qca::Sl2Instance inst = qca::build_sl2(cfg.n);
  qca::QuantumSeed seed = inst.initial;
  for (int label : cfg.mutation_seq) seed = seed.mutate(label - 1);
  if (cfg.format == "json") {
    Json node;
    node["n"] = cfg.n;
    node["seq"] = cfg.mutation_seq;
    node["seed"] = Json::parse(qca::to_json(seed));
    return emit(cfg, node.dump() + "\n");
  }
  return emit(cfg, qca::format_seed(seed));
}

int cmd_enumerate(const RunConfig& cfg) {
  const qca::Sl2Instance inst = qca::build_sl2(cfg.n);
  const qca::ExchangeGraph graph =
      qca::enumerate_exchange_graph(inst.initial, cfg.max_seeds);
  if (cfg.format == "json") {
    Json node;
    node["n"] = cfg.n;
    node["max_seeds"] = cfg.max_seeds;
    node["clusters"] = graph.nodes.size();
    node["distinct_variables"] = graph.distinct_variables.size();
    node["truncated"] = graph.truncated;
    node["graph"] = Json::parse(qca::to_json(graph));
    return emit(cfg, node.dump() + "\n");
  }
  std::ostringstream os;
  os << "exchange graph for n = " << cfg.n << " (max seeds " << cfg.max_seeds
     << ")\n";
  os << "clusters: " << graph.nodes.size() << "\n";
  os << "distinct variables: " << graph.distinct_variables.size() << "\n";
  os << "edges: " << graph.edges.size() << "\n";
  os << "truncated: " << (graph.truncated ? "true" : "false") << "\n";
  os << "variables:\n";
  for (const auto& v : graph.distinct_variables) {
    os << "  " << qca::to_string(v) << "\n";
  }
  return emit(cfg, os.str());
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.corrupt) {
    // Negative control: flip one sign of the form and re-run certification.
    // The corrupted pair must be rejected; the command reports the rejection
    // and exits 1 either way (an accepted corruption is also a failure).
    const qca::Sl2Instance inst = qca::build_sl2(cfg.n);
    std::vector<std::vector<int>> entries = inst.pair.form().entries();
    entries[0][1] = -entries[0][1];
    entries[1][0] = -entries[1][0];
    std::string message;
    try {
      qca::check_compatible(qca::SkewForm(std::move(entries)), inst.pair.b());
      message = "corrupted form was accepted; certification is broken";
    } catch (const qca::NotCompatibleError& e) {
      std::ostringstream os;
      os << "corrupted form rejected as expected: " << e.what();
      message = os.str();
    }
    if (cfg.format == "json") {
      Json node;
      node["n"] = cfg.n;
      node["corrupt"] = true;
      node["all_pass"] = false;
      node["message"] = message;
      emit(cfg, node.dump() + "\n");
    } else {
      emit(cfg, "verification for n = " + std::to_string(cfg.n) +
                    " (corrupt hook)\n" + message + "\nresult: failed\n");
    }
    return 1;
  }

  const qca::Sl2Instance inst = qca::build_sl2(cfg.n);
  const qca::PresentationReport pres = qca::verify_presentation(inst);
  const std::vector<qca::GeneratedIdentity> ids = qca::express_Y_in_X(inst);
  bool ids_ok = true;
  for (const auto& id : ids) ids_ok = ids_ok && id.verified;
  const qca::GrothTorusMap map = qca::make_groth_map(inst);
  const qca::HomReport hom =
      qca::check_homomorphism(map, kHomSamples, kHomMaxLen, cfg.rng_seed);
  const std::size_t indep_degree = cfg.n <= 3 ? 3 : 2;
  const qca::IndependenceReport indep = qca::check_independence(map, indep_degree);
  const qca::MutationSequenceResult sweep = qca::full_mutation_sequence(inst);

  const bool all_pass =
      pres.all_pass && ids_ok && hom.failures == 0 && indep.independent;

  if (cfg.format == "json") {
    Json node;
    node["n"] = cfg.n;
    Json rels = Json::array();
    for (const auto& c : pres.checks) {
      Json r;
      r["l1"] = c.l1;
      r["l2"] = c.l2;
      r["kind"] = c.kind;
      r["expected"] = c.expected;
      r["computed"] = c.computed;
      r["pass"] = c.pass;
      rels.push_back(std::move(r));
    }
    node["presentation"] = std::move(rels);
    node["half_difference_mismatches"] = pres.half_difference_mismatches;
    Json gens = Json::array();
    for (const auto& id : ids) {
      Json g;
      g["variable"] = id.var_index + 1;
      g["verified"] = id.verified;
      g["expr"] = Json::parse(qca::to_json(id.expr));
      gens.push_back(std::move(g));
    }
    node["generation"] = std::move(gens);
    node["homomorphism"] = Json{{"pairs", hom.pairs_checked},
                                {"failures", hom.failures},
                                {"rng_seed", cfg.rng_seed},
                                {"max_word_length", kHomMaxLen}};
    node["independence"] = Json{{"words", indep.words},
                                {"rank", indep.rank},
                                {"degree", indep_degree},
                                {"independent", indep.independent}};
    node["kr_labels"] = sweep.kr_labels;
    node["all_pass"] = all_pass;
    emit(cfg, node.dump() + "\n");
  } else {
    std::ostringstream os;
    os << "verification for n = " << cfg.n << "\n";
    os << "presentation: " << pres.checks.size() << " relations, "
       << (pres.all_pass ? "all pass" : "FAILURES") << "\n";
    os << "  q-commuting pairs refuting the half-difference exponent: "
       << pres.half_difference_mismatches << "\n";
    for (const auto& c : pres.checks) {
      if (!c.pass) {
        os << "  FAIL X_" << c.l1 << ", X_" << c.l2 << " (" << c.kind
           << "): expected " << c.expected << ", computed " << c.computed
           << "\n";
      }
    }
    os << "generation identities: ";
    std::size_t verified = 0;
    for (const auto& id : ids) verified += id.verified ? 1 : 0;
    os << verified << "/" << ids.size() << " verified\n";
    for (const auto& id : ids) {
      os << "  Y" << (id.var_index + 1) << " = " << qca::to_string(id.expr)
         << (id.verified ? "" : "  [MISMATCH]") << "\n";
    }
    os << "homomorphism (sampled): " << hom.pairs_checked << " pairs, "
       << hom.failures << " failures (rng seed " << cfg.rng_seed << ")\n";
    os << "independence: " << indep.words << " words of degree <= "
       << indep_degree << ", rank " << indep.rank << ", "
       << (indep.independent ? "independent" : "DEPENDENT") << "\n";
    os << "kr labels:";
    for (const auto& l : sweep.kr_labels) os << " " << l;
    os << "\n";
    os << "result: " << (all_pass ? "all checks passed" : "failed") << "\n";
    emit(cfg, os.str());
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qcluster: exact workbench for quantum cluster seeds of the linear "
      "quiver family (build, mutate, enumerate, verify)"};
  app.require_subcommand(1);

  RunConfig cfg;

  const auto add_common = [&cfg](CLI::App* sc, bool with_n = true) {
    if (with_n) {
      sc->add_option("--n", cfg.n, "instance size (number of exchangeable labels)")
          ->required()
          ->check(CLI::PositiveNumber);
    }
    sc->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sc->add_option("--output", cfg.output_path,
                   "write output to this file instead of stdout");
  };

  CLI::App* build = app.add_subcommand(
      "build", "construct the instance and print its matrices and multipliers");
  add_common(build);

  CLI::App* mutate = app.add_subcommand(
      "mutate", "apply a mutation sequence to the initial seed");
  add_common(mutate);
  mutate
      ->add_option("--seq", cfg.mutation_seq,
                   "comma-separated 1-based mutation labels, e.g. 1,2,1")
      ->delimiter(',');

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "breadth-first enumeration of the exchange graph");
  add_common(enumerate);
  enumerate
      ->add_option("--max-seeds", cfg.max_seeds,
                   "stop and mark the result truncated after this many clusters")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand(
      "verify",
      "check the presentation relations, generation identities, sampled "
      "homomorphism property, and independence of normal-word images");
  add_common(verify);
  verify
      ->add_option("--rng-seed", cfg.rng_seed,
                   "seed for the sampled homomorphism check")
      ->capture_default_str();
  verify->add_flag("--corrupt", cfg.corrupt, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    // The mutation labels are a usage matter: 1-based and within [1, n].
    for (int label : cfg.mutation_seq) {
      if (label < 1 || label > cfg.n) {
        std::cerr << "qcluster: mutation label " << label
                  << " outside [1, " << cfg.n << "]\n";
        return 2;
      }
    }
    if (build->parsed()) return cmd_build(cfg);
    if (mutate->parsed()) return cmd_mutate(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    return cmd_verify(cfg);
  } catch (const qca::Error& e) {
    std::cerr << "qcluster: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qcluster: unexpected error: " << e.what() << "\n";
    return 1;
  }
}
