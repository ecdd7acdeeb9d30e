#include "qca/json_io.hpp"

#include <json.hpp>

namespace qca {

namespace {

using Json = nlohmann::ordered_json;

Json laurent_to_node(const HalfPowerLaurent& a) {
  Json node = Json::array();
  for (const auto& [k, c] : a.terms()) {
    node.push_back(Json::array({k, c.str()}));
  }
  return node;
}

HalfPowerLaurent laurent_from_node(const Json& node) {
  if (!node.is_array()) throw ParseError("scalar: expected an array of [exponent, coeff]");
  HalfPowerLaurent out;
  for (const auto& term : node) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
        !term[1].is_string()) {
      throw ParseError("scalar: each term must be [integer exponent, decimal string]");
    }
    BigInt c;
    try {
      c = BigInt(term[1].get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("scalar: bad coefficient string");
    }
    out += HalfPowerLaurent::term(term[0].get<int>(), c);
  }
  return out;
}

Json matrix_to_node(const std::vector<std::vector<int>>& m) {
  Json node = Json::array();
  for (const auto& row : m) node.push_back(row);
  return node;
}

std::vector<std::vector<int>> matrix_from_node(const Json& node) {
  if (!node.is_array()) throw ParseError("matrix: expected an array of rows");
  std::vector<std::vector<int>> m;
  for (const auto& row : node) {
    if (!row.is_array()) throw ParseError("matrix: expected integer rows");
    m.emplace_back();
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError("matrix: entries must be integers");
      m.back().push_back(x.get<int>());
    }
  }
  return m;
}

Json torus_to_node(const TorusElement& a) {
  Json node;
  node["m"] = a.rank();
  node["lambda"] = matrix_to_node(a.form().entries());
  Json terms = Json::array();
  for (const auto& [e, c] : a.terms()) {
    terms.push_back(Json::array({Json(e), laurent_to_node(c)}));
  }
  node["terms"] = std::move(terms);
  return node;
}

TorusElement torus_from_node(const Json& node) {
  if (!node.is_object() || !node.contains("m") || !node.contains("lambda") ||
      !node.contains("terms")) {
    throw ParseError("torus element: expected {m, lambda, terms}");
  }
  if (!node["m"].is_number_integer()) throw ParseError("torus element: m must be an integer");
  const int m = node["m"].get<int>();
  SkewForm form = [&] {
    try {
      return SkewForm(matrix_from_node(node["lambda"]));
    } catch (const Error& e) {
      throw ParseError(std::string("torus element: ") + e.what());
    }
  }();
  if (form.rank() != m) throw ParseError("torus element: lambda rank differs from m");
  TorusElement out(form);
  if (!node["terms"].is_array()) throw ParseError("torus element: terms must be an array");
  for (const auto& term : node["terms"]) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array()) {
      throw ParseError("torus element: each term must be [exponents, coeff]");
    }
    ExponentVector e;
    for (const auto& x : term[0]) {
      if (!x.is_number_integer()) throw ParseError("torus element: exponents must be integers");
      e.push_back(x.get<int>());
    }
    if (static_cast<int>(e.size()) != m) {
      throw ParseError("torus element: exponent vector length differs from m");
    }
    out += TorusElement::monomial(form, std::move(e), laurent_from_node(term[1]));
  }
  return out;
}

Json seed_to_node(const QuantumSeed& seed) {
  Json node;
  node["lambda"] = matrix_to_node(seed.pair().form().entries());
  Json b;
  b["m"] = seed.pair().b().rows();
  Json ex = Json::array();
  for (int k : seed.pair().b().ex()) ex.push_back(k + 1);
  b["ex"] = std::move(ex);
  b["entries"] = matrix_to_node(seed.pair().b().entries());
  node["b"] = std::move(b);
  Json vars = Json::array();
  for (const auto& v : seed.vars()) vars.push_back(torus_to_node(v));
  node["vars"] = std::move(vars);
  Json hist = Json::array();
  for (int k : seed.history()) hist.push_back(k + 1);
  node["history"] = std::move(hist);
  return node;
}

QuantumSeed seed_from_node(const Json& node) {
  if (!node.is_object() || !node.contains("lambda") || !node.contains("b") ||
      !node.contains("vars") || !node.contains("history")) {
    throw ParseError("seed: expected {lambda, b, vars, history}");
  }
  const Json& bnode = node["b"];
  if (!bnode.is_object() || !bnode.contains("m") || !bnode.contains("ex") ||
      !bnode.contains("entries") || !bnode["m"].is_number_integer() ||
      !bnode["ex"].is_array()) {
    throw ParseError("seed: expected b = {m, ex, entries}");
  }
  std::vector<int> ex;
  for (const auto& x : bnode["ex"]) {
    if (!x.is_number_integer()) throw ParseError("seed: ex labels must be integers");
    ex.push_back(x.get<int>() - 1);
  }
  try {
    SkewForm form(matrix_from_node(node["lambda"]));
    ExchangeMatrix b(bnode["m"].get<int>(), std::move(ex), matrix_from_node(bnode["entries"]));
    CompatiblePair pair = check_compatible(std::move(form), std::move(b));
    std::vector<TorusElement> vars;
    if (!node["vars"].is_array()) throw ParseError("seed: vars must be an array");
    for (const auto& v : node["vars"]) vars.push_back(torus_from_node(v));
    std::vector<int> history;
    if (!node["history"].is_array()) throw ParseError("seed: history must be an array");
    for (const auto& k : node["history"]) {
      if (!k.is_number_integer()) throw ParseError("seed: history entries must be integers");
      history.push_back(k.get<int>() - 1);
    }
    return QuantumSeed(std::move(pair), std::move(vars), std::move(history));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("seed: ") + e.what());
  }
}

Json groth_to_node(const GrothElement& a) {
  Json node = Json::array();
  for (const auto& [w, c] : a.terms()) {
    Json term;
    term["word"] = w;
    term["coeff"] = laurent_to_node(c);
    node.push_back(std::move(term));
  }
  return node;
}

GrothElement groth_from_node(int n, const Json& node) {
  if (!node.is_array()) throw ParseError("presented element: expected an array of terms");
  try {
    GrothElement out(n);
    for (const auto& term : node) {
      if (!term.is_object() || !term.contains("word") || !term.contains("coeff") ||
          !term["word"].is_array()) {
        throw ParseError("presented element: each term must be {word, coeff}");
      }
      std::vector<int> w;
      for (const auto& l : term["word"]) {
        if (!l.is_number_integer()) {
          throw ParseError("presented element: word letters must be integers");
        }
        w.push_back(l.get<int>());
      }
      out += GrothElement::word_monomial(n, std::move(w), laurent_from_node(term["coeff"]));
    }
    return out;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("presented element: ") + e.what());
  }
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const HalfPowerLaurent& a) { return laurent_to_node(a).dump(); }

HalfPowerLaurent laurent_from_json(const std::string& text) {
  return laurent_from_node(parse_text(text));
}

std::string to_json(const TorusElement& a) { return torus_to_node(a).dump(); }

TorusElement torus_from_json(const std::string& text) {
  return torus_from_node(parse_text(text));
}

std::string to_json(const QuantumSeed& seed) { return seed_to_node(seed).dump(); }

QuantumSeed seed_from_json(const std::string& text) {
  return seed_from_node(parse_text(text));
}

std::string to_json(const GrothElement& a) { return groth_to_node(a).dump(); }

GrothElement groth_from_json(int n, const std::string& text) {
  return groth_from_node(n, parse_text(text));
}

std::string to_json(const ExchangeGraph& graph) {
  Json node;
  Json nodes = Json::array();
  for (const auto& s : graph.nodes) nodes.push_back(seed_to_node(s));
  node["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& e : graph.edges) {
    edges.push_back(Json::array({e[0], e[1], e[2] + 1}));
  }
  node["edges"] = std::move(edges);
  Json vars = Json::array();
  for (const auto& v : graph.distinct_variables) vars.push_back(torus_to_node(v));
  node["variables"] = std::move(vars);
  node["truncated"] = graph.truncated;
  return node.dump();
}

}  // namespace qca
