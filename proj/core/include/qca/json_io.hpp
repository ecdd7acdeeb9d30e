#pragma once

#include <string>

#include "qca/grothendieck.hpp"
#include "qca/seed.hpp"

namespace qca {

/// JSON forms (all deterministic, keys in a fixed order):
///  - scalar: [[exponent, "coeff"], ...] ascending exponent, coefficients as
///    decimal strings (arbitrary precision does not fit JSON numbers);
///  - torus element: {"m", "lambda", "terms"} with terms in the term order,
///    leading first;
///  - seed: {"lambda", "b": {"m", "ex", "entries"}, "vars", "history"} with
///    ex and history 1-based;
///  - presented-algebra element: [{"word", "coeff"}, ...] with words
///    lexicographically ascending;
///  - exchange graph: {"nodes", "edges", "variables", "truncated"}.

std::string to_json(const HalfPowerLaurent& a);
HalfPowerLaurent laurent_from_json(const std::string& text);

std::string to_json(const TorusElement& a);
TorusElement torus_from_json(const std::string& text);

std::string to_json(const QuantumSeed& seed);
QuantumSeed seed_from_json(const std::string& text);

std::string to_json(const GrothElement& a);
GrothElement groth_from_json(int n, const std::string& text);

std::string to_json(const ExchangeGraph& graph);

}  // namespace qca
