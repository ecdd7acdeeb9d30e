#pragma once

#include <string>
#include <vector>

#include "qca/seed.hpp"

namespace qca {

/// Text rendering of an integer matrix, one row per line, columns aligned.
std::string format_matrix(const std::vector<std::vector<int>>& m);

/// Multi-line listing of a seed: form, exchange matrix, variables, history.
std::string format_seed(const QuantumSeed& seed);

}  // namespace qca
