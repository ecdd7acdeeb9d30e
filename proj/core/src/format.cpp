#include "qca/format.hpp"

#include <algorithm>
#include <sstream>

#include "qca/classical.hpp"
#include "qca/grothendieck.hpp"

namespace qca {

namespace {

// q^{k/2} for a v-exponent k, e.g. "q", "q^2", "q^(1/2)", "q^(-3/2)".
std::string q_power(int k) {
  std::ostringstream os;
  if (k % 2 == 0) {
    const int e = k / 2;
    if (e == 1) {
      os << "q";
    } else if (e < 0) {
      os << "q^(" << e << ")";
    } else {
      os << "q^" << e;
    }
  } else {
    os << "q^(" << k << "/2)";
  }
  return os.str();
}

// One scalar term c * v^k as a signless factor string; sign returned apart.
std::pair<bool, std::string> scalar_term(int k, const BigInt& c) {
  const bool negative = c < 0;
  BigInt a = negative ? BigInt(-c) : c;
  std::ostringstream os;
  if (k == 0) {
    os << a.str();
  } else if (a == 1) {
    os << q_power(k);
  } else {
    os << a.str() << "*" << q_power(k);
  }
  return {negative, os.str()};
}

// Renders a scalar, largest exponent first; sets *multi when more than one
// term was printed.
std::string scalar_string(const HalfPowerLaurent& s, bool* multi) {
  if (multi) *multi = false;
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    auto [neg, body] = scalar_term(it->first, it->second);
    if (first) {
      if (neg) os << "-";
      os << body;
      first = false;
    } else {
      os << (neg ? " - " : " + ") << body;
    }
  }
  if (multi) *multi = s.term_count() > 1;
  return os.str();
}

// Product of named powers, e.g. "Y1^-1*Y2".
std::string variable_block(const char* name, const ExponentVector& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    os << name << (i + 1);
    if (e[i] != 1) os << "^" << e[i];
    first = false;
  }
  return os.str();
}

// Coefficient times variable block with the overall sign pulled out.
std::pair<bool, std::string> signed_body(const HalfPowerLaurent& c, const std::string& vars) {
  bool multi = false;
  if (vars.empty()) {
    std::string body = scalar_string(c, &multi);
    if (!multi && body.size() > 1 && body[0] == '-') return {true, body.substr(1)};
    return {false, body};
  }
  if (c.is_one()) return {false, vars};
  if ((-c).is_one()) return {true, vars};
  std::string body = scalar_string(c, &multi);
  bool negative = false;
  if (multi) {
    body = "(" + body + ")";
  } else if (body.size() > 1 && body[0] == '-') {
    negative = true;
    body = body.substr(1);
  }
  return {negative, body + "*" + vars};
}

void append_term(std::ostringstream& os, bool& first, bool negative, const std::string& body) {
  if (first) {
    if (negative) os << "-";
    os << body;
    first = false;
  } else {
    os << (negative ? " - " : " + ") << body;
  }
}

}  // namespace

std::string to_string(const HalfPowerLaurent& a) { return scalar_string(a, nullptr); }

std::ostream& operator<<(std::ostream& os, const HalfPowerLaurent& a) {
  return os << to_string(a);
}

std::string to_string(const TorusElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    // Rewrite c * X^e as an ordered product of the Y_i: the ordered product
    // Y_1^{e_1} ... Y_m^{e_m} equals q^{ordered_twist(e)/2} X^e.
    const long long tw = a.form().ordered_twist(e);
    auto [negative, body] = signed_body(c.shifted(static_cast<int>(-tw)), variable_block("Y", e));
    append_term(os, first, negative, body);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TorusElement& a) {
  return os << to_string(a);
}

std::string to_string(const ClassicalPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    append_term(os, first, c < 0,
                [&] {
                  BigInt abs = c < 0 ? BigInt(-c) : c;
                  const std::string vars = variable_block("y", e);
                  if (vars.empty()) return abs.str();
                  if (abs == 1) return vars;
                  return abs.str() + "*" + vars;
                }());
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ClassicalPoly& a) {
  return os << to_string(a);
}

std::string to_string(const GrothElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    // Run-length encode the word into powers, e.g. (0,0,2) -> X0^2*X2.
    std::ostringstream vb;
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (i) vb << "*";
      vb << "X" << w[i];
      if (j - i > 1) vb << "^" << (j - i);
      i = j;
    }
    auto [negative, body] = signed_body(c, vb.str());
    append_term(os, first, negative, body);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GrothElement& a) {
  return os << to_string(a);
}

std::string format_matrix(const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const auto& row : m) {
    cells.emplace_back();
    for (int x : row) {
      cells.back().push_back(std::to_string(x));
      width = std::max(width, cells.back().back().size());
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      if (j) os << " ";
      os << std::string(width - cells[i][j].size(), ' ') << cells[i][j];
    }
    os << "]";
    if (i + 1 < cells.size()) os << "\n";
  }
  return os.str();
}

std::string format_seed(const QuantumSeed& seed) {
  std::ostringstream os;
  os << "form:\n" << format_matrix(seed.pair().form().entries()) << "\n";
  os << "exchange matrix (columns";
  for (int k : seed.pair().b().ex()) os << " " << (k + 1);
  os << "):\n" << format_matrix(seed.pair().b().entries()) << "\n";
  os << "variables:\n";
  for (std::size_t i = 0; i < seed.vars().size(); ++i) {
    os << "  X[" << (i + 1) << "] = " << to_string(seed.vars()[i]) << "\n";
  }
  os << "history:";
  if (seed.history().empty()) {
    os << " (initial seed)";
  } else {
    for (int k : seed.history()) os << " " << (k + 1);
  }
  os << "\n";
  return os.str();
}

}  // namespace qca
