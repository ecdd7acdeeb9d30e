#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qca/classical.hpp"
#include "qca/torus.hpp"

namespace qca {

/// Extended exchange matrix: m rows (all lattice directions), one column per
/// exchangeable direction.  Columns are labeled by the 0-based indices in
/// `ex`, kept strictly increasing.  The square submatrix on exchangeable rows
/// must be skew-symmetric.
class ExchangeMatrix {
public:
  ExchangeMatrix(int rows, std::vector<int> ex, std::vector<std::vector<int>> entries);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(ex_.size()); }
  const std::vector<int>& ex() const { return ex_; }
  bool is_exchangeable(int label) const;

  /// Column position of an exchangeable label; throws BadIndexError if the
  /// label is not exchangeable.
  int column_of(int label) const;

  /// Entry b_{i,k} with i a 0-based row and k an exchangeable label.
  int b(int i, int label) const;

  /// Entry by raw (row, column position).
  int entry_at(int i, int col) const;

  const std::vector<std::vector<int>>& entries() const { return entries_; }

  /// Matrix mutation in direction of label k.  The result is independent of
  /// the sign choice eps (+1 or -1).
  ExchangeMatrix mutated(int k, int eps = +1) const;

  bool operator==(const ExchangeMatrix& rhs) const {
    return rows_ == rhs.rows_ && ex_ == rhs.ex_ && entries_ == rhs.entries_;
  }
  bool operator!=(const ExchangeMatrix& rhs) const { return !(*this == rhs); }

private:
  int rows_;
  std::vector<int> ex_;
  std::vector<std::vector<int>> entries_;
};

/// A skew form together with an exchange matrix satisfying the compatibility
/// condition: B^T Lambda = (D | 0) with D diagonal, d_k >= 1 on exchangeable
/// labels.  Instances can only be produced by check_compatible (or mutation),
/// so holding one certifies the condition.
class CompatiblePair {
public:
  const SkewForm& form() const { return form_; }
  const ExchangeMatrix& b() const { return b_; }

  /// The multiplier d_k for exchangeable label k.
  long long d(int label) const;

  /// All multipliers keyed by exchangeable label.
  const std::map<int, long long>& multipliers() const { return d_; }

  /// Mutation in direction k; re-certifies compatibility of the result and
  /// checks that the multipliers are unchanged.
  CompatiblePair mutated(int k, int eps = +1) const;

  bool operator==(const CompatiblePair& rhs) const {
    return form_ == rhs.form_ && b_ == rhs.b_;
  }
  bool operator!=(const CompatiblePair& rhs) const { return !(*this == rhs); }

  friend CompatiblePair check_compatible(SkewForm form, ExchangeMatrix b);

private:
  CompatiblePair(SkewForm form, ExchangeMatrix b, std::map<int, long long> d);

  SkewForm form_;
  ExchangeMatrix b_;
  std::map<int, long long> d_;
};

/// Certifies compatibility; throws NotCompatibleError naming the first
/// violated position (scanning exchangeable labels in order, then rows).
CompatiblePair check_compatible(SkewForm form, ExchangeMatrix b);

/// Mutation of the form alone: Lambda' = E^T Lambda E.  Exposed for tests;
/// CompatiblePair::mutated is the primary entry point.
SkewForm mutate_form(const SkewForm& form, const ExchangeMatrix& b, int k, int eps = +1);

/// Quantum seed: a compatible pair together with the cluster variables,
/// realized as elements of one fixed ambient quantum torus (the initial
/// seed's).  Variables pairwise quasi-commute with exponents given by the
/// seed's own form; this is validated on construction.
class QuantumSeed {
public:
  QuantumSeed(CompatiblePair pair, std::vector<TorusElement> vars,
              std::vector<int> history = {});

  /// Seed whose variables are the basis monomials of T(pair.form()).
  static QuantumSeed initial(const CompatiblePair& pair);

  const CompatiblePair& pair() const { return pair_; }
  const std::vector<TorusElement>& vars() const { return vars_; }
  const TorusElement& var(int i) const;

  /// Mutation path from the initial seed (0-based labels, earliest first).
  const std::vector<int>& history() const { return history_; }

  /// The toric frame monomial M(c): the unique basis-monomial-like element
  /// with M(c) M(c') = q^{lambda_seed(c,c')/2} M(c + c') built from the
  /// seed's variables.  Negative powers divide; inexact division throws.
  TorusElement frame_monomial(const ExponentVector& c) const;

  /// One-step mutation at exchangeable label k (throws BadIndexError
  /// otherwise).  Satisfies mutate(k).mutate(k) == *this on the seed data.
  QuantumSeed mutate(int k) const;

  /// Equality of the mathematical data (pair and variables); the history is
  /// deliberately excluded.
  bool operator==(const QuantumSeed& rhs) const {
    return pair_ == rhs.pair_ && vars_ == rhs.vars_;
  }
  bool operator!=(const QuantumSeed& rhs) const { return !(*this == rhs); }

private:
  void validate() const;

  CompatiblePair pair_;
  std::vector<TorusElement> vars_;
  std::vector<int> history_;
};

/// Exchange graph reachable from a starting seed.  Nodes are seeds up to
/// simultaneous permutation of positions (identified by the multiset of
/// variables); edges {a, b, k} connect node a to node b via a mutation that
/// was discovered at position k, stored with a < b.
struct ExchangeGraph {
  std::vector<QuantumSeed> nodes;
  std::vector<std::array<int, 3>> edges;
  std::vector<TorusElement> distinct_variables;
  bool truncated = false;
};

/// Breadth-first enumeration.  Stops adding nodes once `max_seeds` is
/// reached and marks the result truncated.  Deterministic: node and edge
/// order depend only on the starting seed.  Honors QCLUSTER_THREADS for the
/// per-level expansion.
ExchangeGraph enumerate_exchange_graph(const QuantumSeed& start, std::size_t max_seeds);

/// Classical (q = 1) exchange: replaces vars[k] using the commutative
/// exchange relation.  Independent oracle for the quantum mutation.
std::vector<ClassicalPoly> classical_mutate(const std::vector<ClassicalPoly>& vars,
                                            const ExchangeMatrix& b, int k);

/// Stable text key identifying a torus element (used for deduplication and
/// deterministic ordering).
std::string canonical_key(const TorusElement& a);

}  // namespace qca
