#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "qca/torus.hpp"

namespace qca {

/// Commutative Laurent polynomial with integer coefficients, used as the
/// q = 1 specialization target.  Kept deliberately separate from the quantum
/// machinery so it can serve as an independent cross-check.
class ClassicalPoly {
public:
  explicit ClassicalPoly(int rank);

  static ClassicalPoly monomial(int rank, ExponentVector e, BigInt c = 1);
  static ClassicalPoly constant(int rank, BigInt c);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coeff(const ExponentVector& e) const;
  const std::map<ExponentVector, BigInt, GradedLexGreater>& terms() const { return terms_; }

  ClassicalPoly operator-() const;
  ClassicalPoly& operator+=(const ClassicalPoly& rhs);
  ClassicalPoly& operator-=(const ClassicalPoly& rhs);

  friend ClassicalPoly operator+(ClassicalPoly lhs, const ClassicalPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ClassicalPoly operator-(ClassicalPoly lhs, const ClassicalPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ClassicalPoly operator*(const ClassicalPoly& lhs, const ClassicalPoly& rhs);

  bool operator==(const ClassicalPoly& rhs) const {
    return rank_ == rhs.rank_ && terms_ == rhs.terms_;
  }
  bool operator!=(const ClassicalPoly& rhs) const { return !(*this == rhs); }

private:
  void set(const ExponentVector& e, BigInt c);

  int rank_;
  std::map<ExponentVector, BigInt, GradedLexGreater> terms_;
};

/// Exact quotient, or nullopt if none exists.  Uses leading-term elimination
/// with the same iteration guard idea as the quantum division.
std::optional<ClassicalPoly> try_divide_exact(const ClassicalPoly& a, const ClassicalPoly& d);

/// Specialization q -> 1: forgets the ordering data and evaluates every
/// coefficient at v = 1.
ClassicalPoly specialize_q1(const TorusElement& a);

std::string to_string(const ClassicalPoly& a);
std::ostream& operator<<(std::ostream& os, const ClassicalPoly& a);

}  // namespace qca
