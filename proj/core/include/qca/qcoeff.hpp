#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "qca/bigint.hpp"
#include "qca/errors.hpp"

namespace qca {

/// Element of Z[q^{1/2}, q^{-1/2}], stored as a Laurent polynomial in the
/// formal half-power v with v^2 = q.  An exponent k therefore means q^{k/2}.
/// The zero polynomial has no terms; nonzero coefficients only.
class HalfPowerLaurent {
public:
  /// Zero.
  HalfPowerLaurent() = default;

  /// Integer constant.
  HalfPowerLaurent(long long value);
  HalfPowerLaurent(BigInt value);

  static HalfPowerLaurent zero() { return HalfPowerLaurent(); }
  static HalfPowerLaurent one() { return HalfPowerLaurent(1); }

  /// v^k, i.e. q^{k/2}.
  static HalfPowerLaurent v_pow(int k);

  /// c * v^k.
  static HalfPowerLaurent term(int k, BigInt c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }

  /// True when the element is +/- v^k for some k (the units of the ring).
  bool is_unit_monomial() const;

  /// Smallest/largest exponent present; throws on zero.
  int min_exponent() const;
  int max_exponent() const;

  /// Coefficient of v^k (zero if absent).
  BigInt coeff(int k) const;

  /// Coefficient of v^{max_exponent()}; throws on zero.
  const BigInt& leading_coeff() const;

  /// Ring homomorphism v -> 1 (so q -> 1).
  BigInt eval_at_one() const;

  /// Terms as (exponent, coefficient) pairs, ascending exponent.
  const std::map<int, BigInt>& terms() const { return terms_; }

  /// Multiply by v^k.
  HalfPowerLaurent shifted(int k) const;

  HalfPowerLaurent operator-() const;
  HalfPowerLaurent& operator+=(const HalfPowerLaurent& rhs);
  HalfPowerLaurent& operator-=(const HalfPowerLaurent& rhs);
  HalfPowerLaurent& operator*=(const HalfPowerLaurent& rhs);

  friend HalfPowerLaurent operator+(HalfPowerLaurent lhs, const HalfPowerLaurent& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend HalfPowerLaurent operator-(HalfPowerLaurent lhs, const HalfPowerLaurent& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend HalfPowerLaurent operator*(const HalfPowerLaurent& lhs, const HalfPowerLaurent& rhs);

  bool operator==(const HalfPowerLaurent& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const HalfPowerLaurent& rhs) const { return !(*this == rhs); }

private:
  void set(int k, BigInt c);

  std::map<int, BigInt> terms_;
};

/// Exact quotient a / b in Z[v, v^{-1}], or nullopt when none exists.
std::optional<HalfPowerLaurent> try_divide_exact(const HalfPowerLaurent& a,
                                                 const HalfPowerLaurent& b);

/// Greatest common divisor in Z[v, v^{-1}], normalized so that the result has
/// min_exponent 0 and positive leading coefficient.  gcd(0, 0) = 0.
HalfPowerLaurent gcd(const HalfPowerLaurent& a, const HalfPowerLaurent& b);

/// Renders in terms of q, e.g. "1 - q^(-1)" or "q^(1/2)".
std::string to_string(const HalfPowerLaurent& a);
std::ostream& operator<<(std::ostream& os, const HalfPowerLaurent& a);

}  // namespace qca
