#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qca/qcoeff.hpp"

namespace qca {

/// Exponent vector of a torus monomial X^e; one entry per lattice direction.
using ExponentVector = std::vector<int>;

/// e_i in rank m (0-based i).
ExponentVector unit_vector(int m, int i);

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);

/// Total order on exponent vectors used everywhere a term order is needed:
/// higher coordinate sum first, ties broken lexicographically.  `a < b` in
/// this comparator means a is *larger* in the term order, so a std::map keyed
/// with it iterates leading term first.
struct GradedLexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Skew-symmetric integer bilinear form on Z^m, the commutation data of a
/// quantum torus: X^e X^f = q^{lambda(e,f)/2} X^{e+f}.
class SkewForm {
public:
  /// Validates skew-symmetry (square, lambda_ij = -lambda_ji, zero diagonal).
  explicit SkewForm(std::vector<std::vector<int>> entries);

  static SkewForm zero(int rank);

  int rank() const { return static_cast<int>(entries_.size()); }

  /// Entry lambda_ij, 0-based.
  int entry(int i, int j) const;

  const std::vector<std::vector<int>>& entries() const { return entries_; }

  /// e^T Lambda f.
  long long bilinear(const ExponentVector& e, const ExponentVector& f) const;

  /// sum_{i<j} c_i c_j lambda_ij, the exponent correction that turns an
  /// ordered product of generators into a basis monomial.
  long long ordered_twist(const ExponentVector& c) const;

  bool operator==(const SkewForm& rhs) const { return entries_ == rhs.entries_; }
  bool operator!=(const SkewForm& rhs) const { return !(*this == rhs); }

private:
  std::vector<std::vector<int>> entries_;
};

/// Element of the based quantum torus T(Lambda) over Z[q^{1/2}, q^{-1/2}]:
/// a finite sum of basis monomials X^e with HalfPowerLaurent coefficients.
/// Each element carries its form; mixing forms throws FormMismatch.
class TorusElement {
public:
  /// Zero element of T(form).
  explicit TorusElement(SkewForm form);

  /// c * X^e.
  static TorusElement monomial(const SkewForm& form, ExponentVector e,
                               HalfPowerLaurent c = HalfPowerLaurent::one());

  /// Scalar c * X^0.
  static TorusElement scalar(const SkewForm& form, HalfPowerLaurent c);

  const SkewForm& form() const { return form_; }
  int rank() const { return form_.rank(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of X^e (zero if absent).
  HalfPowerLaurent coeff(const ExponentVector& e) const;

  /// Leading (largest in the term order) monomial; throws on zero.
  const ExponentVector& leading_exponent() const;
  const HalfPowerLaurent& leading_coeff() const;

  /// Terms in the term order, leading first.
  const std::map<ExponentVector, HalfPowerLaurent, GradedLexGreater>& terms() const {
    return terms_;
  }

  TorusElement operator-() const;
  TorusElement& operator+=(const TorusElement& rhs);
  TorusElement& operator-=(const TorusElement& rhs);

  friend TorusElement operator+(TorusElement lhs, const TorusElement& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend TorusElement operator-(TorusElement lhs, const TorusElement& rhs) {
    lhs -= rhs;
    return lhs;
  }

  /// Noncommutative product: X^e X^f = q^{lambda(e,f)/2} X^{e+f} extended
  /// bilinearly.
  friend TorusElement operator*(const TorusElement& lhs, const TorusElement& rhs);

  /// Scale by an element of Z[q^{1/2}, q^{-1/2}].
  TorusElement& operator*=(const HalfPowerLaurent& c);
  friend TorusElement operator*(const HalfPowerLaurent& c, TorusElement a) {
    a *= c;
    return a;
  }

  bool operator==(const TorusElement& rhs) const;
  bool operator!=(const TorusElement& rhs) const { return !(*this == rhs); }

private:
  void set(const ExponentVector& e, HalfPowerLaurent c);
  void check_same_form(const TorusElement& rhs) const;

  SkewForm form_;
  std::map<ExponentVector, HalfPowerLaurent, GradedLexGreater> terms_;
};

/// Product of the listed powers of basis monomials, left to right:
/// X^{e_1}^{k_1} * ... * X^{e_r}^{k_r}.  Negative powers use X^{-e}.
TorusElement ordered_product(const SkewForm& form,
                             const std::vector<std::pair<ExponentVector, int>>& factors);

/// Exact right quotient c with c * d = a.  Requires d's leading coefficient
/// to be a unit (+/- v^k); throws DivisionError otherwise or when no exact
/// quotient exists.  The term order is not a well-order on Laurent monomials,
/// so non-divisibility is detected by an iteration guard of
/// 4096 * max(1, #terms(a)) elimination steps.
TorusElement exact_right_divide(const TorusElement& a, const TorusElement& d);

/// Same as exact_right_divide but reports failure-to-divide as nullopt.
/// Structural errors (zero divisor, non-unit leading coefficient) still throw.
std::optional<TorusElement> try_right_divide(const TorusElement& a, const TorusElement& d);

/// If a * b = q^{r/2} * b * a for some integer r, returns r (exponent of v);
/// returns nullopt when the two elements do not q-commute.  Both inputs must
/// be nonzero.
std::optional<long long> quasi_commutation_exponent(const TorusElement& a,
                                                    const TorusElement& b);

std::string to_string(const TorusElement& a);
std::ostream& operator<<(std::ostream& os, const TorusElement& a);

}  // namespace qca
