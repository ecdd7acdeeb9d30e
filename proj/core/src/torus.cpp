#include "qca/torus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qca {

ExponentVector unit_vector(int m, int i) {
  if (i < 0 || i >= m) throw BadIndexError("unit_vector: index out of range");
  ExponentVector e(static_cast<std::size_t>(m), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

namespace {

void check_same_size(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("exponent vectors of different rank");
}

long long grade(const ExponentVector& a) {
  return std::accumulate(a.begin(), a.end(), 0LL);
}

}  // namespace

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  check_same_size(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  check_same_size(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool GradedLexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const long long ga = grade(a), gb = grade(b);
  if (ga != gb) return ga > gb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

SkewForm::SkewForm(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  const std::size_t m = entries_.size();
  for (const auto& row : entries_) {
    if (row.size() != m) throw DimensionMismatch("skew form matrix is not square");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (entries_[i][j] != -entries_[j][i]) {
        throw Error("skew form matrix is not skew-symmetric");
      }
    }
  }
}

SkewForm SkewForm::zero(int rank) {
  return SkewForm(std::vector<std::vector<int>>(
      static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0)));
}

int SkewForm::entry(int i, int j) const {
  if (i < 0 || j < 0 || i >= rank() || j >= rank()) {
    throw BadIndexError("skew form entry out of range");
  }
  return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

long long SkewForm::bilinear(const ExponentVector& e, const ExponentVector& f) const {
  if (static_cast<int>(e.size()) != rank() || static_cast<int>(f.size()) != rank()) {
    throw DimensionMismatch("bilinear: vector rank does not match the form");
  }
  long long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    long long row = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f[j] != 0) row += static_cast<long long>(entries_[i][j]) * f[j];
    }
    s += static_cast<long long>(e[i]) * row;
  }
  return s;
}

long long SkewForm::ordered_twist(const ExponentVector& c) const {
  if (static_cast<int>(c.size()) != rank()) {
    throw DimensionMismatch("ordered_twist: vector rank does not match the form");
  }
  long long s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[j] != 0) s += static_cast<long long>(c[i]) * c[j] * entries_[i][j];
    }
  }
  return s;
}

TorusElement::TorusElement(SkewForm form) : form_(std::move(form)) {}

TorusElement TorusElement::monomial(const SkewForm& form, ExponentVector e, HalfPowerLaurent c) {
  if (static_cast<int>(e.size()) != form.rank()) {
    throw DimensionMismatch("monomial: exponent rank does not match the form");
  }
  TorusElement r(form);
  if (!c.is_zero()) r.terms_.emplace(std::move(e), std::move(c));
  return r;
}

TorusElement TorusElement::scalar(const SkewForm& form, HalfPowerLaurent c) {
  return monomial(form, ExponentVector(static_cast<std::size_t>(form.rank()), 0), std::move(c));
}

HalfPowerLaurent TorusElement::coeff(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? HalfPowerLaurent::zero() : it->second;
}

const ExponentVector& TorusElement::leading_exponent() const {
  if (terms_.empty()) throw Error("leading_exponent of zero element");
  return terms_.begin()->first;
}

const HalfPowerLaurent& TorusElement::leading_coeff() const {
  if (terms_.empty()) throw Error("leading_coeff of zero element");
  return terms_.begin()->second;
}

void TorusElement::set(const ExponentVector& e, HalfPowerLaurent c) {
  if (c.is_zero()) {
    terms_.erase(e);
  } else {
    terms_[e] = std::move(c);
  }
}

void TorusElement::check_same_form(const TorusElement& rhs) const {
  if (form_ != rhs.form_) throw FormMismatch("torus elements live over different skew forms");
}

TorusElement TorusElement::operator-() const {
  TorusElement r(form_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

TorusElement& TorusElement::operator+=(const TorusElement& rhs) {
  check_same_form(rhs);
  for (const auto& [e, c] : rhs.terms_) set(e, coeff(e) + c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& rhs) {
  check_same_form(rhs);
  for (const auto& [e, c] : rhs.terms_) set(e, coeff(e) - c);
  return *this;
}

TorusElement operator*(const TorusElement& lhs, const TorusElement& rhs) {
  lhs.check_same_form(rhs);
  TorusElement r(lhs.form_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      const long long tw = lhs.form_.bilinear(ea, eb);
      HalfPowerLaurent c = ca * cb;
      if (tw != 0) c = c.shifted(static_cast<int>(tw));
      ExponentVector e = ea + eb;
      r.set(e, r.coeff(e) + c);
    }
  }
  return r;
}

TorusElement& TorusElement::operator*=(const HalfPowerLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, tc] : terms_) tc *= c;
  return *this;
}

bool TorusElement::operator==(const TorusElement& rhs) const {
  return form_ == rhs.form_ && terms_ == rhs.terms_;
}

TorusElement ordered_product(const SkewForm& form,
                             const std::vector<std::pair<ExponentVector, int>>& factors) {
  TorusElement r = TorusElement::scalar(form, HalfPowerLaurent::one());
  for (const auto& [e, k] : factors) {
    if (static_cast<int>(e.size()) != form.rank()) {
      throw DimensionMismatch("ordered_product: exponent rank does not match the form");
    }
    if (k == 0) continue;
    ExponentVector dir = e;
    if (k < 0) {
      for (int& x : dir) x = -x;
    }
    const int reps = k < 0 ? -k : k;
    TorusElement f = TorusElement::monomial(form, dir);
    for (int t = 0; t < reps; ++t) r = r * f;
  }
  return r;
}

namespace {

// Shared worker: nullopt means "no exact quotient".
std::optional<TorusElement> right_divide_impl(const TorusElement& a, const TorusElement& d) {
  if (d.is_zero()) {
    throw DivisionError(DivisionError::Reason::zero_divisor, "right division by zero");
  }
  const HalfPowerLaurent& lead = d.leading_coeff();
  if (!lead.is_unit_monomial()) {
    throw DivisionError(DivisionError::Reason::non_unit_leading,
                        "right division requires a unit leading coefficient in the divisor");
  }
  const int lead_exp = lead.max_exponent();
  const bool lead_neg = lead.leading_coeff() < 0;
  const ExponentVector& ed = d.leading_exponent();
  const SkewForm& form = a.form();

  TorusElement q(form);
  TorusElement r = a;
  // The term order has no global minimum on Laurent monomials, so a
  // non-divisible input descends forever; cap the number of elimination steps.
  const std::size_t guard = 4096 * std::max<std::size_t>(std::size_t{1}, a.term_count());
  std::size_t steps = 0;
  while (!r.is_zero()) {
    if (++steps > guard) return std::nullopt;
    const ExponentVector& er = r.leading_exponent();
    ExponentVector ec = er - ed;
    // Solve (c X^ec)(lead X^ed) = lr X^er for c: the product twists by
    // v^{lambda(ec, ed)} and scales by the unit lead.
    const long long tw = form.bilinear(ec, ed);
    HalfPowerLaurent c = r.leading_coeff().shifted(static_cast<int>(-tw) - lead_exp);
    if (lead_neg) c = -c;
    TorusElement step = TorusElement::monomial(form, std::move(ec), std::move(c));
    q += step;
    r -= step * d;
  }
  return q;
}

}  // namespace

TorusElement exact_right_divide(const TorusElement& a, const TorusElement& d) {
  auto q = right_divide_impl(a, d);
  if (!q) {
    throw DivisionError(DivisionError::Reason::not_divisible,
                        "right division has no exact quotient");
  }
  return *std::move(q);
}

std::optional<TorusElement> try_right_divide(const TorusElement& a, const TorusElement& d) {
  return right_divide_impl(a, d);
}

std::optional<long long> quasi_commutation_exponent(const TorusElement& a,
                                                    const TorusElement& b) {
  if (a.is_zero() || b.is_zero()) {
    throw Error("quasi_commutation_exponent requires nonzero elements");
  }
  const TorusElement ab = a * b;
  const TorusElement ba = b * a;
  // The torus is a domain, so both products are nonzero.
  if (!(ab.leading_exponent() == ba.leading_exponent())) return std::nullopt;
  const HalfPowerLaurent& ca = ab.leading_coeff();
  const HalfPowerLaurent& cb = ba.leading_coeff();
  const long long r = ca.max_exponent() - cb.max_exponent();
  TorusElement shifted = ba;
  shifted *= HalfPowerLaurent::v_pow(static_cast<int>(r));
  if (ab == shifted) return r;
  return std::nullopt;
}

}  // namespace qca
