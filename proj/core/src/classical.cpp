#include "qca/classical.hpp"

#include <algorithm>

namespace qca {

ClassicalPoly::ClassicalPoly(int rank) : rank_(rank) {
  if (rank < 0) throw BadIndexError("ClassicalPoly: negative rank");
}

ClassicalPoly ClassicalPoly::monomial(int rank, ExponentVector e, BigInt c) {
  if (static_cast<int>(e.size()) != rank) {
    throw DimensionMismatch("ClassicalPoly::monomial: exponent rank mismatch");
  }
  ClassicalPoly r(rank);
  if (c != 0) r.terms_.emplace(std::move(e), std::move(c));
  return r;
}

ClassicalPoly ClassicalPoly::constant(int rank, BigInt c) {
  return monomial(rank, ExponentVector(static_cast<std::size_t>(rank), 0), std::move(c));
}

BigInt ClassicalPoly::coeff(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void ClassicalPoly::set(const ExponentVector& e, BigInt c) {
  if (c == 0) {
    terms_.erase(e);
  } else {
    terms_[e] = std::move(c);
  }
}

ClassicalPoly ClassicalPoly::operator-() const {
  ClassicalPoly r(rank_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ClassicalPoly& ClassicalPoly::operator+=(const ClassicalPoly& rhs) {
  if (rank_ != rhs.rank_) throw DimensionMismatch("ClassicalPoly: rank mismatch");
  for (const auto& [e, c] : rhs.terms_) set(e, coeff(e) + c);
  return *this;
}

ClassicalPoly& ClassicalPoly::operator-=(const ClassicalPoly& rhs) {
  if (rank_ != rhs.rank_) throw DimensionMismatch("ClassicalPoly: rank mismatch");
  for (const auto& [e, c] : rhs.terms_) set(e, coeff(e) - c);
  return *this;
}

ClassicalPoly operator*(const ClassicalPoly& lhs, const ClassicalPoly& rhs) {
  if (lhs.rank_ != rhs.rank_) throw DimensionMismatch("ClassicalPoly: rank mismatch");
  ClassicalPoly r(lhs.rank_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      ExponentVector e = ea + eb;
      r.set(e, r.coeff(e) + ca * cb);
    }
  }
  return r;
}

std::optional<ClassicalPoly> try_divide_exact(const ClassicalPoly& a, const ClassicalPoly& d) {
  if (d.is_zero()) return std::nullopt;
  ClassicalPoly r = a;
  ClassicalPoly q(a.rank());
  const auto& dlead = *d.terms().begin();
  const std::size_t guard =
      4096 * std::max<std::size_t>(std::size_t{1}, a.terms().size());
  std::size_t steps = 0;
  while (!r.is_zero()) {
    if (++steps > guard) return std::nullopt;
    const auto& rlead = *r.terms().begin();
    if (rlead.second % dlead.second != 0) return std::nullopt;
    ClassicalPoly t =
        ClassicalPoly::monomial(a.rank(), rlead.first - dlead.first, rlead.second / dlead.second);
    q += t;
    r -= t * d;
  }
  return q;
}

ClassicalPoly specialize_q1(const TorusElement& a) {
  ClassicalPoly r(a.rank());
  for (const auto& [e, c] : a.terms()) {
    r += ClassicalPoly::monomial(a.rank(), e, c.eval_at_one());
  }
  return r;
}

}  // namespace qca
