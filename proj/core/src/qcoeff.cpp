#include "qca/qcoeff.hpp"

#include <algorithm>

namespace qca {

HalfPowerLaurent::HalfPowerLaurent(long long value) {
  if (value != 0) terms_[0] = BigInt(value);
}

HalfPowerLaurent::HalfPowerLaurent(BigInt value) {
  if (value != 0) terms_[0] = std::move(value);
}

HalfPowerLaurent HalfPowerLaurent::v_pow(int k) {
  HalfPowerLaurent r;
  r.terms_[k] = 1;
  return r;
}

HalfPowerLaurent HalfPowerLaurent::term(int k, BigInt c) {
  HalfPowerLaurent r;
  if (c != 0) r.terms_[k] = std::move(c);
  return r;
}

bool HalfPowerLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool HalfPowerLaurent::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const BigInt& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

int HalfPowerLaurent::min_exponent() const {
  if (terms_.empty()) throw Error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int HalfPowerLaurent::max_exponent() const {
  if (terms_.empty()) throw Error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

BigInt HalfPowerLaurent::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? BigInt(0) : it->second;
}

const BigInt& HalfPowerLaurent::leading_coeff() const {
  if (terms_.empty()) throw Error("leading_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

BigInt HalfPowerLaurent::eval_at_one() const {
  BigInt s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

HalfPowerLaurent HalfPowerLaurent::shifted(int k) const {
  HalfPowerLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

HalfPowerLaurent HalfPowerLaurent::operator-() const {
  HalfPowerLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

void HalfPowerLaurent::set(int k, BigInt c) {
  if (c == 0) {
    terms_.erase(k);
  } else {
    terms_[k] = std::move(c);
  }
}

HalfPowerLaurent& HalfPowerLaurent::operator+=(const HalfPowerLaurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) set(e, coeff(e) + c);
  return *this;
}

HalfPowerLaurent& HalfPowerLaurent::operator-=(const HalfPowerLaurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) set(e, coeff(e) - c);
  return *this;
}

HalfPowerLaurent operator*(const HalfPowerLaurent& lhs, const HalfPowerLaurent& rhs) {
  HalfPowerLaurent r;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    }
  }
  return r;
}

HalfPowerLaurent& HalfPowerLaurent::operator*=(const HalfPowerLaurent& rhs) {
  *this = *this * rhs;
  return *this;
}

std::optional<HalfPowerLaurent> try_divide_exact(const HalfPowerLaurent& a,
                                                 const HalfPowerLaurent& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return HalfPowerLaurent::zero();

  // Long division from the top.  If an exact quotient exists, the divisor's
  // leading coefficient divides every intermediate leading coefficient.
  HalfPowerLaurent r = a;
  HalfPowerLaurent q;
  const int db = b.max_exponent();
  const BigInt& lb = b.leading_coeff();
  // Lower bound: an exact quotient has min exponent a.min - b.min, so the
  // remainder can never legitimately drop below that plus b.min.
  while (!r.is_zero()) {
    const int dr = r.max_exponent();
    if (dr - db + b.min_exponent() < a.min_exponent()) return std::nullopt;
    const BigInt& lr = r.leading_coeff();
    if (lr % lb != 0) return std::nullopt;
    HalfPowerLaurent t = HalfPowerLaurent::term(dr - db, lr / lb);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

// Dense polynomial helpers over Z for the gcd computation.  Index i holds the
// coefficient of v^i; the vector is kept trimmed (trailing zeros removed).
using Dense = std::vector<BigInt>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

BigInt content(const Dense& p) {
  BigInt g = 0;
  for (const BigInt& c : p) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Dense scaled_down(const Dense& p, const BigInt& d) {
  Dense r = p;
  for (BigInt& c : r) c /= d;
  return r;
}

// Pseudo-remainder: scales by lc(b) once per elimination step, which is all
// the primitive remainder sequence below needs.
Dense pseudo_rem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t da = a.size() - 1;
    BigInt la = a.back();
    for (BigInt& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) {
      a[da - db + i] -= la * b[i];
    }
    trim(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  BigInt ca = content(a), cb = content(b);
  Dense pa = scaled_down(a, ca), pb = scaled_down(b, cb);
  // Primitive polynomial remainder sequence.
  while (true) {
    if (pa.size() < pb.size()) pa.swap(pb);
    Dense r = pseudo_rem(pa, pb);
    trim(r);
    if (r.empty()) break;
    BigInt cr = content(r);
    pa = pb;
    pb = scaled_down(r, cr);
  }
  BigInt cg = int_gcd(ca, cb);
  Dense g = pb;
  for (BigInt& c : g) c *= cg;
  if (!g.empty() && g.back() < 0) {
    for (BigInt& c : g) c = -c;
  }
  return g;
}

}  // namespace

HalfPowerLaurent gcd(const HalfPowerLaurent& a, const HalfPowerLaurent& b) {
  if (a.is_zero() && b.is_zero()) return HalfPowerLaurent::zero();
  auto to_dense = [](const HalfPowerLaurent& p) {
    Dense d;
    if (p.is_zero()) return d;
    int lo = p.min_exponent();
    d.assign(static_cast<std::size_t>(p.max_exponent() - lo) + 1, BigInt(0));
    for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - lo)] = c;
    return d;
  };
  Dense g = dense_gcd(to_dense(a), to_dense(b));
  // Normalize as a Laurent gcd: drop the v-power factor entirely.
  std::size_t low = 0;
  while (low < g.size() && g[low] == 0) ++low;
  HalfPowerLaurent r;
  for (std::size_t i = low; i < g.size(); ++i) {
    if (g[i] != 0) r += HalfPowerLaurent::term(static_cast<int>(i - low), g[i]);
  }
  return r;
}

}  // namespace qca
