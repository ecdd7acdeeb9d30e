#include "qca/seed.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "qca/parallel.hpp"

namespace qca {

ExchangeMatrix::ExchangeMatrix(int rows, std::vector<int> ex,
                               std::vector<std::vector<int>> entries)
    : rows_(rows), ex_(std::move(ex)), entries_(std::move(entries)) {
  if (rows_ < 1) throw DimensionMismatch("exchange matrix needs at least one row");
  if (ex_.empty()) throw DimensionMismatch("exchange matrix needs at least one column");
  for (std::size_t t = 0; t < ex_.size(); ++t) {
    if (ex_[t] < 0 || ex_[t] >= rows_) {
      throw BadIndexError("exchangeable label out of range");
    }
    if (t > 0 && ex_[t] <= ex_[t - 1]) {
      throw BadIndexError("exchangeable labels must be strictly increasing");
    }
  }
  if (static_cast<int>(entries_.size()) != rows_) {
    throw DimensionMismatch("exchange matrix row count mismatch");
  }
  for (const auto& row : entries_) {
    if (row.size() != ex_.size()) {
      throw DimensionMismatch("exchange matrix column count mismatch");
    }
  }
  // The exchangeable-by-exchangeable block must be skew-symmetric.
  for (std::size_t s = 0; s < ex_.size(); ++s) {
    for (std::size_t t = 0; t < ex_.size(); ++t) {
      if (entry_at(ex_[s], static_cast<int>(t)) != -entry_at(ex_[t], static_cast<int>(s))) {
        throw Error("principal part of the exchange matrix is not skew-symmetric");
      }
    }
  }
}

bool ExchangeMatrix::is_exchangeable(int label) const {
  return std::binary_search(ex_.begin(), ex_.end(), label);
}

int ExchangeMatrix::column_of(int label) const {
  auto it = std::lower_bound(ex_.begin(), ex_.end(), label);
  if (it == ex_.end() || *it != label) {
    throw BadIndexError("label is not exchangeable");
  }
  return static_cast<int>(it - ex_.begin());
}

int ExchangeMatrix::b(int i, int label) const { return entry_at(i, column_of(label)); }

int ExchangeMatrix::entry_at(int i, int col) const {
  if (i < 0 || i >= rows_ || col < 0 || col >= cols()) {
    throw BadIndexError("exchange matrix entry out of range");
  }
  return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
}

namespace {

// The m x m matrix E_eps of the mutation in direction k: identity except in
// column k, where e_kk = -1 and e_ik = max(0, -eps * b_ik) for i != k.
std::vector<std::vector<int>> build_e(const ExchangeMatrix& b, int k, int eps) {
  const int m = b.rows();
  std::vector<std::vector<int>> e(static_cast<std::size_t>(m),
                                  std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) e[i][i] = 1;
  for (int i = 0; i < m; ++i) {
    e[i][k] = (i == k) ? -1 : std::max(0, -eps * b.b(i, k));
  }
  return e;
}

}  // namespace

ExchangeMatrix ExchangeMatrix::mutated(int k, int eps) const {
  if (!is_exchangeable(k)) throw BadIndexError("mutation label is not exchangeable");
  if (eps != 1 && eps != -1) throw BadIndexError("mutation sign must be +1 or -1");
  const int m = rows_;
  const int n = cols();
  const auto e = build_e(*this, k, eps);
  // F_eps (n x n over column positions): identity except in the row of k,
  // where f_kk = -1 and f_kj = max(0, eps * b_kj) for j != k.
  std::vector<std::vector<int>> f(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  const int kc = column_of(k);
  for (int t = 0; t < n; ++t) f[t][t] = 1;
  for (int t = 0; t < n; ++t) {
    f[kc][t] = (t == kc) ? -1 : std::max(0, eps * entry_at(k, t));
  }
  // B' = E * B * F.
  std::vector<std::vector<int>> eb(static_cast<std::size_t>(m),
                                   std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < m; ++i) {
    for (int t = 0; t < n; ++t) {
      long long s = 0;
      for (int r = 0; r < m; ++r) s += static_cast<long long>(e[i][r]) * entry_at(r, t);
      eb[i][t] = static_cast<int>(s);
    }
  }
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < m; ++i) {
    for (int t = 0; t < n; ++t) {
      long long s = 0;
      for (int r = 0; r < n; ++r) s += static_cast<long long>(eb[i][r]) * f[r][t];
      out[i][t] = static_cast<int>(s);
    }
  }
  return ExchangeMatrix(m, ex_, std::move(out));
}

SkewForm mutate_form(const SkewForm& form, const ExchangeMatrix& b, int k, int eps) {
  if (!b.is_exchangeable(k)) throw BadIndexError("mutation label is not exchangeable");
  if (eps != 1 && eps != -1) throw BadIndexError("mutation sign must be +1 or -1");
  if (form.rank() != b.rows()) {
    throw DimensionMismatch("form rank does not match the exchange matrix");
  }
  const int m = form.rank();
  const auto e = build_e(b, k, eps);
  // Lambda' = E^T Lambda E.
  std::vector<std::vector<int>> le(static_cast<std::size_t>(m),
                                   std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      long long s = 0;
      for (int r = 0; r < m; ++r) s += static_cast<long long>(form.entry(i, r)) * e[r][j];
      le[i][j] = static_cast<int>(s);
    }
  }
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m),
                                    std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      long long s = 0;
      for (int r = 0; r < m; ++r) s += static_cast<long long>(e[r][i]) * le[r][j];
      out[i][j] = static_cast<int>(s);
    }
  }
  return SkewForm(std::move(out));
}

CompatiblePair::CompatiblePair(SkewForm form, ExchangeMatrix b, std::map<int, long long> d)
    : form_(std::move(form)), b_(std::move(b)), d_(std::move(d)) {}

long long CompatiblePair::d(int label) const {
  auto it = d_.find(label);
  if (it == d_.end()) throw BadIndexError("label is not exchangeable");
  return it->second;
}

CompatiblePair check_compatible(SkewForm form, ExchangeMatrix b) {
  if (form.rank() != b.rows()) {
    throw DimensionMismatch("form rank does not match the exchange matrix");
  }
  const int m = form.rank();
  std::map<int, long long> d;
  // (B^T Lambda)_{ji} = sum_t b_{tj} lambda_{ti} must be d_j delta_{ij}.
  for (int j : b.ex()) {
    for (int i = 0; i < m; ++i) {
      long long v = 0;
      for (int t = 0; t < m; ++t) {
        v += static_cast<long long>(b.b(t, j)) * form.entry(t, i);
      }
      if (i == j) {
        if (v < 1) {
          std::ostringstream os;
          os << "compatibility failed: (B^T Lambda)[" << j << "][" << i << "] = " << v
             << ", expected a positive multiplier";
          throw NotCompatibleError(i, j, v, os.str());
        }
        d[j] = v;
      } else if (v != 0) {
        std::ostringstream os;
        os << "compatibility failed: (B^T Lambda)[" << j << "][" << i << "] = " << v
           << ", expected 0";
        throw NotCompatibleError(i, j, v, os.str());
      }
    }
  }
  return CompatiblePair(std::move(form), std::move(b), std::move(d));
}

CompatiblePair CompatiblePair::mutated(int k, int eps) const {
  CompatiblePair out = check_compatible(mutate_form(form_, b_, k, eps), b_.mutated(k, eps));
  if (out.d_ != d_) {
    throw Error("mutation changed the compatibility multipliers");
  }
  return out;
}

QuantumSeed::QuantumSeed(CompatiblePair pair, std::vector<TorusElement> vars,
                         std::vector<int> history)
    : pair_(std::move(pair)), vars_(std::move(vars)), history_(std::move(history)) {
  if (static_cast<int>(vars_.size()) != pair_.form().rank()) {
    throw DimensionMismatch("seed needs one variable per lattice direction");
  }
  validate();
}

QuantumSeed QuantumSeed::initial(const CompatiblePair& pair) {
  const int m = pair.form().rank();
  std::vector<TorusElement> vars;
  vars.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    vars.push_back(TorusElement::monomial(pair.form(), unit_vector(m, i)));
  }
  return QuantumSeed(pair, std::move(vars));
}

const TorusElement& QuantumSeed::var(int i) const {
  if (i < 0 || i >= static_cast<int>(vars_.size())) {
    throw BadIndexError("variable index out of range");
  }
  return vars_[static_cast<std::size_t>(i)];
}

void QuantumSeed::validate() const {
  const int m = static_cast<int>(vars_.size());
  for (int i = 0; i < m; ++i) {
    if (vars_[static_cast<std::size_t>(i)].is_zero()) {
      throw Error("seed variable is zero");
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto r = quasi_commutation_exponent(vars_[static_cast<std::size_t>(i)],
                                                vars_[static_cast<std::size_t>(j)]);
      const long long want = 2LL * pair_.form().entry(i, j);
      if (!r || *r != want) {
        std::ostringstream os;
        os << "seed variables " << i << " and " << j
           << " do not quasi-commute with the seed form exponent";
        throw Error(os.str());
      }
    }
  }
}

TorusElement QuantumSeed::frame_monomial(const ExponentVector& c) const {
  const int m = static_cast<int>(vars_.size());
  if (static_cast<int>(c.size()) != m) {
    throw DimensionMismatch("frame_monomial: coordinate rank mismatch");
  }
  // Ordered product vars_0^{c_0} ... vars_{m-1}^{c_{m-1}} equals
  // q^{ordered_twist(c)/2} M(c); correct by the inverse power of v.
  const SkewForm& ambient = vars_.front().form();
  TorusElement p = TorusElement::scalar(ambient, HalfPowerLaurent::one());
  for (int i = 0; i < m; ++i) {
    const int ci = c[static_cast<std::size_t>(i)];
    for (int t = 0; t < ci; ++t) p = p * vars_[static_cast<std::size_t>(i)];
    for (int t = 0; t > ci; --t) p = exact_right_divide(p, vars_[static_cast<std::size_t>(i)]);
  }
  const long long tw = pair_.form().ordered_twist(c);
  p *= HalfPowerLaurent::v_pow(static_cast<int>(-tw));
  return p;
}

QuantumSeed QuantumSeed::mutate(int k) const {
  const ExchangeMatrix& b = pair_.b();
  if (!b.is_exchangeable(k)) throw BadIndexError("mutation label is not exchangeable");
  const int m = b.rows();
  ExponentVector cplus(static_cast<std::size_t>(m), 0);
  ExponentVector cminus(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    const int bik = b.b(i, k);
    if (bik > 0) cplus[static_cast<std::size_t>(i)] = bik;
    if (bik < 0) cminus[static_cast<std::size_t>(i)] = -bik;
  }
  const ExponentVector ek = unit_vector(m, k);
  // X_k' = [ q^{L(c+,e_k)/2} M(c+) + q^{L(c-,e_k)/2} M(c-) ] / X_k,
  // dividing on the right by the old variable.
  TorusElement numerator =
      HalfPowerLaurent::v_pow(static_cast<int>(pair_.form().bilinear(cplus, ek))) *
          frame_monomial(cplus) +
      HalfPowerLaurent::v_pow(static_cast<int>(pair_.form().bilinear(cminus, ek))) *
          frame_monomial(cminus);
  TorusElement fresh = exact_right_divide(numerator, vars_[static_cast<std::size_t>(k)]);

  std::vector<TorusElement> vars = vars_;
  vars[static_cast<std::size_t>(k)] = std::move(fresh);
  std::vector<int> hist = history_;
  hist.push_back(k);
  return QuantumSeed(pair_.mutated(k), std::move(vars), std::move(hist));
}

std::string canonical_key(const TorusElement& a) {
  std::ostringstream os;
  for (const auto& [e, c] : a.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) os << ',';
      os << e[i];
    }
    os << ':';
    for (const auto& [k, coeff] : c.terms()) {
      os << '(' << k << ',' << coeff.str() << ')';
    }
    os << ';';
  }
  return os.str();
}

namespace {

std::string seed_key(const QuantumSeed& s) {
  std::vector<std::string> parts;
  parts.reserve(s.vars().size());
  for (const auto& v : s.vars()) parts.push_back(canonical_key(v));
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) {
    key += p;
    key += '|';
  }
  return key;
}

// When a freshly mutated seed collides with an already known node, the two
// must agree up to the permutation matching their variables; in particular
// the permuted forms must coincide.  Anything else is an internal error.
void check_collision_consistency(const QuantumSeed& fresh, const QuantumSeed& known) {
  const int m = static_cast<int>(fresh.vars().size());
  std::vector<int> perm(static_cast<std::size_t>(m), -1);
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  for (int i = 0; i < m; ++i) {
    const std::string ki = canonical_key(fresh.var(i));
    for (int j = 0; j < m; ++j) {
      if (!used[static_cast<std::size_t>(j)] && canonical_key(known.var(j)) == ki) {
        perm[static_cast<std::size_t>(i)] = j;
        used[static_cast<std::size_t>(j)] = true;
        break;
      }
    }
    if (perm[static_cast<std::size_t>(i)] < 0) {
      throw Error("exchange graph: colliding seeds do not share their variable multiset");
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (fresh.pair().form().entry(i, j) !=
          known.pair().form().entry(perm[static_cast<std::size_t>(i)],
                                    perm[static_cast<std::size_t>(j)])) {
        throw Error("exchange graph: colliding seeds carry different forms");
      }
    }
  }
}

}  // namespace

ExchangeGraph enumerate_exchange_graph(const QuantumSeed& start, std::size_t max_seeds) {
  ExchangeGraph g;
  std::map<std::string, int> index_of;
  std::set<std::string> var_seen;

  auto note_vars = [&](const QuantumSeed& s) {
    for (const auto& v : s.vars()) {
      if (var_seen.insert(canonical_key(v)).second) g.distinct_variables.push_back(v);
    }
  };

  if (max_seeds == 0) {
    g.truncated = true;
    return g;
  }
  g.nodes.push_back(start);
  index_of.emplace(seed_key(start), 0);
  note_vars(start);

  std::vector<int> frontier{0};
  const std::vector<int> ex = start.pair().b().ex();
  std::vector<std::array<int, 3>> edge_set;

  while (!frontier.empty() && !g.truncated) {
    // Expand the whole level in parallel, then merge in a fixed order.
    std::vector<std::optional<QuantumSeed>> children(frontier.size() * ex.size());
    parallel_for(children.size(), [&](std::size_t idx) {
      const int node = frontier[idx / ex.size()];
      const int k = ex[idx % ex.size()];
      children[idx].emplace(g.nodes[static_cast<std::size_t>(node)].mutate(k));
    });

    std::vector<int> next;
    for (std::size_t idx = 0; idx < children.size(); ++idx) {
      const int from = frontier[idx / ex.size()];
      const int k = ex[idx % ex.size()];
      QuantumSeed& child = *children[idx];
      const std::string key = seed_key(child);
      auto it = index_of.find(key);
      int to;
      if (it != index_of.end()) {
        to = it->second;
        check_collision_consistency(child, g.nodes[static_cast<std::size_t>(to)]);
      } else {
        if (g.nodes.size() >= max_seeds) {
          g.truncated = true;
          break;
        }
        to = static_cast<int>(g.nodes.size());
        index_of.emplace(key, to);
        note_vars(child);
        g.nodes.push_back(std::move(child));
        next.push_back(to);
      }
      const std::array<int, 3> edge{std::min(from, to), std::max(from, to), k};
      if (std::find_if(edge_set.begin(), edge_set.end(), [&](const auto& e) {
            return e[0] == edge[0] && e[1] == edge[1];
          }) == edge_set.end()) {
        edge_set.push_back(edge);
      }
    }
    frontier = std::move(next);
  }

  g.edges = std::move(edge_set);
  return g;
}

std::vector<ClassicalPoly> classical_mutate(const std::vector<ClassicalPoly>& vars,
                                            const ExchangeMatrix& b, int k) {
  if (static_cast<int>(vars.size()) != b.rows()) {
    throw DimensionMismatch("classical_mutate: variable count mismatch");
  }
  if (!b.is_exchangeable(k)) throw BadIndexError("mutation label is not exchangeable");
  const int rank = vars.front().rank();
  ClassicalPoly plus = ClassicalPoly::constant(rank, 1);
  ClassicalPoly minus = ClassicalPoly::constant(rank, 1);
  for (int i = 0; i < b.rows(); ++i) {
    const int bik = b.b(i, k);
    for (int t = 0; t < bik; ++t) plus = plus * vars[static_cast<std::size_t>(i)];
    for (int t = 0; t > bik; --t) minus = minus * vars[static_cast<std::size_t>(i)];
  }
  auto q = try_divide_exact(plus + minus, vars[static_cast<std::size_t>(k)]);
  if (!q) {
    throw DivisionError(DivisionError::Reason::not_divisible,
                        "classical exchange is not exact");
  }
  std::vector<ClassicalPoly> out = vars;
  out[static_cast<std::size_t>(k)] = *std::move(q);
  return out;
}

}  // namespace qca
