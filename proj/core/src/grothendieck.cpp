#include "qca/grothendieck.hpp"

#include <algorithm>
#include <deque>

namespace qca {

namespace {

void check_label(int n, int label) {
  if (label < 0 || label > 2 * n || label % 2 != 0) {
    throw BadIndexError("generator label must be even and within [0, 2n]");
  }
}

bool is_normal(const std::vector<int>& word) {
  return std::is_sorted(word.begin(), word.end());
}

}  // namespace

GrothElement::GrothElement(int n) : n_(n) {
  if (n < 1) throw BadIndexError("GrothElement: n must be at least 1");
}

GrothElement GrothElement::one(int n) {
  GrothElement r(n);
  r.terms_.emplace(std::vector<int>{}, HalfPowerLaurent::one());
  return r;
}

GrothElement GrothElement::generator(int n, int label) {
  check_label(n, label);
  GrothElement r(n);
  r.terms_.emplace(std::vector<int>{label}, HalfPowerLaurent::one());
  return r;
}

GrothElement GrothElement::word_monomial(int n, std::vector<int> word, HalfPowerLaurent c) {
  for (int l : word) check_label(n, l);
  if (!is_normal(word)) {
    throw BadIndexError("word_monomial requires a non-decreasing word; use reduce");
  }
  GrothElement r(n);
  if (!c.is_zero()) r.terms_.emplace(std::move(word), std::move(c));
  return r;
}

HalfPowerLaurent GrothElement::coeff(const std::vector<int>& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? HalfPowerLaurent::zero() : it->second;
}

void GrothElement::set(const std::vector<int>& word, HalfPowerLaurent c) {
  if (c.is_zero()) {
    terms_.erase(word);
  } else {
    terms_[word] = std::move(c);
  }
}

GrothElement GrothElement::operator-() const {
  GrothElement r(n_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

GrothElement& GrothElement::operator+=(const GrothElement& rhs) {
  if (n_ != rhs.n_) throw DimensionMismatch("GrothElement: generator range mismatch");
  for (const auto& [w, c] : rhs.terms_) set(w, coeff(w) + c);
  return *this;
}

GrothElement& GrothElement::operator-=(const GrothElement& rhs) {
  if (n_ != rhs.n_) throw DimensionMismatch("GrothElement: generator range mismatch");
  for (const auto& [w, c] : rhs.terms_) set(w, coeff(w) - c);
  return *this;
}

GrothElement& GrothElement::operator*=(const HalfPowerLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, tc] : terms_) tc *= c;
  return *this;
}

GrothElement reduce(int n, const std::vector<int>& word, HalfPowerLaurent c) {
  for (int l : word) check_label(n, l);
  GrothElement out(n);
  if (c.is_zero()) return out;

  std::deque<std::pair<std::vector<int>, HalfPowerLaurent>> work;
  work.emplace_back(word, std::move(c));
  while (!work.empty()) {
    auto [w, wc] = std::move(work.front());
    work.pop_front();

    std::size_t pos = 0;
    bool descent = false;
    for (; pos + 1 < w.size(); ++pos) {
      if (w[pos] > w[pos + 1]) {
        descent = true;
        break;
      }
    }
    if (!descent) {
      out += GrothElement::word_monomial(n, std::move(w), std::move(wc));
      continue;
    }

    const int l1 = w[pos];
    const int l2 = w[pos + 1];
    std::vector<int> swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    if (l1 == l2 + 2) {
      // G_{l} G_{l-2} = q^{-1} G_{l-2} G_l + (1 - q^{-1}).
      std::vector<int> dropped;
      dropped.reserve(w.size() - 2);
      dropped.insert(dropped.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      dropped.insert(dropped.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
      work.emplace_back(std::move(swapped), wc.shifted(-2));
      work.emplace_back(std::move(dropped),
                        wc * (HalfPowerLaurent::one() - HalfPowerLaurent::v_pow(-2)));
    } else {
      // G_{l1} G_{l2} = q^r G_{l2} G_{l1} with r = (-1)^{(l1-l2)/2}.
      const int r = ((l1 - l2) / 2) % 2 == 0 ? 1 : -1;
      work.emplace_back(std::move(swapped), wc.shifted(2 * r));
    }
  }
  return out;
}

GrothElement operator*(const GrothElement& lhs, const GrothElement& rhs) {
  if (lhs.n_ != rhs.n_) throw DimensionMismatch("GrothElement: generator range mismatch");
  GrothElement out(lhs.n_);
  for (const auto& [wa, ca] : lhs.terms_) {
    for (const auto& [wb, cb] : rhs.terms_) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out += reduce(lhs.n_, w, ca * cb);
    }
  }
  return out;
}

GrothTorusMap::GrothTorusMap(int n, std::vector<TorusElement> generator_images)
    : n_(n), images_(std::move(generator_images)) {
  if (n_ < 1) throw BadIndexError("GrothTorusMap: n must be at least 1");
  if (static_cast<int>(images_.size()) != n_ + 1) {
    throw DimensionMismatch("GrothTorusMap needs one image per generator (n + 1 of them)");
  }
  for (const auto& img : images_) {
    if (img.form() != images_.front().form()) {
      throw FormMismatch("GrothTorusMap: generator images live over different forms");
    }
  }
}

const TorusElement& GrothTorusMap::generator_image(int label) const {
  check_label(n_, label);
  return images_[static_cast<std::size_t>(label / 2)];
}

TorusElement GrothTorusMap::image_of_word(const std::vector<int>& word) const {
  for (int l : word) check_label(n_, l);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(word);
    if (it != cache_.end()) return it->second;
  }
  TorusElement img = TorusElement::scalar(form(), HalfPowerLaurent::one());
  // Build from the longest cached prefix to keep the cache effective.
  std::vector<int> prefix;
  prefix.reserve(word.size());
  {
    std::lock_guard<std::mutex> lock(mutex_);
    for (std::size_t len = word.size(); len > 0; --len) {
      std::vector<int> p(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(len - 1));
      auto it = cache_.find(p);
      if (it != cache_.end()) {
        img = it->second;
        prefix = std::move(p);
        break;
      }
    }
  }
  for (std::size_t i = prefix.size(); i < word.size(); ++i) {
    img = img * generator_image(word[i]);
    std::vector<int> p(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(std::move(p), img);
  }
  return img;
}

TorusElement GrothTorusMap::operator()(const GrothElement& a) const {
  if (a.n() != n_) throw DimensionMismatch("GrothTorusMap: generator range mismatch");
  TorusElement out(form());
  for (const auto& [w, c] : a.terms()) {
    out += c * image_of_word(w);
  }
  return out;
}

namespace {

// splitmix64, used to derive independent per-sample streams from one seed.
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<int> random_word(std::uint64_t seed, int n, std::size_t max_len) {
  std::uint64_t state = seed;
  const std::size_t len = static_cast<std::size_t>(splitmix64(state) % (max_len + 1));
  std::vector<int> w(len);
  for (auto& l : w) {
    l = 2 * static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n + 1));
  }
  return w;
}

bool hom_pair_holds(const GrothTorusMap& map, const std::vector<int>& w1,
                    const std::vector<int>& w2) {
  const GrothElement a = reduce(map.n(), w1);
  const GrothElement b = reduce(map.n(), w2);
  const TorusElement lhs = map(a * b);
  const TorusElement rhs = map(a) * map(b);
  return lhs == rhs;
}

constexpr std::size_t kMaxReportedFailures = 16;

}  // namespace

HomReport check_homomorphism(const GrothTorusMap& map, std::size_t samples,
                             std::size_t max_len, std::uint64_t rng_seed) {
  HomReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    std::uint64_t state = rng_seed + 0x9e3779b97f4a7c15ULL * (s + 1);
    const std::vector<int> w1 = random_word(splitmix64(state), map.n(), max_len);
    const std::vector<int> w2 = random_word(splitmix64(state), map.n(), max_len);
    ++report.pairs_checked;
    if (!hom_pair_holds(map, w1, w2)) {
      ++report.failures;
      if (report.failing_pairs.size() < kMaxReportedFailures) {
        report.failing_pairs.emplace_back(w1, w2);
      }
    }
  }
  return report;
}

namespace {

// All words (arbitrary letter sequences) of length <= max_len over the even
// labels, ordered by length then lexicographically.
std::vector<std::vector<int>> all_words(int n, std::size_t max_len) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> level{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : level) {
      for (int l = 0; l <= 2 * n; l += 2) {
        std::vector<int> e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace

HomReport check_homomorphism_exhaustive(const GrothTorusMap& map, std::size_t max_len) {
  HomReport report;
  const auto words = all_words(map.n(), max_len);
  // Pre-reduce and pre-evaluate every word once.
  std::vector<GrothElement> reduced;
  std::vector<TorusElement> evaluated;
  reduced.reserve(words.size());
  evaluated.reserve(words.size());
  for (const auto& w : words) {
    GrothElement r = reduce(map.n(), w);
    evaluated.push_back(map(r));
    reduced.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      ++report.pairs_checked;
      const TorusElement lhs = map(reduced[i] * reduced[j]);
      const TorusElement rhs = evaluated[i] * evaluated[j];
      if (lhs != rhs) {
        ++report.failures;
        if (report.failing_pairs.size() < kMaxReportedFailures) {
          report.failing_pairs.emplace_back(words[i], words[j]);
        }
      }
    }
  }
  return report;
}

std::vector<std::vector<int>> normal_words(int n, std::size_t max_len) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> level{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : level) {
      for (int l = w.empty() ? 0 : w.back(); l <= 2 * n; l += 2) {
        std::vector<int> e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

IndependenceReport check_independence(const GrothTorusMap& map, std::size_t max_degree) {
  const auto words = normal_words(map.n(), max_degree);
  // Column space: all torus monomials in any image, in the term order.
  std::map<ExponentVector, std::size_t, GradedLexGreater> columns;
  std::vector<TorusElement> images;
  images.reserve(words.size());
  for (const auto& w : words) {
    images.push_back(map.image_of_word(w));
    for (const auto& [e, c] : images.back().terms()) columns.emplace(e, 0);
  }
  std::size_t ci = 0;
  for (auto& [e, idx] : columns) idx = ci++;

  std::vector<std::vector<HalfPowerLaurent>> m(
      images.size(), std::vector<HalfPowerLaurent>(columns.size()));
  for (std::size_t r = 0; r < images.size(); ++r) {
    for (const auto& [e, c] : images[r].terms()) m[r][columns.at(e)] = c;
  }

  // Bareiss fraction-free elimination; every division is exact over the
  // coefficient ring, so the rank is the rank over the fraction field.
  const std::size_t rows = m.size();
  const std::size_t cols = columns.size();
  HalfPowerLaurent prev = HalfPowerLaurent::one();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        HalfPowerLaurent num = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        auto q = try_divide_exact(num, prev);
        if (!q) throw Error("fraction-free elimination: inexact division");
        m[i][j] = *std::move(q);
      }
      m[i][col] = HalfPowerLaurent::zero();
    }
    prev = m[rank][col];
    ++rank;
  }

  IndependenceReport report;
  report.words = words.size();
  report.rank = rank;
  report.independent = rank == words.size();
  return report;
}

void GeneratorSpan::extend_to_length(std::size_t max_len) {
  if (any_built_ && max_len <= built_len_) return;
  const auto words = normal_words(map_.n(), max_len);
  for (const auto& w : words) {
    if (any_built_ && w.size() <= built_len_) continue;
    Pivot p{map_.image_of_word(w),
            GrothElement::word_monomial(map_.n(), w)};
    // Fraction-free reduction against the existing pivots; the invariant
    // map(comb) == img is preserved exactly.
    while (!p.img.is_zero()) {
      auto it = pivot_by_lead_.find(p.img.leading_exponent());
      if (it == pivot_by_lead_.end()) break;
      const Pivot& q = pivots_[it->second];
      const HalfPowerLaurent cr = p.img.leading_coeff();
      const HalfPowerLaurent cq = q.img.leading_coeff();
      TorusElement img = p.img;
      img *= cq;
      TorusElement sub = q.img;
      sub *= cr;
      p.img = img - sub;
      GrothElement comb = p.comb;
      comb *= cq;
      GrothElement csub = q.comb;
      csub *= cr;
      p.comb = comb - csub;
    }
    if (p.img.is_zero()) continue;
    // Normalize by the common content to keep coefficients small.
    HalfPowerLaurent g = HalfPowerLaurent::zero();
    for (const auto& [e, c] : p.img.terms()) g = gcd(g, c);
    for (const auto& [w2, c] : p.comb.terms()) g = gcd(g, c);
    if (!g.is_zero() && !g.is_one()) {
      TorusElement img(p.img.form());
      for (const auto& [e, c] : p.img.terms()) {
        img += TorusElement::monomial(p.img.form(), e, *try_divide_exact(c, g));
      }
      GrothElement comb(map_.n());
      for (const auto& [w2, c] : p.comb.terms()) {
        comb += GrothElement::word_monomial(map_.n(), w2, *try_divide_exact(c, g));
      }
      p.img = std::move(img);
      p.comb = std::move(comb);
    }
    pivot_by_lead_.emplace(p.img.leading_exponent(), pivots_.size());
    pivots_.push_back(std::move(p));
  }
  built_len_ = any_built_ ? std::max(built_len_, max_len) : max_len;
  any_built_ = true;
}

std::optional<GrothElement> GeneratorSpan::express(const TorusElement& target) const {
  // Invariant maintained below: den * target == map(comb) + r.
  HalfPowerLaurent den = HalfPowerLaurent::one();
  GrothElement comb(map_.n());
  TorusElement r = target;
  while (!r.is_zero()) {
    auto it = pivot_by_lead_.find(r.leading_exponent());
    if (it == pivot_by_lead_.end()) return std::nullopt;
    const Pivot& p = pivots_[it->second];
    const HalfPowerLaurent cr = r.leading_coeff();
    const HalfPowerLaurent cp = p.img.leading_coeff();
    TorusElement rs = r;
    rs *= cp;
    TorusElement sub = p.img;
    sub *= cr;
    r = rs - sub;
    GrothElement cs = comb;
    cs *= cp;
    GrothElement padd = p.comb;
    padd *= cr;
    comb = cs + padd;
    den *= cp;
  }
  // Clear the denominator: coordinates in the span are unique, so each
  // coefficient must be divisible exactly when the target lies in the ring
  // span.
  GrothElement out(map_.n());
  for (const auto& [w, c] : comb.terms()) {
    auto q = try_divide_exact(c, den);
    if (!q) return std::nullopt;
    out += GrothElement::word_monomial(map_.n(), w, *std::move(q));
  }
  return out;
}

std::optional<GrothElement> express_in_generators(const GrothTorusMap& map,
                                                  const TorusElement& target,
                                                  std::size_t max_len) {
  GeneratorSpan span(map);
  span.extend_to_length(max_len);
  return span.express(target);
}

}  // namespace qca
