#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qca/torus.hpp"

namespace qca {

/// Element of the presented algebra with generators G_0, G_2, ..., G_{2n}
/// over Z[q^{1/2}, q^{-1/2}] and relations
///   G_l G_{l-2} = q^{-1} G_{l-2} G_l + (1 - q^{-1})          (adjacent)
///   G_{l1} G_{l2} = q^r G_{l2} G_{l1}, r = (-1)^{(l1-l2)/2}  (|l1-l2| >= 4)
/// stored in the normal form basis of non-decreasing words.  A word is a
/// sequence of even labels in [0, 2n]; the empty word is the unit.
class GrothElement {
public:
  /// Zero element over generators up to label 2n.
  explicit GrothElement(int n);

  static GrothElement one(int n);

  /// Single generator G_label (label even, 0 <= label <= 2n).
  static GrothElement generator(int n, int label);

  /// c times an already normal (non-decreasing) word; throws on a word that
  /// is not normal or has invalid labels.
  static GrothElement word_monomial(int n, std::vector<int> word,
                                    HalfPowerLaurent c = HalfPowerLaurent::one());

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }

  HalfPowerLaurent coeff(const std::vector<int>& word) const;

  /// Normal words with coefficients, lexicographically ascending.
  const std::map<std::vector<int>, HalfPowerLaurent>& terms() const { return terms_; }

  GrothElement operator-() const;
  GrothElement& operator+=(const GrothElement& rhs);
  GrothElement& operator-=(const GrothElement& rhs);

  friend GrothElement operator+(GrothElement lhs, const GrothElement& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend GrothElement operator-(GrothElement lhs, const GrothElement& rhs) {
    lhs -= rhs;
    return lhs;
  }

  /// Product in the presented algebra: concatenates words and rewrites to
  /// normal form.
  friend GrothElement operator*(const GrothElement& lhs, const GrothElement& rhs);

  GrothElement& operator*=(const HalfPowerLaurent& c);
  friend GrothElement operator*(const HalfPowerLaurent& c, GrothElement a) {
    a *= c;
    return a;
  }

  bool operator==(const GrothElement& rhs) const {
    return n_ == rhs.n_ && terms_ == rhs.terms_;
  }
  bool operator!=(const GrothElement& rhs) const { return !(*this == rhs); }

private:
  void set(const std::vector<int>& word, HalfPowerLaurent c);

  int n_;
  std::map<std::vector<int>, HalfPowerLaurent> terms_;
};

/// Rewrites c times an arbitrary word to normal form by repeatedly resolving
/// the leftmost descent with the defining relations.  Terminates because a
/// swap lowers the inversion count and the adjacent rule's second branch
/// shortens the word.
GrothElement reduce(int n, const std::vector<int>& word,
                    HalfPowerLaurent c = HalfPowerLaurent::one());

/// Evaluation of the presented algebra in a quantum torus: G_{2t} maps to
/// generator_images[t].  Caches word images; safe for concurrent use.
class GrothTorusMap {
public:
  GrothTorusMap(int n, std::vector<TorusElement> generator_images);

  int n() const { return n_; }
  const SkewForm& form() const { return images_.front().form(); }
  const TorusElement& generator_image(int label) const;

  TorusElement image_of_word(const std::vector<int>& word) const;
  TorusElement operator()(const GrothElement& a) const;

private:
  int n_;
  std::vector<TorusElement> images_;
  mutable std::map<std::vector<int>, TorusElement> cache_;
  mutable std::mutex mutex_;
};

/// Result of sampling or exhausting the multiplicativity check
/// map(a * b) == map(a) * map(b) on reduced random words.
struct HomReport {
  std::size_t pairs_checked = 0;
  std::size_t failures = 0;
  /// First few failing word pairs, for diagnostics.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> failing_pairs;
};

/// Randomized check over `samples` pairs of words of length <= max_len with
/// uniformly random letters; deterministic for a fixed seed.
HomReport check_homomorphism(const GrothTorusMap& map, std::size_t samples,
                             std::size_t max_len, std::uint64_t rng_seed);

/// Exhaustive check over all pairs of words of length <= max_len.
HomReport check_homomorphism_exhaustive(const GrothTorusMap& map, std::size_t max_len);

/// All normal words of length <= max_len, ordered by length then
/// lexicographically.
std::vector<std::vector<int>> normal_words(int n, std::size_t max_len);

struct IndependenceReport {
  std::size_t words = 0;
  std::size_t rank = 0;
  bool independent = false;
};

/// Linear independence over Z[q^{1/2}, q^{-1/2}] of the images of all normal
/// words of length <= max_degree, by fraction-free (Bareiss) elimination,
/// i.e. exact rank over the fraction field of the coefficient ring.
IndependenceReport check_independence(const GrothTorusMap& map, std::size_t max_degree);

/// Incrementally echelonized span of the images of normal words.  Supports
/// expressing a torus element as a Z[q^{1/2}, q^{-1/2}]-combination of normal
/// words.  All arithmetic is fraction-free; denominators are cleared at the
/// end by exact division (valid because the word images are independent).
class GeneratorSpan {
public:
  explicit GeneratorSpan(const GrothTorusMap& map) : map_(map) {}

  /// Ensure all normal words of length <= max_len are inserted.
  void extend_to_length(std::size_t max_len);

  std::size_t pivot_count() const { return pivots_.size(); }

  /// Expresses the target exactly, or nullopt when it lies outside the span
  /// at the current length (or has non-ring coordinates).
  std::optional<GrothElement> express(const TorusElement& target) const;

private:
  struct Pivot {
    TorusElement img;
    GrothElement comb;
  };

  const GrothTorusMap& map_;
  std::vector<Pivot> pivots_;
  std::map<ExponentVector, std::size_t, GradedLexGreater> pivot_by_lead_;
  std::size_t built_len_ = 0;
  bool any_built_ = false;
};

/// One-shot convenience around GeneratorSpan.
std::optional<GrothElement> express_in_generators(const GrothTorusMap& map,
                                                  const TorusElement& target,
                                                  std::size_t max_len);

std::string to_string(const GrothElement& a);
std::ostream& operator<<(std::ostream& os, const GrothElement& a);

}  // namespace qca
