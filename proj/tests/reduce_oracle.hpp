#pragma once

#include <deque>
#include <random>
#include <utility>
#include <vector>

#include "qca/grothendieck.hpp"

namespace qca::testutil {

/// Rewrites by resolving a randomly chosen descent at each step instead of
/// the leftmost one.  Agreement with reduce() for every strategy is the
/// confluence of the rewriting system.
inline GrothElement random_strategy_reduce(int n, std::vector<int> start,
                                           std::mt19937_64& rng) {
  GrothElement out(n);
  std::deque<std::pair<std::vector<int>, HalfPowerLaurent>> pending;
  pending.emplace_back(std::move(start), HalfPowerLaurent::one());
  while (!pending.empty()) {
    auto [w, c] = std::move(pending.front());
    pending.pop_front();
    std::vector<std::size_t> descents;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) descents.push_back(i);
    }
    if (descents.empty()) {
      out += GrothElement::word_monomial(n, std::move(w), std::move(c));
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, descents.size() - 1);
    const std::size_t i = descents[pick(rng)];
    const int l1 = w[i];
    const int l2 = w[i + 1];
    std::vector<int> swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    if (l1 == l2 + 2) {
      pending.emplace_back(std::move(swapped), c.shifted(-2));
      std::vector<int> dropped = w;
      dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(i),
                    dropped.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      pending.emplace_back(
          std::move(dropped),
          c * (HalfPowerLaurent::one() - HalfPowerLaurent::v_pow(-2)));
    } else {
      const int r = ((l1 - l2) / 2) % 2 == 0 ? +1 : -1;
      pending.emplace_back(std::move(swapped), c.shifted(2 * r));
    }
  }
  return out;
}

inline std::vector<int> random_even_word(std::mt19937_64& rng, int n,
                                         std::size_t len) {
  std::uniform_int_distribution<int> letter(0, n);
  std::vector<int> w(len);
  for (auto& x : w) x = 2 * letter(rng);
  return w;
}

}  // namespace qca::testutil
