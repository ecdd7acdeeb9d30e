#include "qca/grothendieck.hpp"

#include <doctest.h>

#include <random>
#include <vector>

#include "qca/sl2.hpp"
#include "reduce_oracle.hpp"
#include "test_util.hpp"

using namespace qca;
using testutil::random_even_word;
using testutil::random_strategy_reduce;

namespace {

GrothElement word(int n, std::vector<int> w,
                  HalfPowerLaurent c = HalfPowerLaurent::one()) {
  return GrothElement::word_monomial(n, std::move(w), std::move(c));
}

}  // namespace

TEST_CASE("construction and validation") {
  const GrothElement zero(2);
  CHECK(zero.is_zero());
  CHECK(GrothElement::one(2).coeff({}) == HalfPowerLaurent::one());
  CHECK(GrothElement::generator(2, 4).coeff({4}) == HalfPowerLaurent::one());
  CHECK_THROWS_AS(GrothElement::generator(2, 3), BadIndexError);
  CHECK_THROWS_AS(GrothElement::generator(2, 6), BadIndexError);
  CHECK_THROWS_AS(GrothElement::generator(2, -2), BadIndexError);
  CHECK_THROWS_AS(word(2, {4, 2}), Error);
  CHECK_NOTHROW(word(2, {2, 4}));
  CHECK_NOTHROW(word(2, {2, 2, 4}));
}

TEST_CASE("reduction of the defining descents") {
  const HalfPowerLaurent one = HalfPowerLaurent::one();
  const HalfPowerLaurent qinv = HalfPowerLaurent::v_pow(-2);

  CHECK(reduce(2, {2, 4}) == word(2, {2, 4}));
  CHECK(reduce(2, {4, 2}) == word(2, {2, 4}, qinv) + word(2, {}, one - qinv));
  // Distance four: straight q-commutation with the sign-rule exponent +1.
  CHECK(reduce(2, {4, 0}) == word(2, {0, 4}, HalfPowerLaurent::v_pow(2)));
  CHECK(reduce(2, {0, 4}) == word(2, {0, 4}));
  // Distance six: exponent -1.
  CHECK(reduce(3, {6, 0}) == word(3, {0, 6}, HalfPowerLaurent::v_pow(-2)));
  // A cascading case ending in both branches.
  CHECK(reduce(2, {2, 2, 0}) ==
        word(2, {0, 2, 2}, HalfPowerLaurent::v_pow(-4)) +
            word(2, {2}, one - HalfPowerLaurent::v_pow(-4)));
}

TEST_CASE("product is associative and unital") {
  auto rng = testutil::make_rng(5150);
  const GrothElement one = GrothElement::one(2);
  for (int i = 0; i < 120; ++i) {
    const GrothElement a = reduce(2, random_even_word(rng, 2, 3));
    const GrothElement b = reduce(2, random_even_word(rng, 2, 2));
    const GrothElement c = reduce(2, random_even_word(rng, 2, 2));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * one == a);
    CHECK(one * a == a);
  }
}

TEST_CASE("rewriting is confluent") {
  auto rng = testutil::make_rng(424242);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<std::size_t> len(0, 6);
    const std::vector<int> w = random_even_word(rng, 2, len(rng));
    CHECK(random_strategy_reduce(2, w, rng) == reduce(2, w));
  }
  for (int i = 0; i < 80; ++i) {
    std::uniform_int_distribution<std::size_t> len(0, 5);
    const std::vector<int> w = random_even_word(rng, 3, len(rng));
    CHECK(random_strategy_reduce(3, w, rng) == reduce(3, w));
  }
}

TEST_CASE("evaluation sends words to generator products") {
  const Sl2Instance inst = build_sl2(2);
  const GrothTorusMap map = make_groth_map(inst);
  const SkewForm& f = map.form();
  const TorusElement y2 = TorusElement::monomial(f, {0, 1, 0});
  const TorusElement one = TorusElement::scalar(f, HalfPowerLaurent::one());

  CHECK(map.generator_image(4) == TorusElement::monomial(f, {1, 0, 0}));
  CHECK_THROWS_AS(map.generator_image(3), BadIndexError);

  // Images of the two orderings of the adjacent pair (4, 2).
  CHECK(map(word(2, {2, 4})) == one + HalfPowerLaurent::v_pow(1) * y2);
  CHECK(map(reduce(2, {4, 2})) == one + HalfPowerLaurent::v_pow(-1) * y2);

  // Multiplicativity on a fixed pair.
  const GrothElement g4 = GrothElement::generator(2, 4);
  const GrothElement g2 = GrothElement::generator(2, 2);
  CHECK(map(g4 * g2) == map(g4) * map(g2));
}

TEST_CASE("randomized homomorphism check") {
  for (int n = 1; n <= 3; ++n) {
    const GrothTorusMap map = make_groth_map(build_sl2(n));
    const HomReport rep = check_homomorphism(map, 60, 4, 0xfeedULL + n);
    CHECK(rep.pairs_checked == 60);
    CHECK(rep.failures == 0);
    CHECK(rep.failing_pairs.empty());
  }
}

TEST_CASE("exhaustive homomorphism check at small length") {
  const GrothTorusMap m1 = make_groth_map(build_sl2(1));
  const HomReport r1 = check_homomorphism_exhaustive(m1, 3);
  // 1 + 2 + 4 + 8 = 15 words, all ordered pairs.
  CHECK(r1.pairs_checked == 225);
  CHECK(r1.failures == 0);

  const GrothTorusMap m2 = make_groth_map(build_sl2(2));
  const HomReport r2 = check_homomorphism_exhaustive(m2, 2);
  // 1 + 3 + 9 = 13 words.
  CHECK(r2.pairs_checked == 169);
  CHECK(r2.failures == 0);
}

TEST_CASE("a corrupted image fails the homomorphism check") {
  const Sl2Instance inst = build_sl2(2);
  std::vector<TorusElement> images = generators_X(inst);
  images[1] = images[1] + TorusElement::monomial(inst.pair.form(), {0, 0, 1});
  const GrothTorusMap bad(2, std::move(images));
  const GrothElement g4 = GrothElement::generator(2, 4);
  const GrothElement g2 = GrothElement::generator(2, 2);
  CHECK(bad(g4 * g2) != bad(g4) * bad(g2));
  const HomReport rep = check_homomorphism(bad, 40, 3, 99);
  CHECK(rep.failures > 0);
  CHECK_FALSE(rep.failing_pairs.empty());
}

TEST_CASE("normal word enumeration") {
  const auto w1 = normal_words(1, 2);
  const std::vector<std::vector<int>> expected{
      {}, {0}, {2}, {0, 0}, {0, 2}, {2, 2}};
  CHECK(w1 == expected);
  // Multisets of size <= 3 from {0, 2, 4}: 1 + 3 + 6 + 10.
  CHECK(normal_words(2, 3).size() == 20);
}

TEST_CASE("images of normal words are linearly independent") {
  const GrothTorusMap m1 = make_groth_map(build_sl2(1));
  const IndependenceReport r1 = check_independence(m1, 2);
  CHECK(r1.words == 6);
  CHECK(r1.rank == 6);
  CHECK(r1.independent);

  const GrothTorusMap m2 = make_groth_map(build_sl2(2));
  const IndependenceReport r2 = check_independence(m2, 2);
  CHECK(r2.words == 10);
  CHECK(r2.rank == 10);
  CHECK(r2.independent);
}

TEST_CASE("expressing torus elements in the generators") {
  const Sl2Instance inst = build_sl2(2);
  const GrothTorusMap map = make_groth_map(inst);

  // Every distinct variable of the exchange graph lies in the span.
  const ExchangeGraph g = enumerate_exchange_graph(inst.initial, 100);
  GeneratorSpan span(map);
  span.extend_to_length(3);
  for (const auto& var : g.distinct_variables) {
    const auto expr = span.express(var);
    REQUIRE(expr.has_value());
    CHECK(map(*expr) == var);
  }

  // At rank one both generator images have nonnegative Y_2 exponents, so a
  // monomial with a negative one is outside the subalgebra at any length.
  const GrothTorusMap m1 = make_groth_map(build_sl2(1));
  GeneratorSpan span1(m1);
  span1.extend_to_length(4);
  CHECK_FALSE(span1.express(TorusElement::monomial(m1.form(), {0, -1})).has_value());

  // Y_2 itself needs words of length two.
  const TorusElement y2 = TorusElement::monomial(m1.form(), {0, 1});
  CHECK_FALSE(express_in_generators(m1, y2, 1).has_value());
  const auto expr = express_in_generators(m1, y2, 2);
  REQUIRE(expr.has_value());
  CHECK(m1(*expr) == y2);
}

TEST_CASE("classical specialization of images commutes") {
  const GrothTorusMap map = make_groth_map(build_sl2(2));
  auto rng = testutil::make_rng(31337);
  for (int i = 0; i < 30; ++i) {
    const TorusElement a = map.image_of_word(random_even_word(rng, 2, 3));
    const TorusElement b = map.image_of_word(random_even_word(rng, 2, 2));
    CHECK(specialize_q1(a * b) == specialize_q1(b * a));
  }
}
