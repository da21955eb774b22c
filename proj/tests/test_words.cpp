#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"
#include "wordchir/word.hpp"

using namespace wordchir;
using wordchir::testing::random_raw_letters;
using wordchir::testing::random_reduced_word;
using wordchir::testing::reduce_by_random_cancellation;

TEST_CASE("free reduction") {
  CHECK(Word(2, {1, -1}).empty());
  CHECK(Word(2, {1, 2, -2, 1}) == Word(2, {1, 1}));
  CHECK(Word(2, {1, 2, -1, -2}).length() == 4);

  // idempotence: re-reducing a reduced word changes nothing
  Word w(2, {1, 2, -1, -2});
  CHECK(Word(2, w.letters()) == w);

  CHECK_THROWS_AS(Word(0), std::invalid_argument);
  CHECK_THROWS_AS(Word(2, {3}), std::invalid_argument);
  CHECK_THROWS_AS(Word(2, {0}), std::invalid_argument);
}

TEST_CASE("reduction is confluent") {
  std::mt19937 rng(0xC0FFEE);
  for (int trial = 0; trial < 4000; ++trial) {
    auto raw = random_raw_letters(rng, 3, 24);
    Word stack_reduced(3, raw);
    Word random_order = reduce_by_random_cancellation(rng, 3, raw);
    CHECK(stack_reduced == random_order);
  }
}

TEST_CASE("concat") {
  CHECK(concat(Word(2, {1}), Word(2, {-1})).empty());
  CHECK(concat(Word(2, {1, 2}), Word(2, {-2, 1})) == Word(2, {1, 1}));
  Word w(2, {1, 1, 2, 2, 2});
  CHECK(concat(w, Word(2)) == w);
  CHECK_THROWS_AS(concat(Word(2, {1}), Word(3, {1})), std::invalid_argument);

  std::mt19937 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    Word u = random_reduced_word(rng, 3, 12);
    Word v = random_reduced_word(rng, 3, 12);
    Word uv = concat(u, v);
    CHECK(uv.length() <= u.length() + v.length());
    CHECK((uv.length() - u.length() - v.length()) % 2 == 0);
  }
}

TEST_CASE("inverse") {
  CHECK(Word(2, {1, 2}).inverse() == Word(2, {-2, -1}));
  CHECK(Word(2).inverse() == Word(2));
  CHECK(Word(2, {1, 2, -1, -2}).inverse() == Word(2, {2, 1, -2, -1}));

  std::mt19937 rng(2);
  for (int trial = 0; trial < 4000; ++trial) {
    Word u = random_reduced_word(rng, 3, 10);
    Word v = random_reduced_word(rng, 3, 10);
    CHECK(u.inverse().inverse() == u);
    CHECK(u.inverse().length() == u.length());
    CHECK(concat(u, u.inverse()).empty());
    // anti-homomorphism
    CHECK(concat(u, v).inverse() == concat(v.inverse(), u.inverse()));
  }
}

TEST_CASE("exponent vectors") {
  CHECK(Word(2, {1, 1, 2, 2, 2}).exponent_vector() == ExponentVector{2, 3});
  CHECK(Word(2, {1, 2, -1, -2}).exponent_vector() == ExponentVector{0, 0});

  // independent count of x1^2 x2^2 x1 x2^-1
  Word w = Word::parse("x1^2 x2^2 x1 x2^-1", 2);
  ExponentVector byhand(2, 0);
  for (Letter l : w.letters()) byhand[l.generator() - 1] += l.is_inverse() ? -1 : 1;
  CHECK(byhand == ExponentVector{3, 1});
  CHECK(w.exponent_vector() == byhand);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 4000; ++trial) {
    Word u = random_reduced_word(rng, 3, 9);
    Word v = random_reduced_word(rng, 3, 9);
    auto eu = u.exponent_vector(), ev = v.exponent_vector();
    auto euv = concat(u, v).exponent_vector();
    for (int i = 0; i < 3; ++i) CHECK(euv[i] == eu[i] + ev[i]);
    auto einv = u.inverse().exponent_vector();
    for (int i = 0; i < 3; ++i) CHECK(einv[i] == -eu[i]);
    // conjugation invariance
    Word c = random_reduced_word(rng, 3, 5);
    CHECK(concat(c, concat(u, c.inverse())).exponent_vector() == eu);
  }

  CHECK(exponent_gcd(ExponentVector{0, 0}) == 0);
  CHECK(exponent_gcd(ExponentVector{2, 3}) == 1);
  CHECK(exponent_gcd(ExponentVector{-2, 4}) == 2);
}

TEST_CASE("palindromes") {
  CHECK(Word(2, {1, 2, 1}).is_palindrome());
  CHECK_FALSE(Word(2, {1, 2}).is_palindrome());
  CHECK_FALSE(Word::parse("x1^2 x2^2 x1 x2^-1", 2).is_palindrome());
  CHECK(Word(2).is_palindrome());
}

TEST_CASE("cyclic reduction") {
  auto r = cyclic_reduce(Word(2, {1, 2, -1}));
  CHECK(r.core == Word(2, {2}));
  CHECK(r.conjugator == Word(2, {1}));

  r = cyclic_reduce(Word(2, {1, 2}));
  CHECK(r.core == Word(2, {1, 2}));
  CHECK(r.conjugator.empty());

  // recomposition oracle fixes the expected split
  Word w = Word::parse("x2^-1 x1 x2 x1^-1 x2^2", 2);
  r = cyclic_reduce(w);
  CHECK(r.core == Word::parse("x1 x2 x1^-1 x2", 2));
  CHECK(r.conjugator == Word(2, {-2}));
  CHECK(concat(r.conjugator, concat(r.core, r.conjugator.inverse())) == w);

  w = Word::parse("x2^-1 x1 x2 x1^-1 x2", 2);
  r = cyclic_reduce(w);
  CHECK(r.core == Word(2, {2}));
  CHECK(r.conjugator == Word(2, {-2, 1}));
  CHECK(concat(r.conjugator, concat(r.core, r.conjugator.inverse())) == w);

  std::mt19937 rng(4);
  for (int trial = 0; trial < 4000; ++trial) {
    Word u = random_reduced_word(rng, 3, 14);
    auto cr = cyclic_reduce(u);
    CHECK(cr.core.is_cyclically_reduced());
    CHECK(cr.core.empty() == u.empty());
    CHECK(concat(cr.conjugator, concat(cr.core, cr.conjugator.inverse())) == u);
  }
}

TEST_CASE("embedding") {
  CHECK(Word(2, {1, 2}).embedded(3) == Word(3, {1, 2}));
  CHECK(Word(1).embedded(5) == Word(5));
  CHECK_THROWS_AS(Word(3, {1}).embedded(2), std::invalid_argument);

  // the surjectivity test is blind to padded generators
  Word w(2, {1, 1, 2, 2, 2});
  CHECK(exponent_gcd(w.exponent_vector()) == 1);
  CHECK(exponent_gcd(w.embedded(4).exponent_vector()) == 1);
}

TEST_CASE("parsing") {
  CHECK(Word::parse("x1 x2 x1^-1 x2^-1", 2) == Word(2, {1, 2, -1, -2}));
  CHECK(Word::parse("a B a b", 2) == Word(2, {1, -2, 1, 2}));
  CHECK(Word::parse("x1^2 x2^3", 2) == Word(2, {1, 1, 2, 2, 2}));
  CHECK(Word::parse("x1x2^2", 2) == Word(2, {1, 2, 2}));
  CHECK(Word::parse("", 2).empty());
  CHECK(Word::parse("  ", 2).empty());
  CHECK(Word::parse("aA", 1).empty());

  CHECK_THROWS_AS(Word::parse("x3", 2), ParseError);
  CHECK_THROWS_AS(Word::parse("x1^0", 2), ParseError);
  CHECK_THROWS_AS(Word::parse("y1", 2), ParseError);
  CHECK_THROWS_AS(Word::parse("x1 + x2", 2), ParseError);
  try {
    Word::parse("x1 x0", 2);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }

  CHECK(Word::parse_inferring_rank("x3 x1").rank() == 3);
  CHECK(Word::parse_inferring_rank("abc").rank() == 3);
}

TEST_CASE("formatting round-trips") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    Word w = random_reduced_word(rng, 4, trial % 17);
    CHECK(Word::parse(w.str(), 4) == w);
    CHECK(Word::parse(w.compact_str(), 4) == w);
  }
  CHECK(Word(2, {1, 1, -2}).str() == "x1^2 x2^-1");
  CHECK(Word(2, {1, -2, 1}).compact_str() == "aBa");
}

TEST_CASE("rotations and canonical forms") {
  Word w(2, {2, -1});
  CHECK(w.rotated(1) == Word(2, {-1, 2}));
  CHECK(least_rotation(w) == Word(2, {-1, 2}));
  CHECK_THROWS_AS(Word(2, {1, 2, -1}).rotated(1), std::invalid_argument);

  std::mt19937 rng(6);
  for (int trial = 0; trial < 3000; ++trial) {
    Word u = cyclic_reduce(random_reduced_word(rng, 3, 11)).core;
    Word canon = least_rotation(u);
    // brute force over all rotations
    Word best = u;
    for (int k = 1; k < u.length(); ++k) {
      Word r = u.rotated(k);
      if (shortlex_less(r, best)) best = r;
    }
    CHECK(canon == best);
    if (!u.empty()) CHECK(least_rotation(u.rotated(trial % u.length())) == canon);
  }
}

TEST_CASE("conjugator recovery") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    Word q = random_reduced_word(rng, 3, 9);
    Word c = random_reduced_word(rng, 3, 6);
    Word p = concat(c, concat(q, c.inverse()));
    auto found = conjugator_between(p, q);
    REQUIRE(found.has_value());
    CHECK(concat(*found, concat(q, found->inverse())) == p);
  }
  CHECK_FALSE(conjugator_between(Word(2, {1}), Word(2, {2})).has_value());
  CHECK_FALSE(conjugator_between(Word(2, {1}), Word(2, {1, 2})).has_value());
}

TEST_CASE("powers and commutators") {
  Word w(2, {1, 2});
  CHECK(power(w, 0).empty());
  CHECK(power(w, 3) == Word(2, {1, 2, 1, 2, 1, 2}));
  CHECK(power(w, -2) == power(w.inverse(), 2));

  Word x1(2, {1}), x2(2, {2});
  CHECK(commutator(x1, x2) == Word(2, {1, 2, -1, -2}));
  CHECK(commutator(x1, x2, BracketConvention::ABab) == Word(2, {-1, -2, 1, 2}));
  CHECK(conjugated(x1, x2) == Word(2, {-2, 1, 2}));
  CHECK(conjugated(x1, x2, ConjugationConvention::Left) == Word(2, {2, 1, -2}));
}

TEST_CASE("rank compression") {
  Word w = Word::parse("x4 x2 x4^-1", 5);
  auto rc = compress_rank(w);
  CHECK(rc.compressed == Word(2, {2, 1, -2}));
  CHECK(rc.original_generator == std::vector<int>{2, 4});

  auto e = compress_rank(Word(3));
  CHECK(e.compressed == Word(1));
  CHECK(e.original_generator.empty());
}

TEST_CASE("word census counts") {
  // 4 * 3^(n-1) reduced rank-2 words of length n
  std::uint64_t expected = 4;
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_reduced_words(2, n).size() == expected);
    expected *= 3;
  }
  CHECK(enumerate_reduced_words(2, 0).size() == 1);
}

TEST_CASE("expression parsing") {
  ExprOptions opt;
  CHECK(parse_expression("[x1, x2]", 2, opt) == Word(2, {1, 2, -1, -2}));
  CHECK(parse_expression("(x1 x2)^2", 2, opt) == Word(2, {1, 2, 1, 2}));
  CHECK(parse_expression("x1^x2", 2, opt) == Word(2, {-2, 1, 2}));
  opt.conjugation = ConjugationConvention::Left;
  CHECK(parse_expression("x1^x2", 2, opt) == Word(2, {2, 1, -2}));
  CHECK(parse_expression("aB", 0).rank() == 2);
  CHECK(parse_expression("x1^-2", 2) == Word(2, {-1, -1}));
  CHECK(parse_expression("[a,b][a,b]", 2) == power(Word(2, {1, 2, -1, -2}), 2));
  CHECK_THROWS_AS(parse_expression("[x1, x2", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("x1 )", 2), ParseError);

  // the compact letter x with no digits is generator 24
  CHECK(parse_expression("x", 0).rank() == 24);
}

TEST_CASE("length parity invariants") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    auto raw = random_raw_letters(rng, 3, 20);
    Word w(3, raw);
    CHECK((20 - w.length()) % 2 == 0);
    CHECK(w.length() <= 20);
  }
}
