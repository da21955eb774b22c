#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "wordchir/endomorphism.hpp"

using namespace wordchir;
using wordchir::testing::random_reduced_word;

namespace {

Endomorphism random_endomorphism(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::vector<Word> images;
  for (int g = 0; g < rank; ++g) images.push_back(random_reduced_word(rng, rank, len(rng)));
  return Endomorphism(std::move(images));
}

}  // namespace

TEST_CASE("apply substitutes generator images") {
  auto f = named_family(NamedFamily::InvertAll);
  Word pal(2, {1, 2, 1});
  CHECK(f.apply(pal) == pal.inverse());

  auto g = named_family(NamedFamily::SwapInvert);
  CHECK(g.apply(Word(2, {1, 2})) == Word(2, {-2, -1}));

  auto two = named_family(NamedFamily::TwoBlock, {2, 3});
  CHECK(two.apply(Word::parse("x1^2 x2^3", 2)) == Word::parse("x2^-3 x1^-2", 2));

  CHECK_THROWS_AS(f.fwd().apply(Word(3, {3})), std::invalid_argument);
}

TEST_CASE("apply is a homomorphism") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1500; ++trial) {
    Endomorphism f = random_endomorphism(rng, 3, 4);
    Word u = random_reduced_word(rng, 3, 8);
    Word v = random_reduced_word(rng, 3, 8);
    CHECK(f.apply(concat(u, v)) == concat(f.apply(u), f.apply(v)));
    CHECK(f.apply(u.inverse()) == f.apply(u).inverse());
  }
}

TEST_CASE("composition") {
  auto g = named_family(NamedFamily::SwapInvert);
  auto h = named_family(NamedFamily::Swap);
  auto id = Endomorphism::identity(2);

  CHECK(compose(id, g.fwd()) == g.fwd());
  CHECK(compose(g.fwd(), id) == g.fwd());

  auto f = named_family(NamedFamily::InvertAll);
  CHECK(compose(f.fwd(), f.fwd()) == id);

  // h o g sends both generators to their inverses
  auto hg = compose(h.fwd(), g.fwd());
  CHECK(hg == named_family(NamedFamily::InvertAll).fwd());

  std::mt19937 rng(12);
  for (int trial = 0; trial < 600; ++trial) {
    Endomorphism a = random_endomorphism(rng, 3, 3);
    Endomorphism b = random_endomorphism(rng, 3, 3);
    Endomorphism c = random_endomorphism(rng, 3, 3);
    Word w = random_reduced_word(rng, 3, 6);
    CHECK(compose(a, b).apply(w) == a.apply(b.apply(w)));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("named families invert their patterns") {
  // every family is an involution, so construction already certifies them
  for (std::int64_t m1 = -5; m1 <= 5; ++m1) {
    if (m1 == 0) continue;
    for (std::int64_t m2 = -5; m2 <= 5; ++m2) {
      if (m2 == 0) continue;
      Word w = concat(power(Word(2, {1}), m1), power(Word(2, {2}), m2));
      auto aut = named_family(NamedFamily::TwoBlock, {m1, m2});
      CHECK(aut.apply(w) == w.inverse());
    }
  }
  for (std::int64_t m = -4; m <= 4; ++m) {
    for (std::int64_t n = -4; n <= 4; ++n) {
      for (int eps : {1, -1}) {
        Word x1(2, {1}), x2(2, {2});
        Word same = concat(power(x1, m),
                           concat(power(x2, eps), concat(power(x1, n), power(x2, eps))));
        CHECK(named_family(NamedFamily::FourBlockSame, {m}).apply(same) == same.inverse());
        Word opp = concat(power(x1, m),
                          concat(power(x2, eps), concat(power(x1, n), power(x2, -eps))));
        CHECK(named_family(NamedFamily::FourBlockOpp, {m}).apply(opp) == opp.inverse());
      }
    }
  }

  auto swap = named_family(NamedFamily::Swap);
  Word comm(2, {1, 2, -1, -2});
  CHECK(swap.apply(comm) == comm.inverse());

  CHECK_THROWS_AS(named_family(NamedFamily::TwoBlock, {1}), std::invalid_argument);
}

TEST_CASE("certificates") {
  auto f = named_family(NamedFamily::InvertAll);
  CHECK(verify_certificate(make_certificate(Word(2, {1, 2, 1}), f)) == CertStatus::Ok);
  CHECK(verify_certificate(make_certificate(Word(2, {1, 2}), f)) == CertStatus::ImageMismatch);
  auto two = named_family(NamedFamily::TwoBlock, {2, 3});
  CHECK(certificate_ok(make_certificate(Word::parse("x1^2 x2^3", 2), two)));

  // automorphism witness without a proof
  InversionCertificate broken = make_certificate(Word(2, {1, 2, 1}), f.fwd());
  broken.kind = WitnessKind::AutomorphismWitness;
  CHECK(verify_certificate(broken) == CertStatus::MissingAutProof);

  broken.aut_proof = named_family(NamedFamily::Swap).fwd();
  CHECK(verify_certificate(broken) == CertStatus::AutProofNotInverse);
}

TEST_CASE("trivial extension matches the rank-independence construction") {
  auto f = named_family(NamedFamily::InvertAll);
  Endomorphism f3 = f.fwd().extended_trivial(3);
  Word w = Word(2, {1, 2, 1}).embedded(3);
  CHECK(f3.apply(w) == w.inverse());
  CHECK(f3.image(3).empty());

  Endomorphism id3 = Endomorphism::identity(2).extended_trivial(3);
  Word u = Word(2, {1, 2}).embedded(3);
  CHECK(id3.apply(u) == u);

  auto two = named_family(NamedFamily::TwoBlock, {1, 1});
  Endomorphism t4 = two.fwd().extended_trivial(4);
  Word v = Word(2, {1, 2}).embedded(4);
  CHECK(t4.apply(v) == v.inverse());
  CHECK(certificate_ok(make_certificate(v, t4)));

  // identity extension keeps automorphism status
  Automorphism a4 = two.extended_identity(4);
  CHECK(a4.apply(v) == v.inverse());
}

TEST_CASE("power certificates") {
  Word comm(2, {1, 2, -1, -2});
  auto swap = named_family(NamedFamily::Swap);
  auto base = make_certificate(comm, swap);

  auto squared = power_certificate(base, 2);
  CHECK(squared.word == power(comm, 2));
  CHECK(certificate_ok(squared));

  auto same = power_certificate(base, 1);
  CHECK(same.word == base.word);

  auto gcert = make_certificate(Word(2, {1, 2}), named_family(NamedFamily::SwapInvert));
  auto cubed = power_certificate(gcert, 3);
  CHECK(cubed.word == power(Word(2, {1, 2}), 3));
  CHECK(certificate_ok(cubed));

  CHECK(certificate_ok(power_certificate(base, -3)));
  CHECK_THROWS_AS(power_certificate(base, 0), std::invalid_argument);
}

TEST_CASE("certificates transport along automorphisms") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    // build a random certified palindrome: u followed by its reversal
    Word u = random_reduced_word(rng, 2, 4);
    std::vector<Letter> mirrored(u.letters().begin(), u.letters().end());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) mirrored.push_back(*it);
    Word word(2, mirrored);
    if (!word.is_palindrome()) continue;  // reduction can break the mirror
    Automorphism phi = named_family(NamedFamily::InvertAll);
    if (!certificate_ok(make_certificate(word, phi))) continue;

    // random sigma: signed permutation composed with an inner automorphism
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> targets = coin(rng) ? std::vector<int>{1, 2} : std::vector<int>{2, 1};
    std::vector<int> signs = {coin(rng) ? 1 : -1, coin(rng) ? 1 : -1};
    Automorphism sigma = Automorphism::signed_permutation(targets, signs);
    sigma = compose(Automorphism::inner(random_reduced_word(rng, 2, 4)), sigma);

    Automorphism transported = compose(sigma, compose(phi, sigma.inverse()));
    CHECK(certificate_ok(make_certificate(sigma.apply(word), transported)));
  }
}

TEST_CASE("automorphism construction is checked") {
  CHECK_THROWS_AS(Automorphism(named_family(NamedFamily::Swap).fwd(),
                               named_family(NamedFamily::InvertAll).fwd()),
                  std::invalid_argument);

  Word c(2, {1, 2});
  Automorphism inn = Automorphism::inner(c);
  Word w(2, {1, 2, -1});
  CHECK(inn.apply(w) == concat(c, concat(w, c.inverse())));
  CHECK(compose(inn, inn.inverse()).fwd().is_identity());
}

TEST_CASE("endomorphism text format") {
  auto two = named_family(NamedFamily::TwoBlock, {2, 3});
  std::string text = two.fwd().str();
  CHECK(Endomorphism::parse(text, 2) == two.fwd());

  Endomorphism trivial = Endomorphism::identity(2).extended_trivial(3);
  CHECK(Endomorphism::parse(trivial.str(), 3) == trivial);

  CHECK_THROWS_AS(Endomorphism::parse("x1 -> x1", 2), ParseError);
  CHECK_THROWS_AS(Endomorphism::parse("x1 => x1\nx2 -> x2", 2), ParseError);

  std::mt19937 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    Endomorphism e = random_endomorphism(rng, 3, 5);
    CHECK(Endomorphism::parse(e.str(), 3) == e);
  }
}
