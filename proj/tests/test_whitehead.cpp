#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "wordchir/whitehead.hpp"

using namespace wordchir;
using wordchir::testing::random_reduced_word;

namespace {

std::size_t count_kind(const std::vector<WhiteheadMove>& moves, WhiteheadMove::Kind k) {
  std::size_t n = 0;
  for (const auto& m : moves) n += m.kind == k ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("move enumeration counts") {
  auto rank1 = enumerate_moves(1);
  CHECK(count_kind(rank1, WhiteheadMove::Kind::TypeI) == 2);
  CHECK(count_kind(rank1, WhiteheadMove::Kind::TypeII) == 2);
  // rank-1 type II moves act trivially
  for (const auto& m : rank1) {
    if (m.kind == WhiteheadMove::Kind::TypeII) {
      CHECK(m.automorphism(1).fwd().is_identity());
    }
  }

  auto rank2 = enumerate_moves(2);
  CHECK(count_kind(rank2, WhiteheadMove::Kind::TypeI) == 8);
  CHECK(count_kind(rank2, WhiteheadMove::Kind::TypeII) == 16);

  auto rank3 = enumerate_moves(3);
  CHECK(count_kind(rank3, WhiteheadMove::Kind::TypeI) == 48);
  CHECK(count_kind(rank3, WhiteheadMove::Kind::TypeII) == 6 * 16);

  CHECK_THROWS_AS(enumerate_moves(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_moves(40), std::invalid_argument);
}

TEST_CASE("every move composes with its inverse to the identity") {
  for (int rank : {1, 2, 3}) {
    for (const auto& m : enumerate_moves(rank)) {
      Automorphism a = m.automorphism(rank);
      Automorphism b = m.inverted().automorphism(rank);
      CHECK(compose(a.fwd(), b.fwd()).is_identity());
      CHECK(compose(b.fwd(), a.fwd()).is_identity());
    }
  }
}

TEST_CASE("move application on cyclic words") {
  WhiteheadMove swap;
  swap.kind = WhiteheadMove::Kind::TypeI;
  swap.perm = {2, 1};
  swap.signs = {1, 1};

  // x1 x2^-1 maps into the conjugacy class of x2 x1^-1
  Word image = apply_move(swap, Word(2, {1, -2}));
  CHECK(image == least_rotation(Word(2, {2, -1})));

  for (const auto& m : enumerate_moves(2)) {
    CHECK(apply_move(m, Word(2)).empty());
  }

  WhiteheadMove t2;
  t2.kind = WhiteheadMove::Kind::TypeII;
  t2.multiplier = Letter{1};
  t2.cut = {Letter{1}, Letter{2}};
  Word img = apply_move(t2, Word(2, {2}));
  // the underlying endomorphism sends x2 to x2 x1
  Word expected = t2.automorphism(2).apply(Word(2, {2}));
  CHECK(img == least_rotation(cyclic_reduce(expected).core));
  CHECK(img == least_rotation(Word(2, {2, 1})));

  CHECK_THROWS_AS(apply_move(swap, Word(2, {1, 2, -1})), std::invalid_argument);
}

TEST_CASE("moves and conjugation commute") {
  std::mt19937 rng(21);
  auto moves = enumerate_moves(2);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = cyclic_reduce(random_reduced_word(rng, 2, 8)).core;
    const auto& m = moves[trial % moves.size()];
    // the canonical image is rotation independent
    if (!w.empty()) {
      CHECK(apply_move(m, w) == apply_move(m, w.rotated(trial % w.length())));
    }
  }
}

TEST_CASE("minimization") {
  auto r = minimize(Word(2, {1, 2, -1}));
  CHECK(r.minimal == Word(2, {2}));
  CHECK(r.trace.empty());

  // primitive words minimize to a single letter
  r = minimize(Word(2, {1, 2, 2}));
  CHECK(r.minimal.length() == 1);

  // the commutator is already minimal
  Word comm(2, {1, 2, -1, -2});
  r = minimize(comm);
  CHECK(r.minimal.length() == 4);
  for (const auto& m : enumerate_moves(2)) {
    CHECK(apply_move(m, r.minimal).length() >= 4);
  }

  std::mt19937 rng(22);
  for (int trial = 0; trial < 250; ++trial) {
    Word w = random_reduced_word(rng, 2, trial % 12);
    auto res = minimize(w);
    CHECK(res.minimal.length() <= cyclic_reduce(w).core.length());
    CHECK(replay_trace(w, res.trace) == res.minimal);
    // minimality: no single move shortens
    for (const auto& m : enumerate_moves(2)) {
      CHECK(apply_move(m, res.minimal).length() >= res.minimal.length());
    }
  }
}

TEST_CASE("orbit equivalence finds witnesses") {
  auto res = orbit_equivalent(Word(2, {1, 2}), Word(2, {-2, -1}));
  REQUIRE(res.found());
  CHECK(res.automorphism->apply(Word(2, {1, 2})) == Word(2, {-2, -1}));

  Word w(2, {1, 2, -1, 2, 2});
  res = orbit_equivalent(w, w);
  REQUIRE(res.found());
  CHECK(res.move_trace.empty());
  CHECK(res.automorphism->fwd().is_identity());

  Word frontier = Word::parse("x1^2 x2^2 x1 x2^-1", 2);
  res = orbit_equivalent(frontier, frontier.inverse());
  CHECK(res.status == SearchStatus::NotFound);
  CHECK(res.definitive());

  CHECK_THROWS_AS(orbit_equivalent(Word(2, {1}), Word(3, {1})), std::invalid_argument);
}

TEST_CASE("orbit equivalence is exact, symmetric and reflexive") {
  std::mt19937 rng(23);
  auto moves = enumerate_moves(2);
  for (int trial = 0; trial < 120; ++trial) {
    Word u = random_reduced_word(rng, 2, 2 + trial % 7);

    // reflexive
    CHECK(orbit_equivalent(u, u).found());

    // apply a random chain of moves at the cyclic level, then conjugate:
    // the result must stay in the same orbit
    Word v = cyclic_reduce(u).core;
    for (int k = 0; k < 3; ++k) v = apply_move(moves[rng() % moves.size()], v);
    Word c = random_reduced_word(rng, 2, 3);
    v = concat(c, concat(v, c.inverse()));

    auto fwd = orbit_equivalent(u, v);
    auto bwd = orbit_equivalent(v, u);
    REQUIRE(fwd.found());
    REQUIRE(bwd.found());

    // exactness, letter for letter
    CHECK(fwd.automorphism->apply(u) == v);
    CHECK(bwd.automorphism->apply(v) == u);

    // soundness: the witness re-verifies as a certificate would
    CHECK(is_two_sided_inverse(fwd.automorphism->fwd(), fwd.automorphism->inv()));
  }
}

TEST_CASE("aut_inverts") {
  // the first Engel word is inverted by the generator swap
  Word comm(2, {1, 2, -1, -2});
  auto res = aut_inverts(comm);
  REQUIRE(res.found());
  CHECK(res.automorphism->apply(comm) == comm.inverse());
  CHECK(certificate_ok(make_certificate(comm, *res.automorphism)));

  // the shortest word no automorphism inverts
  Word frontier = Word::parse("x1^2 x2^2 x1 x2^-1", 2);
  res = aut_inverts(frontier);
  CHECK(res.status == SearchStatus::NotFound);
  CHECK(res.stats.nodes_explored > 0);

  // identity word
  CHECK(aut_inverts(Word(2)).found());

  // a tight budget reports indeterminate rather than a silent no
  res = aut_inverts(frontier, 1);
  CHECK(res.status == SearchStatus::BudgetExceeded);
  CHECK_FALSE(res.definitive());

  // rank 1
  CHECK(aut_inverts(Word(1, {1, 1, 1})).found());
}

TEST_CASE("aut_inverts certificates verify on random words") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 150; ++trial) {
    Word w = random_reduced_word(rng, 2, 1 + trial % 8);
    auto res = aut_inverts(w);
    REQUIRE(res.definitive());
    if (res.found()) {
      CHECK(res.automorphism->apply(w) == w.inverse());
      CHECK(certificate_ok(make_certificate(w, *res.automorphism)));
    } else {
      // definitive refusals must still be legitimate: re-run symmetrically
      CHECK_FALSE(orbit_equivalent(w.inverse(), w).found());
    }
  }
}

TEST_CASE("move trace replays across a search") {
  std::mt19937 rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    Word u = random_reduced_word(rng, 2, 3 + trial % 5);
    auto res = aut_inverts(u);
    if (!res.found()) continue;
    // replaying the trace from u's canonical core lands in the canonical
    // class of the target's core
    Word replayed = replay_trace(u, res.move_trace);
    Word target_core = cyclic_reduce(u.inverse()).core;
    CHECK(replayed == least_rotation(target_core));
  }
}
