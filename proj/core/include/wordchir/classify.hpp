#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordchir/endomorphism.hpp"
#include "wordchir/finite_group.hpp"
#include "wordchir/whitehead.hpp"
#include "wordchir/word.hpp"

namespace wordchir {

enum class Status { Achiral, Chiral, Undecided };
std::string_view status_name(Status s);

enum class RuleId {
  GcdSurjective,   // exponent gcd 1: the word map is onto every group
  Palindrome,
  TwoBlock,        // x_i^{m1} x_j^{m2}
  FourBlock,       // x_i^m x_j^{e1} x_i^n x_j^{e2}, |e1| == |e2|
  PowerReduce,     // w = root^k
  AutOrbit,        // Whitehead search for an inverting automorphism
  TestWord,        // rank-2 commutator-subgroup membership
  TestWordChiral,  // test word with definitively no inverting automorphism
  FiniteWitness,   // catalog sweep for a non-inverse-closed image
  RankEmbed,       // classified through its minimal-rank copy
};
std::string_view rule_name(RuleId id);

struct RuleFiring {
  RuleId rule;
  std::string note;
  std::vector<std::pair<std::string, std::string>> params;
};

struct ChiralityWitnessRef {
  std::string group;
  int element = 0;
  std::string element_label;
};

// A classification with its evidence. Achiral verdicts carry a verified
// inversion certificate or a re-checkable deduction chain; chiral verdicts
// carry a finite-group witness or the test-word deduction.
struct Verdict {
  Word word;
  Status status = Status::Undecided;
  std::vector<RuleFiring> reasons;
  std::vector<InversionCertificate> certificates;
  std::optional<ChiralityWitnessRef> witness;
  OrbitSearchStats search_stats;
};

struct ClassifyOptions {
  std::uint64_t whitehead_budget = kDefaultSearchBudget;
  std::uint64_t eval_cap = kDefaultEvalCap;
  // Groups swept for chirality witnesses; empty means no sweep.
  std::vector<FiniteGroup> catalog;
  bool run_witness_sweep = true;
  int census_length_cap = 7;

  static ClassifyOptions with_default_catalog();
};

// --- individual rules -------------------------------------------------------

// Fires iff the exponent vector has gcd 1 (all-zero vectors give gcd 0).
std::optional<RuleFiring> rule_gcd(const Word& w);

struct PatternFiring {
  RuleFiring firing;
  InversionCertificate certificate;  // verified before being returned
};
// Palindromes, two-block and four-block words, up to generator relabeling.
std::optional<PatternFiring> rule_patterns(const Word& w);

// The maximal root: w = root^k with k >= 2, when one exists.
std::optional<std::pair<Word, int>> rule_power(const Word& w);

// Fires iff w is nonempty, mentions at most two generators, and has a zero
// exponent vector: such a word is a test word of its rank-2 copy.
std::optional<RuleFiring> rule_testword_f2(const Word& w);

// --- pipeline ---------------------------------------------------------------

// Rule order: power reduction, exponent gcd, patterns, Whitehead search,
// test-word deduction, catalog witness sweep. Every certificate attached to
// the verdict has been re-verified.
Verdict classify(const Word& w, const ClassifyOptions& options = ClassifyOptions());

// --- census and generators --------------------------------------------------

struct CensusReport {
  int length = 0;
  std::uint64_t total = 0;            // 4 * 3^(length-1) for rank 2
  std::uint64_t aut_invertible = 0;   // words with an inverting automorphism
  std::vector<Word> non_aut_invertible;
  std::uint64_t indeterminate = 0;    // searches that hit the budget
  std::array<std::uint64_t, 3> status_counts{};  // indexed by Status

  std::uint64_t status_count(Status s) const {
    return status_counts[static_cast<std::size_t>(s)];
  }
};

// Enumerates and classifies every rank-2 word of the given length.
CensusReport census(int length, const ClassifyOptions& options = ClassifyOptions());

// e_1 = [x1, x2], e_{n+1} = [e_n, x2].
Word engel(int n, BracketConvention convention = BracketConvention::abAB);

}  // namespace wordchir
