#include "wordchir/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordchir {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Achiral: return "achiral";
    case Status::Chiral: return "chiral";
    case Status::Undecided: return "undecided";
  }
  return "?";
}

std::string_view rule_name(RuleId id) {
  switch (id) {
    case RuleId::GcdSurjective: return "GcdSurjective";
    case RuleId::Palindrome: return "Palindrome";
    case RuleId::TwoBlock: return "TwoBlock";
    case RuleId::FourBlock: return "FourBlock";
    case RuleId::PowerReduce: return "PowerReduce";
    case RuleId::AutOrbit: return "AutOrbit";
    case RuleId::TestWord: return "TestWord";
    case RuleId::TestWordChiral: return "TestWordChiral";
    case RuleId::FiniteWitness: return "FiniteWitness";
    case RuleId::RankEmbed: return "RankEmbed";
  }
  return "?";
}

ClassifyOptions ClassifyOptions::with_default_catalog() {
  ClassifyOptions o;
  o.catalog = default_catalog();
  return o;
}

namespace {

std::string join_exponents(const ExponentVector& ev) {
  std::string s = "(";
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(ev[i]);
  }
  return s + ")";
}

struct GenRun {
  int generator;
  std::int64_t exponent;
};

std::vector<GenRun> runs_of(const Word& w) {
  std::vector<GenRun> runs;
  auto ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j].generator() == ls[i].generator()) ++j;
    std::int64_t exp = 0;
    for (std::size_t t = i; t < j; ++t) exp += ls[t].is_inverse() ? -1 : 1;
    runs.push_back({ls[i].generator(), exp});
    i = j;
  }
  return runs;
}

// Permutation automorphism sending x1 -> x_i (and x2 -> x_j when given);
// the remaining generators are assigned in increasing order.
Automorphism relabeling(int rank, int gen_i, int gen_j) {
  std::vector<int> targets(static_cast<std::size_t>(rank), 0);
  std::vector<char> used(static_cast<std::size_t>(rank) + 1, 0);
  targets[0] = gen_i;
  used[static_cast<std::size_t>(gen_i)] = 1;
  std::size_t next_slot = 1;
  if (gen_j > 0) {
    targets[1] = gen_j;
    used[static_cast<std::size_t>(gen_j)] = 1;
    next_slot = 2;
  }
  for (int g = 1; g <= rank && next_slot < targets.size(); ++g) {
    if (!used[static_cast<std::size_t>(g)]) {
      targets[next_slot++] = g;
      used[static_cast<std::size_t>(g)] = 1;
    }
  }
  return Automorphism::signed_permutation(targets);
}

std::optional<PatternFiring> try_pattern(const Word& w, RuleId rule, const Automorphism& relabel,
                                         const Automorphism& base, std::string note,
                                         std::vector<std::pair<std::string, std::string>> params) {
  Automorphism endo = compose(relabel, compose(base, relabel.inverse()));
  InversionCertificate cert = make_certificate(w, endo);
  if (!certificate_ok(cert)) return std::nullopt;
  return PatternFiring{RuleFiring{rule, std::move(note), std::move(params)}, std::move(cert)};
}

}  // namespace

std::optional<RuleFiring> rule_gcd(const Word& w) {
  ExponentVector ev = w.exponent_vector();
  const std::int64_t g = exponent_gcd(ev);
  if (g != 1) return std::nullopt;
  return RuleFiring{RuleId::GcdSurjective,
                    "exponent gcd 1: the word map is onto every group",
                    {{"exponents", join_exponents(ev)}, {"gcd", "1"}}};
}

std::optional<PatternFiring> rule_patterns(const Word& w) {
  const int rank = w.rank();

  if (w.is_palindrome()) {
    auto fired = try_pattern(w, RuleId::Palindrome, Automorphism::identity(rank),
                             named_family(NamedFamily::InvertAll, {}, rank),
                             "palindrome: inverting every generator reverses the word", {});
    if (fired) return fired;
  }
  if (rank < 2) return std::nullopt;

  const auto runs = runs_of(w);

  if (runs.size() == 2 && runs[0].generator != runs[1].generator) {
    auto fired = try_pattern(
        w, RuleId::TwoBlock, relabeling(rank, runs[0].generator, runs[1].generator),
        named_family(NamedFamily::TwoBlock, {runs[0].exponent, runs[1].exponent}, rank),
        "two-block word",
        {{"m1", std::to_string(runs[0].exponent)}, {"m2", std::to_string(runs[1].exponent)}});
    if (fired) return fired;
  }

  // x_i^m x_j^{e1} x_i^n x_j^{e2} with |e1| == |e2|; three runs when m == 0.
  auto four_block = [&](int gi, int gj, std::int64_t m, std::int64_t e1, std::int64_t n,
                        std::int64_t e2) -> std::optional<PatternFiring> {
    if (e1 != e2 && e1 != -e2) return std::nullopt;
    const NamedFamily fam = e1 == e2 ? NamedFamily::FourBlockSame : NamedFamily::FourBlockOpp;
    return try_pattern(w, RuleId::FourBlock, relabeling(rank, gi, gj),
                       named_family(fam, {m}, rank),
                       e1 == e2 ? "four-block word with equal inner exponents"
                                : "four-block word with opposite inner exponents",
                       {{"m", std::to_string(m)},
                        {"e1", std::to_string(e1)},
                        {"n", std::to_string(n)},
                        {"e2", std::to_string(e2)}});
  };

  if (runs.size() == 4 && runs[0].generator == runs[2].generator &&
      runs[1].generator == runs[3].generator && runs[0].generator != runs[1].generator) {
    auto fired = four_block(runs[0].generator, runs[1].generator, runs[0].exponent,
                            runs[1].exponent, runs[2].exponent, runs[3].exponent);
    if (fired) return fired;
  }
  if (runs.size() == 3 && runs[0].generator == runs[2].generator &&
      runs[0].generator != runs[1].generator) {
    auto fired = four_block(runs[1].generator, runs[0].generator, 0, runs[0].exponent,
                            runs[1].exponent, runs[2].exponent);
    if (fired) return fired;
  }
  return std::nullopt;
}

std::optional<std::pair<Word, int>> rule_power(const Word& w) {
  if (w.length() < 2) return std::nullopt;
  auto cr = cyclic_reduce(w);
  const auto core = cr.core.letters();
  const int len = static_cast<int>(core.size());
  for (int p = 1; p <= len / 2; ++p) {
    if (len % p != 0) continue;
    bool periodic = true;
    for (int i = p; i < len && periodic; ++i) {
      periodic = core[static_cast<std::size_t>(i)] == core[static_cast<std::size_t>(i - p)];
    }
    if (!periodic) continue;
    Word unit(w.rank(), core.subspan(0, static_cast<std::size_t>(p)));
    Word root = concat(cr.conjugator, concat(unit, cr.conjugator.inverse()));
    return std::make_pair(std::move(root), len / p);
  }
  return std::nullopt;
}

std::optional<RuleFiring> rule_testword_f2(const Word& w) {
  if (w.empty()) return std::nullopt;
  auto rc = compress_rank(w);
  if (rc.original_generator.size() != 2) return std::nullopt;
  ExponentVector ev = rc.compressed.exponent_vector();
  if (ev[0] != 0 || ev[1] != 0) return std::nullopt;
  return RuleFiring{
      RuleId::TestWord,
      "nontrivial element of the commutator subgroup on two generators: a test word "
      "of its rank-2 copy",
      {{"generators", "x" + std::to_string(rc.original_generator[0]) + ", x" +
                          std::to_string(rc.original_generator[1])}}};
}

namespace {

void attach_certificate(Verdict& v, InversionCertificate cert) {
  if (cert.word != v.word || !certificate_ok(cert)) {
    throw std::logic_error("classification produced an invalid certificate");
  }
  v.certificates.push_back(std::move(cert));
}

void note_d2_membership(Verdict& v) {
  if (auto t = rule_testword_f2(v.word)) {
    t->note += "; achiral, so every endomorphism inverting it is an automorphism";
    v.reasons.push_back(std::move(*t));
  }
}

constexpr int kMaxEffectiveSearchRank = 6;

}  // namespace

Verdict classify(const Word& w, const ClassifyOptions& options) {
  Verdict v;
  v.word = w;

  if (auto pw = rule_power(w)) {
    const auto& [root, k] = *pw;
    Verdict rv = classify(root, options);
    RuleFiring firing{RuleId::PowerReduce,
                      "proper power: the root's classification transfers",
                      {{"root", root.str()}, {"k", std::to_string(k)}}};
    if (rv.status != Status::Undecided) {
      v.status = rv.status;
      v.reasons.push_back(std::move(firing));
      for (auto& r : rv.reasons) v.reasons.push_back(std::move(r));
      for (auto& cert : rv.certificates) attach_certificate(v, power_certificate(cert, k));
      v.search_stats = rv.search_stats;
      return v;
    }
    firing.note = "proper power, but the root stayed undecided";
    v.reasons.push_back(std::move(firing));
  }

  if (auto f = rule_gcd(w)) {
    v.reasons.push_back(std::move(*f));
    v.status = Status::Achiral;
    return v;
  }

  if (auto p = rule_patterns(w)) {
    v.reasons.push_back(std::move(p->firing));
    attach_certificate(v, std::move(p->certificate));
    v.status = Status::Achiral;
    note_d2_membership(v);
    return v;
  }

  auto testword = rule_testword_f2(w);

  auto rc = compress_rank(w);
  const int effective_rank = rc.compressed.rank();
  const bool compressed = effective_rank < w.rank();
  if (compressed) {
    std::string gens;
    for (std::size_t i = 0; i < rc.original_generator.size(); ++i) {
      if (i) gens += ", ";
      gens += "x" + std::to_string(rc.original_generator[i]);
    }
    v.reasons.push_back(RuleFiring{RuleId::RankEmbed,
                                   "classified through its minimal-rank copy",
                                   {{"effective_rank", std::to_string(effective_rank)},
                                    {"generators", gens.empty() ? "none" : gens}}});
  }

  bool aut_definitively_failed = false;
  if (effective_rank <= kMaxEffectiveSearchRank) {
    OrbitSearchResult res = aut_inverts(rc.compressed, options.whitehead_budget);
    v.search_stats = res.stats;
    RuleFiring firing{RuleId::AutOrbit,
                      "",
                      {{"minimal_length", std::to_string(res.stats.minimal_length)},
                       {"nodes_explored", std::to_string(res.stats.nodes_explored)}}};
    switch (res.status) {
      case SearchStatus::Found: {
        firing.note = "an automorphism maps the word to its inverse";
        v.reasons.push_back(std::move(firing));
        Automorphism lifted = [&] {
          if (!compressed) return *res.automorphism;
          // rho sends x_k to the k-th occurring generator, the spare
          // generators filling the remaining slots in increasing order.
          std::vector<int> targets(static_cast<std::size_t>(w.rank()), 0);
          std::vector<char> used(static_cast<std::size_t>(w.rank()) + 1, 0);
          for (std::size_t k2 = 0; k2 < rc.original_generator.size(); ++k2) {
            targets[k2] = rc.original_generator[k2];
            used[static_cast<std::size_t>(rc.original_generator[k2])] = 1;
          }
          std::size_t slot = rc.original_generator.size();
          for (int g = 1; g <= w.rank() && slot < targets.size(); ++g) {
            if (!used[static_cast<std::size_t>(g)]) {
              targets[slot++] = g;
              used[static_cast<std::size_t>(g)] = 1;
            }
          }
          Automorphism rho = Automorphism::signed_permutation(targets);
          Automorphism ext = res.automorphism->extended_identity(w.rank());
          return compose(rho, compose(ext, rho.inverse()));
        }();
        attach_certificate(v, make_certificate(w, lifted));
        v.status = Status::Achiral;
        note_d2_membership(v);
        return v;
      }
      case SearchStatus::NotFound:
        firing.note = "no automorphism inverts the word (level graph fully explored)";
        v.reasons.push_back(std::move(firing));
        aut_definitively_failed = true;
        break;
      case SearchStatus::BudgetExceeded:
        firing.note = "search budget exhausted: indeterminate";
        v.reasons.push_back(std::move(firing));
        break;
    }
  } else {
    v.reasons.push_back(RuleFiring{RuleId::AutOrbit,
                                   "effective rank exceeds the supported search rank: indeterminate",
                                   {{"effective_rank", std::to_string(effective_rank)}}});
  }

  if (testword) {
    v.reasons.push_back(*testword);
    if (aut_definitively_failed) {
      v.reasons.push_back(RuleFiring{
          RuleId::TestWordChiral,
          "test word inverted by no automorphism, hence by no endomorphism: chiral",
          {}});
      v.status = Status::Chiral;
      return v;
    }
  }

  if (options.run_witness_sweep && !options.catalog.empty()) {
    WitnessSweep sweep = chirality_witness(w, options.catalog, options.eval_cap);
    std::string skipped;
    for (std::size_t i = 0; i < sweep.skipped.size(); ++i) {
      if (i) skipped += ", ";
      skipped += sweep.skipped[i];
    }
    if (sweep.witness) {
      v.reasons.push_back(RuleFiring{RuleId::FiniteWitness,
                                     "image is not inverse closed",
                                     {{"group", sweep.witness->group},
                                      {"element", std::to_string(sweep.witness->element)},
                                      {"label", sweep.witness->element_label}}});
      v.witness = ChiralityWitnessRef{sweep.witness->group, sweep.witness->element,
                                      sweep.witness->element_label};
      v.status = Status::Chiral;
      return v;
    }
    v.reasons.push_back(RuleFiring{
        RuleId::FiniteWitness,
        "no witness: every catalog image is inverse closed",
        {{"skipped", skipped.empty() ? "none" : skipped}}});
  }

  v.status = Status::Undecided;
  return v;
}

CensusReport census(int length, const ClassifyOptions& options) {
  if (length < 1) throw std::invalid_argument("census length must be positive");
  if (length > options.census_length_cap) {
    throw std::invalid_argument("census length " + std::to_string(length) +
                                " exceeds the configured cap " +
                                std::to_string(options.census_length_cap));
  }
  CensusReport rep;
  rep.length = length;
  for (const Word& w : enumerate_reduced_words(2, length)) {
    ++rep.total;
    Verdict verdict = classify(w, options);
    ++rep.status_counts[static_cast<std::size_t>(verdict.status)];
    OrbitSearchResult res = aut_inverts(w, options.whitehead_budget);
    if (res.found()) {
      if (!certificate_ok(make_certificate(w, *res.automorphism))) {
        throw std::logic_error("census: search returned an invalid automorphism");
      }
      ++rep.aut_invertible;
    } else if (res.definitive()) {
      rep.non_aut_invertible.push_back(w);
    } else {
      ++rep.indeterminate;
    }
  }
  return rep;
}

Word engel(int n, BracketConvention convention) {
  if (n < 1) throw std::invalid_argument("engel index must be positive");
  const Word x1(2, {1});
  const Word x2(2, {2});
  Word e = commutator(x1, x2, convention);
  for (int i = 2; i <= n; ++i) e = commutator(e, x2, convention);
  return e;
}

}  // namespace wordchir
