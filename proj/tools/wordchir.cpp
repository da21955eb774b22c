#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "wordchir/report.hpp"

using namespace wordchir;

namespace {

struct CommonFlags {
  std::string word;
  std::string words_file;
  int rank = 0;  // 0: infer from the input
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint64_t cap = kDefaultEvalCap;
  std::string catalog;
  std::string conj = "right";
  std::string out;
  bool expr = false;
  unsigned jobs = std::thread::hardware_concurrency();
};

void add_word_flags(CLI::App* cmd, CommonFlags& f, bool batch) {
  cmd->add_option("--word,-w", f.word, "word in the x<i>[^e] grammar or compact letters");
  if (batch) {
    cmd->add_option("--words-file", f.words_file, "file with one word per line");
  }
  cmd->add_option("--rank", f.rank, "ambient rank (default: largest generator used)");
  cmd->add_flag("--expr", f.expr,
                "parse words as expressions with (), [u,v] and ^ conjugation/powers");
  cmd->add_option("--conj", f.conj, "conjugation convention for g^h: right=h^-1gh, left=hgh^-1")
      ->check(CLI::IsMember({"left", "right"}));
}

ExprOptions expr_options(const CommonFlags& f, BracketConvention bracket) {
  ExprOptions o;
  o.conjugation =
      f.conj == "left" ? ConjugationConvention::Left : ConjugationConvention::Right;
  o.bracket = bracket;
  return o;
}

Word parse_cli_word(const std::string& text, const CommonFlags& f) {
  if (f.expr) {
    Word w = parse_expression(text, f.rank, expr_options(f, BracketConvention::abAB));
    return w;
  }
  if (f.rank > 0) return Word::parse(text, f.rank);
  return Word::parse_inferring_rank(text);
}

// Reads the batch, reporting every bad line before giving up.
std::vector<Word> load_batch(const CommonFlags& f) {
  std::vector<std::pair<int, std::string>> lines;
  if (!f.word.empty()) lines.emplace_back(0, f.word);
  if (!f.words_file.empty()) {
    std::ifstream in(f.words_file);
    if (!in) throw std::runtime_error("cannot open words file '" + f.words_file + "'");
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      lines.emplace_back(no, line);
    }
  }
  if (lines.empty()) throw std::runtime_error("no input words; use --word or --words-file");

  std::vector<Word> words;
  std::vector<std::string> errors;
  int max_rank = std::max(1, f.rank);
  for (const auto& [no, text] : lines) {
    try {
      Word w = parse_cli_word(text, f);
      max_rank = std::max(max_rank, w.rank());
      words.push_back(std::move(w));
    } catch (const std::exception& e) {
      errors.push_back((no ? "line " + std::to_string(no) + ": " : std::string()) + e.what());
    }
  }
  if (!errors.empty()) {
    std::string all = "input errors:";
    for (const auto& e : errors) all += "\n  " + e;
    throw std::runtime_error(all);
  }
  for (Word& w : words) {
    if (w.rank() < max_rank) w = w.embedded(max_rank);
  }
  return words;
}

void emit(const CommonFlags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(f.out);
  if (!out) throw std::runtime_error("cannot write '" + f.out + "'");
  out << text << "\n";
  std::cerr << "report written to " << f.out << "\n";
}

ClassifyOptions classify_options(const CommonFlags& f) {
  ClassifyOptions o;
  o.whitehead_budget = f.budget;
  o.eval_cap = f.cap;
  o.catalog = f.catalog.empty() ? default_catalog() : parse_catalog(f.catalog);
  return o;
}

// Order-stable parallel map over the batch.
std::vector<Verdict> classify_batch(const std::vector<Word>& words, const ClassifyOptions& opts,
                                    unsigned jobs) {
  std::vector<Verdict> verdicts(words.size(), Verdict{});
  if (jobs <= 1 || words.size() <= 1) {
    for (std::size_t i = 0; i < words.size(); ++i) verdicts[i] = classify(words[i], opts);
    return verdicts;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= words.size()) return;
      verdicts[i] = classify(words[i], opts);
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, words.size()); ++t) {
    pool.push_back(std::async(std::launch::async, worker));
  }
  for (auto& fut : pool) fut.get();
  return verdicts;
}

int run_classify(const CommonFlags& f) {
  auto words = load_batch(f);
  auto verdicts = classify_batch(words, classify_options(f), f.jobs);
  emit(f, report_to_json(verdicts));
  return 0;
}

int run_whitehead(const CommonFlags& f, const std::string& target_text) {
  auto words = load_batch(f);
  Word w = words.front();
  OrbitSearchResult res;
  if (target_text.empty()) {
    res = aut_inverts(w, f.budget);
    std::cout << "query: does some automorphism send the word to its inverse?\n";
  } else {
    Word target = f.rank > 0 || f.expr ? parse_cli_word(target_text, f)
                                       : Word::parse_inferring_rank(target_text, w.rank());
    if (target.rank() < w.rank()) target = target.embedded(w.rank());
    if (w.rank() < target.rank()) w = w.embedded(target.rank());
    res = orbit_equivalent(w, target, f.budget);
    std::cout << "query: are the two words in the same automorphism orbit?\n";
  }
  std::cout << "word: " << w.str() << " (rank " << w.rank() << ")\n";
  switch (res.status) {
    case SearchStatus::Found: std::cout << "found: yes\n"; break;
    case SearchStatus::NotFound: std::cout << "found: no (definitive)\n"; break;
    case SearchStatus::BudgetExceeded: std::cout << "found: indeterminate (budget exhausted)\n"; break;
  }
  std::cout << "minimal length: " << res.stats.minimal_length << "\n"
            << "nodes explored: " << res.stats.nodes_explored
            << ", peak frontier: " << res.stats.peak_frontier << "\n";
  if (res.automorphism) {
    std::cout << "automorphism:\n" << res.automorphism->fwd().str();
    std::cout << "inverse:\n" << res.automorphism->inv().str();
    std::cout << "moves in trace: " << res.move_trace.size() << "\n";
  }
  return 0;
}

int run_image(const CommonFlags& f, const std::string& group_spec) {
  auto words = load_batch(f);
  const Word& w = words.front();
  FiniteGroup g = make_group(group_spec);
  ImageSet s = image(g, w, f.cap);
  std::cout << "group " << g.name() << " (order " << g.order() << "), word " << w.str() << "\n";
  std::cout << "image size " << s.members.size() << (s.members.size() == static_cast<std::size_t>(g.order()) ? " (onto)" : "")
            << ", inverse closed: " << (is_inverse_closed(s, g) ? "yes" : "no") << "\n";
  std::cout << "members:";
  for (int e : s.members) std::cout << ' ' << g.label(e);
  std::cout << "\n";
  return 0;
}

int run_witness(const CommonFlags& f) {
  auto words = load_batch(f);
  const Word& w = words.front();
  auto groups = f.catalog.empty() ? default_catalog() : parse_catalog(f.catalog);
  auto sweep = chirality_witness(w, groups, f.cap);
  std::cout << "word " << w.str() << ", catalog of " << groups.size() << " group(s)\n";
  if (sweep.witness) {
    std::cout << "witness: group " << sweep.witness->group << ", element "
              << sweep.witness->element_label << " lies in the image but its inverse does not\n"
              << "verdict: chiral\n";
  } else {
    std::cout << "no witness: every computed image is inverse closed "
                 "(not a proof of achirality)\n";
  }
  for (const auto& skipped : sweep.skipped) {
    std::cout << "skipped " << skipped << ": evaluation cap exceeded\n";
  }
  return 0;
}

int run_enumerate(const CommonFlags& f, int length, int length_cap) {
  auto opts = classify_options(f);
  opts.census_length_cap = length_cap;
  CensusReport rep = census(length, opts);
  emit(f, census_to_json(rep));
  return 0;
}

int run_engel(const CommonFlags& f, int max_n, const std::string& bracket) {
  const BracketConvention conv =
      bracket == "ABab" ? BracketConvention::ABab : BracketConvention::abAB;
  std::vector<Word> words;
  for (int n = 1; n <= max_n; ++n) words.push_back(engel(n, conv));
  auto verdicts = classify_batch(words, classify_options(f), f.jobs);
  emit(f, report_to_json(verdicts));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wordchir: decides whether words in free groups have inverse-closed "
               "word-map images on every group"};
  app.require_subcommand(1);

  CommonFlags f;

  auto* cls = app.add_subcommand("classify", "run the full rule pipeline on words");
  add_word_flags(cls, f, true);
  cls->add_option("--budget", f.budget, "node budget for the automorphism search");
  cls->add_option("--cap", f.cap, "tuple budget for word-map enumeration");
  cls->add_option("--catalog", f.catalog, "comma-separated witness groups, e.g. C2,S3,Q8");
  cls->add_option("--jobs", f.jobs, "parallel workers for batches");
  cls->add_option("--out,-o", f.out, "write the JSON report here instead of stdout");

  std::string target;
  auto* wh = app.add_subcommand("whitehead", "automorphism orbit search");
  add_word_flags(wh, f, false);
  wh->add_option("--target", target, "target word (default: the inverse of --word)");
  wh->add_option("--budget", f.budget, "node budget for the search");

  std::string group_spec;
  auto* img = app.add_subcommand("image", "word-map image on one group");
  add_word_flags(img, f, false);
  img->add_option("--group", group_spec, "group family (C6, D4, S4, Q8, C2xC2) or a Cayley file")
      ->required();
  img->add_option("--cap", f.cap, "tuple budget for the enumeration");

  auto* wit = app.add_subcommand("witness", "sweep a catalog for a chirality witness");
  add_word_flags(wit, f, false);
  wit->add_option("--catalog", f.catalog, "comma-separated group specs");
  wit->add_option("--cap", f.cap, "tuple budget per group");

  int length = 0;
  int length_cap = 7;
  auto* enu = app.add_subcommand("enumerate", "census of all rank-2 words of one length");
  enu->add_option("--length", length, "word length (1..7)")->required();
  enu->add_option("--length-cap", length_cap, "raise the census length cap past 7");
  enu->add_option("--budget", f.budget, "node budget per search");
  enu->add_option("--cap", f.cap, "tuple budget for sweeps");
  enu->add_option("--catalog", f.catalog, "witness groups for the classification");
  enu->add_option("--out,-o", f.out, "write the JSON census here");

  int engel_max = 0;
  std::string bracket = "abAB";
  auto* eng = app.add_subcommand("engel", "generate and classify iterated commutator words");
  eng->add_option("--max", engel_max, "classify e_1 .. e_max")->required();
  eng->add_option("--bracket", bracket, "commutator convention: abAB = a b a^-1 b^-1")
      ->check(CLI::IsMember({"abAB", "ABab"}));
  eng->add_option("--budget", f.budget, "node budget for the searches");
  eng->add_option("--cap", f.cap, "tuple budget for sweeps");
  eng->add_option("--catalog", f.catalog, "witness groups for the classification");
  eng->add_option("--jobs", f.jobs, "parallel workers");
  eng->add_option("--out,-o", f.out, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cls->parsed()) return run_classify(f);
    if (wh->parsed()) return run_whitehead(f, target);
    if (img->parsed()) return run_image(f, group_spec);
    if (wit->parsed()) return run_witness(f);
    if (enu->parsed()) return run_enumerate(f, length, length_cap);
    if (eng->parsed()) return run_engel(f, engel_max, bracket);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
