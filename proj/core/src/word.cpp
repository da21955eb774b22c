#include "wordchir/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace wordchir {

namespace {

constexpr std::size_t kMaxWordLetters = 1u << 24;

void check_rank(int rank) {
  if (rank <= 0) throw std::invalid_argument("word rank must be positive");
}

void check_letter(Letter l, int rank) {
  if (l.value == 0) throw std::invalid_argument("letter value must be nonzero");
  if (l.generator() > rank) {
    throw std::invalid_argument("letter x" + std::to_string(l.generator()) +
                                " exceeds rank " + std::to_string(rank));
  }
}

}  // namespace

std::int64_t exponent_gcd(std::span<const std::int64_t> sums) {
  std::int64_t g = 0;
  for (std::int64_t s : sums) g = std::gcd(g, s);
  return g;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::span<const Letter> raw) : rank_(rank) {
  check_rank(rank);
  letters_.reserve(raw.size());
  for (Letter l : raw) {
    check_letter(l, rank);
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word::Word(int rank, std::initializer_list<std::int32_t> raw) : rank_(rank) {
  check_rank(rank);
  for (std::int32_t v : raw) {
    Letter l{v};
    check_letter(l, rank);
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::inverse() const {
  Word out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(it->inverse());
  }
  return out;
}

Word Word::embedded(int new_rank) const {
  if (new_rank < rank_) {
    throw std::invalid_argument("embed target rank " + std::to_string(new_rank) +
                                " is smaller than rank " + std::to_string(rank_));
  }
  Word out(new_rank);
  out.letters_ = letters_;
  return out;
}

ExponentVector Word::exponent_vector() const {
  ExponentVector sums(static_cast<std::size_t>(rank_), 0);
  for (Letter l : letters_) sums[static_cast<std::size_t>(l.generator() - 1)] += l.is_inverse() ? -1 : 1;
  return sums;
}

bool Word::is_palindrome() const {
  std::size_t i = 0, j = letters_.size();
  while (i + 1 < j) {
    if (letters_[i] != letters_[j - 1]) return false;
    ++i;
    --j;
  }
  return true;
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != letters_.back().inverse();
}

Word Word::rotated(int k) const {
  if (!is_cyclically_reduced()) {
    throw std::invalid_argument("rotation requires a cyclically reduced word");
  }
  if (letters_.empty()) return *this;
  const int n = length();
  k = ((k % n) + n) % n;
  Word out(rank_);
  out.letters_.reserve(letters_.size());
  out.letters_.insert(out.letters_.end(), letters_.begin() + k, letters_.end());
  out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.begin() + k);
  return out;
}

std::string Word::str() const {
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    std::int64_t exp = static_cast<std::int64_t>(j - i) * (letters_[i].is_inverse() ? -1 : 1);
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(letters_[i].generator());
    if (exp != 1) {
      out += '^';
      out += std::to_string(exp);
    }
    i = j;
  }
  return out;
}

std::string Word::compact_str() const {
  if (rank_ > 26) throw std::invalid_argument("compact form requires rank <= 26");
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    char base = l.is_inverse() ? 'A' : 'a';
    out += static_cast<char>(base + l.generator() - 1);
  }
  return out;
}

WordBuilder::WordBuilder(int rank) : rank_(rank) { check_rank(rank); }

void WordBuilder::push(Letter l) {
  check_letter(l, rank_);
  if (!buf_.empty() && buf_.back() == l.inverse()) {
    buf_.pop_back();
  } else {
    if (buf_.size() >= kMaxWordLetters) throw std::length_error("word too long");
    buf_.push_back(l);
  }
}

void WordBuilder::append(const Word& w) {
  if (w.rank() > rank_) throw std::invalid_argument("appended word exceeds builder rank");
  for (Letter l : w.letters()) push(l);
}

void WordBuilder::append_inverse(const Word& w) {
  if (w.rank() > rank_) throw std::invalid_argument("appended word exceeds builder rank");
  auto ls = w.letters();
  for (std::size_t i = ls.size(); i > 0; --i) push(ls[i - 1].inverse());
}

Word WordBuilder::take() {
  Word out(rank_);
  out.letters_ = std::move(buf_);
  buf_.clear();
  return out;
}

Word concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("concat requires equal ranks");
  WordBuilder b(u.rank());
  b.append(u);
  b.append(v);
  return b.take();
}

Word power(const Word& w, std::int64_t k) {
  WordBuilder b(w.rank());
  const std::int64_t reps = k < 0 ? -k : k;
  for (std::int64_t i = 0; i < reps; ++i) {
    if (k < 0) {
      b.append_inverse(w);
    } else {
      b.append(w);
    }
  }
  return b.take();
}

Word commutator(const Word& a, const Word& b, BracketConvention convention) {
  if (a.rank() != b.rank()) throw std::invalid_argument("commutator requires equal ranks");
  WordBuilder out(a.rank());
  if (convention == BracketConvention::abAB) {
    out.append(a);
    out.append(b);
    out.append_inverse(a);
    out.append_inverse(b);
  } else {
    out.append_inverse(a);
    out.append_inverse(b);
    out.append(a);
    out.append(b);
  }
  return out.take();
}

Word conjugated(const Word& g, const Word& h, ConjugationConvention convention) {
  if (g.rank() != h.rank()) throw std::invalid_argument("conjugation requires equal ranks");
  WordBuilder out(g.rank());
  if (convention == ConjugationConvention::Right) {
    out.append_inverse(h);
    out.append(g);
    out.append(h);
  } else {
    out.append(h);
    out.append(g);
    out.append_inverse(h);
  }
  return out.take();
}

CyclicReduction cyclic_reduce(const Word& w) {
  auto ls = w.letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i] == ls[j - 1].inverse()) {
    ++i;
    --j;
  }
  Word core(w.rank(), ls.subspan(i, j - i));
  Word conjugator(w.rank(), ls.subspan(0, i));
  return {std::move(core), std::move(conjugator)};
}

int least_rotation_index(std::span<const Letter> letters) {
  const int n = static_cast<int>(letters.size());
  if (n <= 1) return 0;
  auto val = [&](int idx) { return letter_ord(letters[static_cast<std::size_t>(idx % n)]); };
  int i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    auto a = val(i + k), b = val(j + k);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

Word least_rotation(const Word& w) {
  if (!w.is_cyclically_reduced()) {
    throw std::invalid_argument("least_rotation requires a cyclically reduced word");
  }
  return w.rotated(least_rotation_index(w.letters()));
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  auto la = a.letters(), lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i] != lb[i]) return letter_less(la[i], lb[i]);
  }
  return false;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(w.rank());
  for (Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l.value));
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<Word> conjugator_between(const Word& p, const Word& q) {
  if (p.rank() != q.rank()) return std::nullopt;
  auto rp = cyclic_reduce(p);
  auto rq = cyclic_reduce(q);
  if (rp.core.length() != rq.core.length()) return std::nullopt;
  const int n = rp.core.length();
  if (n == 0) {
    // p = q = e; any conjugator works.
    return concat(rp.conjugator, rq.conjugator.inverse());
  }
  for (int k = 0; k < n; ++k) {
    if (rq.core.rotated(k) == rp.core) {
      // rot_k(q^) = s^{-1} q^ s with s the length-k prefix of q^.
      Word s(p.rank(), rq.core.letters().subspan(0, static_cast<std::size_t>(k)));
      WordBuilder b(p.rank());
      b.append(rp.conjugator);
      b.append_inverse(s);
      b.append_inverse(rq.conjugator);
      return b.take();
    }
  }
  return std::nullopt;
}

RankCompression compress_rank(const Word& w) {
  std::vector<int> map(static_cast<std::size_t>(w.rank()) + 1, 0);
  for (Letter l : w.letters()) map[static_cast<std::size_t>(l.generator())] = 1;
  std::vector<int> original;
  for (int g = 1; g <= w.rank(); ++g) {
    if (map[static_cast<std::size_t>(g)]) {
      original.push_back(g);
      map[static_cast<std::size_t>(g)] = static_cast<int>(original.size());
    }
  }
  const int new_rank = original.empty() ? 1 : static_cast<int>(original.size());
  WordBuilder b(new_rank);
  for (Letter l : w.letters()) {
    int target = map[static_cast<std::size_t>(l.generator())];
    b.push(Letter{l.is_inverse() ? -target : target});
  }
  return {b.take(), std::move(original)};
}

std::vector<Word> enumerate_reduced_words(int rank, int length) {
  check_rank(rank);
  if (length < 0) throw std::invalid_argument("length must be nonnegative");
  std::vector<Letter> alphabet;
  for (int g = 1; g <= rank; ++g) {
    alphabet.push_back(Letter{g});
    alphabet.push_back(Letter{-g});
  }
  std::vector<Word> out;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(rank, std::span<const Letter>(cur));
      return;
    }
    for (Letter l : alphabet) {
      if (!cur.empty() && cur.back() == l.inverse()) continue;
      cur.push_back(l);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, length);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool looks_compact(std::string_view text) {
  bool saw_alpha = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isalpha(static_cast<unsigned char>(c))) return false;
    saw_alpha = true;
  }
  return saw_alpha;
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  std::int64_t digits() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected digits", pos);
    }
    if (peek() == '0') throw ParseError("indices and exponents may not start with 0", pos);
    std::int64_t v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > std::numeric_limits<std::int32_t>::max()) {
        throw ParseError("number too large", pos);
      }
      ++pos;
    }
    return v;
  }
};

void push_generator_power(WordBuilder& b, int gen, std::int64_t exp, std::size_t err_pos) {
  if (gen > b.rank()) {
    throw ParseError("generator x" + std::to_string(gen) + " exceeds rank " +
                         std::to_string(b.rank()),
                     err_pos);
  }
  const Letter l{exp < 0 ? -gen : gen};
  const std::int64_t reps = exp < 0 ? -exp : exp;
  for (std::int64_t i = 0; i < reps; ++i) b.push(l);
}

Word parse_indexed(std::string_view text, int rank) {
  WordBuilder b(rank);
  Cursor c{text};
  c.skip_ws();
  while (!c.done()) {
    if (c.peek() != 'x') throw ParseError("expected generator 'x<index>'", c.pos);
    std::size_t start = c.pos;
    ++c.pos;
    std::int64_t gen = c.digits();
    std::int64_t exp = 1;
    if (!c.done() && c.peek() == '^') {
      ++c.pos;
      bool neg = false;
      if (!c.done() && c.peek() == '-') {
        neg = true;
        ++c.pos;
      }
      exp = c.digits();
      if (neg) exp = -exp;
    }
    push_generator_power(b, static_cast<int>(gen), exp, start);
    c.skip_ws();
  }
  return b.take();
}

Word parse_compact(std::string_view text, int rank) {
  WordBuilder b(rank);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    int gen;
    bool inv;
    if (ch >= 'a' && ch <= 'z') {
      gen = ch - 'a' + 1;
      inv = false;
    } else if (ch >= 'A' && ch <= 'Z') {
      gen = ch - 'A' + 1;
      inv = true;
    } else {
      throw ParseError("unexpected character in compact word", i);
    }
    if (gen > rank) {
      throw ParseError(std::string("generator '") + ch + "' exceeds rank " + std::to_string(rank),
                       i);
    }
    b.push(Letter{inv ? -gen : gen});
  }
  return b.take();
}

int scan_max_generator(std::string_view text) {
  int max_gen = 0;
  if (looks_compact(text)) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      int gen = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
      max_gen = std::max(max_gen, gen);
    }
    return max_gen;
  }
  Cursor c{text};
  while (!c.done()) {
    if (c.peek() == 'x' && c.pos + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[c.pos + 1]))) {
      ++c.pos;
      std::size_t save = c.pos;
      try {
        max_gen = std::max<int>(max_gen, static_cast<int>(c.digits()));
      } catch (const ParseError&) {
        c.pos = save + 1;
      }
    } else {
      ++c.pos;
    }
  }
  return max_gen;
}

}  // namespace

Word Word::parse(std::string_view text, int rank) {
  check_rank(rank);
  if (looks_compact(text)) return parse_compact(text, rank);
  return parse_indexed(text, rank);
}

Word Word::parse_inferring_rank(std::string_view text, int min_rank) {
  int rank = std::max(min_rank, std::max(1, scan_max_generator(text)));
  return parse(text, rank);
}

// ---------------------------------------------------------------------------
// Expression parsing

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, int rank, const ExprOptions& options)
      : c_{text}, rank_(rank), options_(options) {}

  Word run() {
    Word w = parse_product(rank_);
    c_.skip_ws();
    if (!c_.done()) throw ParseError("unexpected trailing input", c_.pos);
    return w;
  }

  static int max_generator(std::string_view text) {
    int max_gen = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      if (ch == 'x' && i + 1 < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        std::size_t j = i + 1;
        long v = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) &&
               v < (1 << 20)) {
          v = v * 10 + (text[j] - '0');
          ++j;
        }
        max_gen = std::max<int>(max_gen, static_cast<int>(v));
        i = j - 1;
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        max_gen = std::max(max_gen, std::tolower(static_cast<unsigned char>(ch)) - 'a' + 1);
      }
    }
    return max_gen;
  }

 private:
  Word parse_product(int rank) {
    WordBuilder b(rank);
    c_.skip_ws();
    while (!c_.done() && c_.peek() != ')' && c_.peek() != ']' && c_.peek() != ',') {
      b.append(parse_factor(rank));
      c_.skip_ws();
    }
    return b.take();
  }

  Word parse_factor(int rank) {
    Word base = parse_atom(rank);
    c_.skip_ws();
    while (!c_.done() && c_.peek() == '^') {
      ++c_.pos;
      c_.skip_ws();
      if (!c_.done() && (c_.peek() == '-' || std::isdigit(static_cast<unsigned char>(c_.peek())))) {
        bool neg = c_.peek() == '-';
        if (neg) ++c_.pos;
        std::int64_t e = c_.digits();
        base = power(base, neg ? -e : e);
      } else {
        Word by = parse_atom(rank);
        base = conjugated(base, by, options_.conjugation);
      }
      c_.skip_ws();
    }
    return base;
  }

  Word parse_atom(int rank) {
    c_.skip_ws();
    if (c_.done()) throw ParseError("expected a word", c_.pos);
    char ch = c_.peek();
    if (ch == '(') {
      ++c_.pos;
      Word inner = parse_product(rank);
      expect(')');
      return inner;
    }
    if (ch == '[') {
      ++c_.pos;
      Word lhs = parse_product(rank);
      expect(',');
      Word rhs = parse_product(rank);
      expect(']');
      return commutator(lhs, rhs, options_.bracket);
    }
    if (ch == 'x' && c_.pos + 1 < c_.text.size() &&
        std::isdigit(static_cast<unsigned char>(c_.text[c_.pos + 1]))) {
      std::size_t start = c_.pos;
      ++c_.pos;
      std::int64_t gen = c_.digits();
      if (gen > rank) {
        throw ParseError("generator x" + std::to_string(gen) + " exceeds rank " +
                             std::to_string(rank),
                         start);
      }
      WordBuilder b(rank);
      b.push(Letter{static_cast<std::int32_t>(gen)});
      return b.take();
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      ++c_.pos;
      int gen = std::tolower(static_cast<unsigned char>(ch)) - 'a' + 1;
      if (gen > rank) {
        throw ParseError(std::string("generator '") + ch + "' exceeds rank " +
                             std::to_string(rank),
                         c_.pos - 1);
      }
      bool inv = std::isupper(static_cast<unsigned char>(ch));
      WordBuilder b(rank);
      b.push(Letter{inv ? -gen : gen});
      return b.take();
    }
    throw ParseError("unexpected character in expression", c_.pos);
  }

  void expect(char ch) {
    c_.skip_ws();
    if (c_.done() || c_.peek() != ch) {
      throw ParseError(std::string("expected '") + ch + "'", c_.pos);
    }
    ++c_.pos;
  }

  Cursor c_;
  int rank_;
  ExprOptions options_;
};

}  // namespace

Word parse_expression(std::string_view text, int rank, const ExprOptions& options) {
  if (rank == 0) rank = std::max(1, ExprParser::max_generator(text));
  check_rank(rank);
  return ExprParser(text, rank, options).run();
}

}  // namespace wordchir
