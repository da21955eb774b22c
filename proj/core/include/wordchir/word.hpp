#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordchir {

// A letter of the free group F_n: value +i denotes the generator x_i,
// value -i denotes x_i^{-1} (i is 1-based).
struct Letter {
  std::int32_t value = 1;

  constexpr Letter() = default;
  constexpr explicit Letter(std::int32_t v) : value(v) {}

  constexpr Letter inverse() const { return Letter{-value}; }
  constexpr int generator() const { return value < 0 ? -value : value; }
  constexpr bool is_inverse() const { return value < 0; }

  friend constexpr bool operator==(Letter, Letter) = default;
};

// Letter order used for every canonical form in this library:
// x1 < x1^{-1} < x2 < x2^{-1} < ...
constexpr std::uint32_t letter_ord(Letter l) {
  return 2 * static_cast<std::uint32_t>(l.generator()) - (l.value > 0 ? 1u : 0u);
}

constexpr bool letter_less(Letter a, Letter b) { return letter_ord(a) < letter_ord(b); }

// Signed exponent sums, entry i-1 for generator x_i.
using ExponentVector = std::vector<std::int64_t>;

// gcd of the entries' absolute values; all-zero vectors give 0.
std::int64_t exponent_gcd(std::span<const std::int64_t> sums);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  // Byte offset into the input text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A freely reduced word over the generators of F_rank. Immutable: every
// operation returns a new value, so words can be shared across threads.
class Word {
 public:
  // The identity word e of F_1.
  Word() = default;
  // The identity word e of F_rank.
  explicit Word(int rank);
  // Freely reduces `raw`. Letters must satisfy 0 < |value| <= rank.
  Word(int rank, std::span<const Letter> raw);
  // Convenience for literals: Word(2, {1, 2, -1, -2}).
  Word(int rank, std::initializer_list<std::int32_t> raw);

  // Accepts the indexed grammar ("x1^2 x2^-1", terms separated by optional
  // whitespace) and the compact one-letter-per-generator form ("aBab",
  // a..z generators, A..Z inverses). Whitespace-only input is e.
  static Word parse(std::string_view text, int rank);
  // Like parse, with rank taken to be the largest generator mentioned.
  static Word parse_inferring_rank(std::string_view text, int min_rank = 1);

  int rank() const { return rank_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }

  Word inverse() const;
  // Same letters viewed in F_new_rank; new_rank >= rank().
  Word embedded(int new_rank) const;
  ExponentVector exponent_vector() const;
  // True iff the letter sequence equals its own reversal.
  bool is_palindrome() const;
  bool is_cyclically_reduced() const;
  // Moves the first k letters to the end. Requires a cyclically reduced word.
  Word rotated(int k) const;

  // Indexed text form; identity renders as the empty string.
  std::string str() const;
  // Compact form, only for rank <= 26.
  std::string compact_str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend class WordBuilder;
  int rank_ = 1;
  std::vector<Letter> letters_;
};

// Incremental construction of a reduced word; push cancels against the tail.
class WordBuilder {
 public:
  explicit WordBuilder(int rank);
  void push(Letter l);
  void append(const Word& w);
  void append_inverse(const Word& w);
  int rank() const { return rank_; }
  // Finalizes the buffer; the builder is empty afterwards.
  Word take();

 private:
  int rank_;
  std::vector<Letter> buf_;
};

// Reduced product uv; ranks must match.
Word concat(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

// w^k, with w^0 = e and negative k through the inverse.
Word power(const Word& w, std::int64_t k);

enum class BracketConvention {
  abAB,  // [a,b] = a b a^{-1} b^{-1}
  ABab,  // [a,b] = a^{-1} b^{-1} a b
};

enum class ConjugationConvention {
  Right,  // g^h = h^{-1} g h
  Left,   // g^h = h g h^{-1}
};

Word commutator(const Word& a, const Word& b,
                BracketConvention convention = BracketConvention::abAB);
Word conjugated(const Word& g, const Word& h,
                ConjugationConvention convention = ConjugationConvention::Right);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // w = conjugator * core * conjugator^{-1}
};
CyclicReduction cyclic_reduce(const Word& w);

// Start index of the lexicographically least rotation under letter_ord.
int least_rotation_index(std::span<const Letter> letters);
// Lexicographically least rotation under letter_ord; requires a cyclically
// reduced word.
Word least_rotation(const Word& w);

// Shortlex under letter_ord (length first, then letters).
bool shortlex_less(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// Some c with p = c q c^{-1}, if p and q are conjugate.
std::optional<Word> conjugator_between(const Word& p, const Word& q);

// Relabels the generators occurring in w onto 1..k (order preserved).
struct RankCompression {
  Word compressed;
  // 1-based original generator index for each compressed index.
  std::vector<int> original_generator;
};
RankCompression compress_rank(const Word& w);

// All freely reduced words of the given length, in lexicographic order
// under letter_ord. There are 2r * (2r-1)^(length-1) of them.
std::vector<Word> enumerate_reduced_words(int rank, int length);

// Extended expression syntax for building long inputs: juxtaposition is
// multiplication, ^k is an integer power, ^(expr) conjugates by the chosen
// convention, [u,v] is the commutator, parentheses group. Generators are
// written x<digits> or as single compact letters (bare 'x' without digits
// is the compact letter x).
struct ExprOptions {
  ConjugationConvention conjugation = ConjugationConvention::Right;
  BracketConvention bracket = BracketConvention::abAB;
};
// rank 0 infers the rank from the largest generator mentioned.
Word parse_expression(std::string_view text, int rank, const ExprOptions& options = {});

}  // namespace wordchir
