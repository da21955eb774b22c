#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordchir/word.hpp"

namespace wordchir {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a word-map enumeration would exceed the tuple budget.
class EvalCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite group given by its Cayley table. Validated on construction:
// Latin square, two-sided identity, two-sided inverses, associativity
// (exhaustive up to order 64, random sampling above).
class FiniteGroup {
 public:
  // table is row-major, table[g*order + h] = g*h. Labels are optional.
  FiniteGroup(std::string name, int order, std::vector<int> table,
              std::vector<std::string> labels = {});

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int g) const { return inverses_[static_cast<std::size_t>(g)]; }
  int element_order(int g) const { return element_orders_[static_cast<std::size_t>(g)]; }
  // g^e by square-and-multiply, e reduced modulo the element order.
  int pow(int g, std::int64_t e) const;
  const std::string& label(int g) const { return labels_[static_cast<std::size_t>(g)]; }

  bool is_abelian() const;

 private:
  void validate() const;

  std::string name_;
  int order_;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inverses_;
  std::vector<int> element_orders_;
  std::vector<std::string> labels_;
};

inline constexpr int kDefaultOrderCap = 120;

// Families: C<k>, D<k> (order 2k), S<k> (k <= 5), A<k> (k <= 5), Q8, and
// 'x'-separated direct products such as C2xC2. Also accepts a path to a
// Cayley table file.
FiniteGroup make_group(std::string_view spec, int order_cap = kDefaultOrderCap);

// "order n" / "identity i" / n rows of n indices / optional "label i name".
FiniteGroup load_cayley_table(std::istream& in, std::string name);
FiniteGroup load_cayley_table_file(const std::string& path);
void write_cayley_table(std::ostream& out, const FiniteGroup& g);

// Comma-separated group specs.
std::vector<FiniteGroup> parse_catalog(std::string_view spec, int order_cap = kDefaultOrderCap);
// The sweep used when no catalog is given.
std::vector<std::string> default_catalog_specs();
std::vector<FiniteGroup> default_catalog();

inline constexpr std::uint64_t kDefaultEvalCap = 10'000'000;

// The image of the word map of w on G.
struct ImageSet {
  std::string group_name;
  Word word;
  std::vector<int> members;  // sorted element indices; always contains the identity
};

// Exact image by enumerating |G|^r tuples, r the number of distinct
// generators occurring in w. Throws EvalCapError if |G|^r > eval_cap.
ImageSet image(const FiniteGroup& g, const Word& w, std::uint64_t eval_cap = kDefaultEvalCap);

bool is_inverse_closed(const ImageSet& s, const FiniteGroup& g);

// True iff the image is all of G.
bool surjectivity_check(const Word& w, const FiniteGroup& g,
                        std::uint64_t eval_cap = kDefaultEvalCap);

struct WitnessHit {
  std::string group;
  int element;               // in G_w with inverse missing from G_w
  std::string element_label;
};

struct WitnessSweep {
  std::optional<WitnessHit> witness;
  // Groups skipped because the tuple budget was exceeded.
  std::vector<std::string> skipped;
};

// First catalog group whose image of w is not inverse closed. Cap errors
// are recorded per group and do not abort the sweep. An empty result is
// not a proof of achirality.
WitnessSweep chirality_witness(const Word& w, std::span<const FiniteGroup> groups,
                               std::uint64_t eval_cap = kDefaultEvalCap);

}  // namespace wordchir
