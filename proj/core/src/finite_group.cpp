#include "wordchir/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace wordchir {

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> table,
                         std::vector<std::string> labels)
    : name_(std::move(name)), order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (order_ <= 0) throw GroupError("group order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_)) {
    throw GroupError("cayley table size does not match order");
  }
  for (int v : table_) {
    if (v < 0 || v >= order_) throw GroupError("cayley table entry out of range");
  }

  // Locate the two-sided identity.
  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int g = 0; g < order_ && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw GroupError("group '" + name_ + "' has no two-sided identity");

  inverses_.assign(static_cast<std::size_t>(order_), -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h) {
      if (mul(g, h) == identity_ && mul(h, g) == identity_) {
        inverses_[static_cast<std::size_t>(g)] = h;
        break;
      }
    }
    if (inverses_[static_cast<std::size_t>(g)] < 0) {
      throw GroupError("group '" + name_ + "' lacks a two-sided inverse for element " +
                       std::to_string(g));
    }
  }

  validate();

  element_orders_.assign(static_cast<std::size_t>(order_), 1);
  for (int g = 0; g < order_; ++g) {
    int acc = g, ord = 1;
    while (acc != identity_) {
      acc = mul(acc, g);
      ++ord;
    }
    element_orders_[static_cast<std::size_t>(g)] = ord;
  }

  if (labels_.empty()) {
    labels_.reserve(static_cast<std::size_t>(order_));
    for (int g = 0; g < order_; ++g) labels_.push_back(std::to_string(g));
  } else if (labels_.size() != static_cast<std::size_t>(order_)) {
    throw GroupError("label count does not match order");
  }
}

void FiniteGroup::validate() const {
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(static_cast<std::size_t>(order_));
  for (int g = 0; g < order_; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < order_; ++h) {
      if (seen[static_cast<std::size_t>(mul(g, h))]++) {
        throw GroupError("row " + std::to_string(g) + " of '" + name_ + "' repeats an element");
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < order_; ++h) {
      if (seen[static_cast<std::size_t>(mul(h, g))]++) {
        throw GroupError("column " + std::to_string(g) + " of '" + name_ + "' repeats an element");
      }
    }
  }

  auto check_triple = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw GroupError("multiplication in '" + name_ + "' is not associative");
    }
  };
  if (order_ <= 64) {
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b) {
        for (int c = 0; c < order_; ++c) check_triple(a, b, c);
      }
    }
  } else {
    std::mt19937 rng(0x5eedu ^ static_cast<unsigned>(order_));
    std::uniform_int_distribution<int> pick(0, order_ - 1);
    for (int i = 0; i < 100000; ++i) check_triple(pick(rng), pick(rng), pick(rng));
  }
}

int FiniteGroup::pow(int g, std::int64_t e) const {
  const int ord = element_order(g);
  std::int64_t r = e % ord;
  if (r < 0) r += ord;
  int base = g, acc = identity_;
  while (r > 0) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

namespace {

FiniteGroup cyclic_group(int k) {
  if (k < 1) throw GroupError("cyclic group needs order >= 1");
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) table[static_cast<std::size_t>(a) * k + b] = (a + b) % k;
  }
  return FiniteGroup("C" + std::to_string(k), k, std::move(table));
}

// Order 2k; index r + k*s for the element rot^r * flip^s.
FiniteGroup dihedral_group(int k) {
  if (k < 1) throw GroupError("dihedral group needs k >= 1");
  const int n = 2 * k;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  auto idx = [&](int r, int s) { return ((r % k) + k) % k + k * s; };
  for (int r1 = 0; r1 < k; ++r1) {
    for (int s1 = 0; s1 < 2; ++s1) {
      for (int r2 = 0; r2 < k; ++r2) {
        for (int s2 = 0; s2 < 2; ++s2) {
          const int r = s1 ? r1 - r2 : r1 + r2;
          table[static_cast<std::size_t>(idx(r1, s1)) * n + idx(r2, s2)] = idx(r, s1 ^ s2);
        }
      }
    }
  }
  for (int s = 0; s < 2; ++s) {
    for (int r = 0; r < k; ++r) {
      std::string l = s ? "sr" : "r";
      labels.push_back(l + std::to_string(r));
    }
  }
  // labels were produced in index order r + k*s already
  return FiniteGroup("D" + std::to_string(k), n, std::move(table), std::move(labels));
}

std::string cycle_label(std::span<const int> perm) {
  const int k = static_cast<int>(perm.size());
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  std::string out;
  for (int i = 0; i < k; ++i) {
    if (seen[static_cast<std::size_t>(i)] || perm[static_cast<std::size_t>(i)] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = perm[static_cast<std::size_t>(j)];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

bool perm_is_even(std::span<const int> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0;
}

FiniteGroup permutation_group(int k, bool even_only) {
  if (k < 1 || k > 5) throw GroupError("symmetric/alternating groups are built for k <= 5");
  std::vector<std::vector<int>> elems;
  std::vector<int> p(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = i;
  do {
    if (!even_only || perm_is_even(p)) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);

  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> prod(static_cast<std::size_t>(k));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // composition: (a*b)(x) = a(b(x))
      for (int x = 0; x < k; ++x) {
        prod[static_cast<std::size_t>(x)] =
            elems[static_cast<std::size_t>(a)]
                 [static_cast<std::size_t>(elems[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
      }
      table[static_cast<std::size_t>(a) * n + b] = index.at(prod);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const auto& e : elems) labels.push_back(cycle_label(e));
  std::string name = (even_only ? "A" : "S") + std::to_string(k);
  return FiniteGroup(std::move(name), n, std::move(table), std::move(labels));
}

// Index 2*axis + sign, axes 1,i,j,k and sign 1 for the negative element.
FiniteGroup quaternion_group() {
  static constexpr int axis_mul[4][4] = {
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  };
  static constexpr int sign_mul[4][4] = {
      {+1, +1, +1, +1},
      {+1, -1, +1, -1},
      {+1, -1, -1, +1},
      {+1, +1, -1, -1},
  };
  const int n = 8;
  std::vector<int> table(64);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ax = a / 2, bx = b / 2;
      int sign = (a % 2) ^ (b % 2);
      if (sign_mul[ax][bx] < 0) sign ^= 1;
      table[static_cast<std::size_t>(a) * n + b] = 2 * axis_mul[ax][bx] + sign;
    }
  }
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup("Q8", n, std::move(table), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  auto idx = [&](int x, int y) { return x + a.order() * y; };
  for (int x1 = 0; x1 < a.order(); ++x1) {
    for (int y1 = 0; y1 < b.order(); ++y1) {
      for (int x2 = 0; x2 < a.order(); ++x2) {
        for (int y2 = 0; y2 < b.order(); ++y2) {
          table[static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
              idx(a.mul(x1, x2), b.mul(y1, y2));
        }
      }
    }
  }
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int y = 0; y < b.order(); ++y) {
    for (int x = 0; x < a.order(); ++x) {
      labels[static_cast<std::size_t>(idx(x, y))] = "(" + a.label(x) + "," + b.label(y) + ")";
    }
  }
  return FiniteGroup(a.name() + "x" + b.name(), n, std::move(table), std::move(labels));
}

FiniteGroup make_atom(std::string_view spec, int order_cap) {
  if (spec.empty()) throw GroupError("empty group spec");
  const char head = spec.front();
  std::string_view rest = spec.substr(1);
  auto parse_k = [&](int lo, int hi) {
    int k = 0;
    if (rest.empty()) throw GroupError("group spec '" + std::string(spec) + "' needs a size");
    for (char c : rest) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw GroupError("bad group spec '" + std::string(spec) + "'");
      }
      k = k * 10 + (c - '0');
      if (k > 100000) throw GroupError("group size too large");
    }
    if (k < lo || k > hi) {
      throw GroupError("group spec '" + std::string(spec) + "' out of supported range");
    }
    return k;
  };
  FiniteGroup g = [&] {
    switch (head) {
      case 'C': return cyclic_group(parse_k(1, order_cap));
      case 'D': return dihedral_group(parse_k(1, order_cap / 2));
      case 'S': return permutation_group(parse_k(1, 5), false);
      case 'A': return permutation_group(parse_k(1, 5), true);
      case 'Q':
        if (rest != "8") throw GroupError("only Q8 is built in");
        return quaternion_group();
      default: throw GroupError("unknown group family '" + std::string(spec) + "'");
    }
  }();
  if (g.order() > order_cap) {
    throw GroupError("group '" + g.name() + "' exceeds the order cap " +
                     std::to_string(order_cap));
  }
  return g;
}

}  // namespace

FiniteGroup make_group(std::string_view spec, int order_cap) {
  // A path wins over a family name when the file exists.
  if (spec.find('/') != std::string_view::npos || spec.find('.') != std::string_view::npos) {
    return load_cayley_table_file(std::string(spec));
  }
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t next = spec.find('x', pos);
    if (next == std::string_view::npos) {
      parts.push_back(spec.substr(pos));
      break;
    }
    parts.push_back(spec.substr(pos, next - pos));
    pos = next + 1;
  }
  FiniteGroup g = make_atom(parts[0], order_cap);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    FiniteGroup h = make_atom(parts[i], order_cap);
    if (static_cast<long long>(g.order()) * h.order() > order_cap) {
      throw GroupError("product '" + std::string(spec) + "' exceeds the order cap " +
                       std::to_string(order_cap));
    }
    g = direct_product(g, h);
  }
  return g;
}

FiniteGroup load_cayley_table(std::istream& in, std::string name) {
  std::string tok;
  int order = 0, identity = -1;
  if (!(in >> tok) || tok != "order" || !(in >> order) || order <= 0) {
    throw GroupError("cayley file: expected 'order <n>'");
  }
  if (!(in >> tok) || tok != "identity" || !(in >> identity)) {
    throw GroupError("cayley file: expected 'identity <i>'");
  }
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int i = 0; i < order * order; ++i) {
    int v;
    if (!(in >> v)) throw GroupError("cayley file: table is truncated");
    table.push_back(v);
  }
  std::vector<std::string> labels(static_cast<std::size_t>(order));
  bool any_label = false;
  while (in >> tok) {
    if (tok != "label") throw GroupError("cayley file: unexpected token '" + tok + "'");
    int i;
    std::string text;
    if (!(in >> i >> text) || i < 0 || i >= order) {
      throw GroupError("cayley file: bad label line");
    }
    labels[static_cast<std::size_t>(i)] = text;
    any_label = true;
  }
  if (any_label) {
    for (int i = 0; i < order; ++i) {
      if (labels[static_cast<std::size_t>(i)].empty()) {
        labels[static_cast<std::size_t>(i)] = std::to_string(i);
      }
    }
  } else {
    labels.clear();
  }
  FiniteGroup g(std::move(name), order, std::move(table), std::move(labels));
  if (g.identity() != identity) {
    throw GroupError("cayley file: declared identity " + std::to_string(identity) +
                     " but the table's identity is " + std::to_string(g.identity()));
  }
  return g;
}

FiniteGroup load_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupError("cannot open group file '" + path + "'");
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  return load_cayley_table(in, std::move(name));
}

void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  out << "order " << g.order() << "\n";
  out << "identity " << g.identity() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (b) out << ' ';
      out << g.mul(a, b);
    }
    out << "\n";
  }
}

std::vector<FiniteGroup> parse_catalog(std::string_view spec, int order_cap) {
  std::vector<FiniteGroup> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t next = spec.find(',', pos);
    std::string_view part =
        next == std::string_view::npos ? spec.substr(pos) : spec.substr(pos, next - pos);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) {
      part.remove_prefix(1);
    }
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) {
      part.remove_suffix(1);
    }
    if (!part.empty()) out.push_back(make_group(part, order_cap));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (out.empty()) throw GroupError("catalog spec is empty");
  return out;
}

std::vector<std::string> default_catalog_specs() {
  return {"C2", "C3", "C4", "C5", "C6", "C2xC2", "S3", "D4", "Q8", "A4", "S4"};
}

std::vector<FiniteGroup> default_catalog() {
  std::vector<FiniteGroup> out;
  for (const std::string& s : default_catalog_specs()) out.push_back(make_group(s));
  return out;
}

namespace {

struct Run {
  int local_gen;  // 0-based index into the occurring generators
  std::int64_t exp;
};

}  // namespace

ImageSet image(const FiniteGroup& g, const Word& w, std::uint64_t eval_cap) {
  // Generators absent from w contribute no tuples.
  std::vector<int> locals(static_cast<std::size_t>(w.rank()) + 1, -1);
  int r = 0;
  for (Letter l : w.letters()) {
    if (locals[static_cast<std::size_t>(l.generator())] < 0) {
      locals[static_cast<std::size_t>(l.generator())] = r++;
    }
  }

  std::vector<Run> runs;
  {
    auto ls = w.letters();
    std::size_t i = 0;
    while (i < ls.size()) {
      std::size_t j = i;
      while (j < ls.size() && ls[j] == ls[i]) ++j;
      runs.push_back(Run{locals[static_cast<std::size_t>(ls[i].generator())],
                         static_cast<std::int64_t>(j - i) * (ls[i].is_inverse() ? -1 : 1)});
      i = j;
    }
  }

  std::uint64_t tuples = 1;
  for (int i = 0; i < r; ++i) {
    if (tuples > eval_cap / static_cast<std::uint64_t>(g.order())) {
      throw EvalCapError("word-map enumeration on '" + g.name() + "' needs more than " +
                         std::to_string(eval_cap) +
                         " evaluations; raise the cap or shrink the catalog");
    }
    tuples *= static_cast<std::uint64_t>(g.order());
  }

  std::vector<char> mask(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> tuple(static_cast<std::size_t>(r), 0);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::uint64_t rem = t;
    for (int i = 0; i < r; ++i) {
      tuple[static_cast<std::size_t>(i)] = static_cast<int>(rem % g.order());
      rem /= static_cast<std::uint64_t>(g.order());
    }
    int acc = g.identity();
    for (const Run& run : runs) {
      acc = g.mul(acc, g.pow(tuple[static_cast<std::size_t>(run.local_gen)], run.exp));
    }
    mask[static_cast<std::size_t>(acc)] = 1;
  }

  ImageSet out;
  out.group_name = g.name();
  out.word = w;
  for (int e = 0; e < g.order(); ++e) {
    if (mask[static_cast<std::size_t>(e)]) out.members.push_back(e);
  }
  return out;
}

bool is_inverse_closed(const ImageSet& s, const FiniteGroup& g) {
  std::vector<char> mask(static_cast<std::size_t>(g.order()), 0);
  for (int e : s.members) {
    if (e < 0 || e >= g.order()) throw GroupError("image member out of range for " + g.name());
    mask[static_cast<std::size_t>(e)] = 1;
  }
  for (int e : s.members) {
    if (!mask[static_cast<std::size_t>(g.inverse(e))]) return false;
  }
  return true;
}

bool surjectivity_check(const Word& w, const FiniteGroup& g, std::uint64_t eval_cap) {
  return static_cast<int>(image(g, w, eval_cap).members.size()) == g.order();
}

WitnessSweep chirality_witness(const Word& w, std::span<const FiniteGroup> groups,
                               std::uint64_t eval_cap) {
  WitnessSweep sweep;
  for (const FiniteGroup& g : groups) {
    ImageSet s;
    try {
      s = image(g, w, eval_cap);
    } catch (const EvalCapError&) {
      sweep.skipped.push_back(g.name());
      continue;
    }
    std::vector<char> mask(static_cast<std::size_t>(g.order()), 0);
    for (int e : s.members) mask[static_cast<std::size_t>(e)] = 1;
    for (int e : s.members) {
      if (!mask[static_cast<std::size_t>(g.inverse(e))]) {
        sweep.witness = WitnessHit{g.name(), e, g.label(e)};
        return sweep;
      }
    }
  }
  return sweep;
}

}  // namespace wordchir
