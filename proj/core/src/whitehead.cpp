#include "wordchir/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace wordchir {

namespace {

// Type I enumeration is 2^n * n!, so cap the supported search rank.
constexpr int kMaxSearchRank = 6;

bool cut_contains(const std::vector<Letter>& cut, Letter l) {
  return std::find(cut.begin(), cut.end(), l) != cut.end();
}

std::size_t slot(Letter l) { return static_cast<std::size_t>(letter_ord(l)) - 1; }

std::vector<Word> type2_images(const WhiteheadMove& m, int rank) {
  const Letter a = m.multiplier;
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int g = 1; g <= rank; ++g) {
    WordBuilder b(rank);
    const Letter x{g};
    if (g == a.generator()) {
      b.push(x);
    } else {
      const bool pos = cut_contains(m.cut, x);
      const bool neg = cut_contains(m.cut, x.inverse());
      if (neg) b.push(a.inverse());
      b.push(x);
      if (pos) b.push(a);
    }
    images.push_back(b.take());
  }
  return images;
}

// Per-letter substitution table, indexed by letter_ord slot.
struct CompiledMove {
  std::vector<std::vector<Letter>> sub;
};

CompiledMove compile_move(const WhiteheadMove& m, int rank) {
  CompiledMove cm;
  cm.sub.resize(2 * static_cast<std::size_t>(rank));
  if (m.kind == WhiteheadMove::Kind::TypeI) {
    for (int g = 1; g <= rank; ++g) {
      Letter img{m.perm[static_cast<std::size_t>(g - 1)] *
                 m.signs[static_cast<std::size_t>(g - 1)]};
      cm.sub[slot(Letter{g})] = {img};
      cm.sub[slot(Letter{-g})] = {img.inverse()};
    }
  } else {
    auto images = type2_images(m, rank);
    for (int g = 1; g <= rank; ++g) {
      const Word& img = images[static_cast<std::size_t>(g - 1)];
      std::vector<Letter> fwd(img.letters().begin(), img.letters().end());
      std::vector<Letter> bwd;
      for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) bwd.push_back(it->inverse());
      cm.sub[slot(Letter{g})] = std::move(fwd);
      cm.sub[slot(Letter{-g})] = std::move(bwd);
    }
  }
  return cm;
}

// Substitute, freely reduce, cyclically reduce, rotate to the least form.
void apply_compiled(const CompiledMove& cm, std::span<const Letter> in,
                    std::vector<Letter>& out) {
  out.clear();
  for (Letter l : in) {
    for (Letter s : cm.sub[slot(l)]) {
      if (!out.empty() && out.back() == s.inverse()) {
        out.pop_back();
      } else {
        out.push_back(s);
      }
    }
  }
  std::size_t i = 0, j = out.size();
  while (j - i >= 2 && out[i] == out[j - 1].inverse()) {
    ++i;
    --j;
  }
  if (i > 0) {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(j), out.end());
    out.erase(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(i));
  } else if (j < out.size()) {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(j), out.end());
  }
  const int r = least_rotation_index(out);
  std::rotate(out.begin(), out.begin() + r, out.end());
}

bool letters_shortlex_less(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_less(a[i], b[i]);
  }
  return false;
}

std::string encode(std::span<const Letter> ls) {
  std::string s;
  s.reserve(ls.size());
  for (Letter l : ls) s.push_back(static_cast<char>(static_cast<signed char>(l.value)));
  return s;
}

void decode(const std::string& key, std::vector<Letter>& out) {
  out.clear();
  out.reserve(key.size());
  for (char c : key) out.push_back(Letter{static_cast<signed char>(c)});
}

void check_search_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (rank > kMaxSearchRank) {
    throw std::invalid_argument("whitehead moves are only enumerated up to rank " +
                                std::to_string(kMaxSearchRank));
  }
}

}  // namespace

Automorphism WhiteheadMove::automorphism(int rank) const {
  if (kind == Kind::TypeI) {
    if (static_cast<int>(perm.size()) != rank) {
      throw std::invalid_argument("type I move rank mismatch");
    }
    return Automorphism::signed_permutation(perm, signs);
  }
  if (multiplier.generator() > rank) throw std::invalid_argument("multiplier exceeds rank");
  Endomorphism fwd{type2_images(*this, rank)};
  Endomorphism bwd{type2_images(inverted(), rank)};
  return Automorphism(std::move(fwd), std::move(bwd));
}

WhiteheadMove WhiteheadMove::inverted() const {
  WhiteheadMove out;
  out.kind = kind;
  if (kind == Kind::TypeI) {
    const int n = static_cast<int>(perm.size());
    out.perm.resize(static_cast<std::size_t>(n));
    out.signs.resize(static_cast<std::size_t>(n));
    for (int g = 1; g <= n; ++g) {
      const int t = perm[static_cast<std::size_t>(g - 1)];
      out.perm[static_cast<std::size_t>(t - 1)] = g;
      out.signs[static_cast<std::size_t>(t - 1)] = signs[static_cast<std::size_t>(g - 1)];
    }
    return out;
  }
  out.multiplier = multiplier.inverse();
  out.cut.reserve(cut.size());
  for (Letter l : cut) out.cut.push_back(l == multiplier ? multiplier.inverse() : l);
  std::sort(out.cut.begin(), out.cut.end(), letter_less);
  return out;
}

std::string WhiteheadMove::str() const {
  std::string s;
  if (kind == Kind::TypeI) {
    s = "I:";
    for (std::size_t i = 0; i < perm.size(); ++i) {
      s += " x" + std::to_string(i + 1) + "->x" + std::to_string(perm[i]);
      if (signs[i] < 0) s += "^-1";
    }
    return s;
  }
  s = "II: a=";
  s += Word(multiplier.generator(), {multiplier.value}).str();
  s += ", A={";
  for (std::size_t i = 0; i < cut.size(); ++i) {
    if (i) s += ", ";
    s += Word(cut[i].generator(), {cut[i].value}).str();
  }
  s += '}';
  return s;
}

std::vector<WhiteheadMove> enumerate_moves(int rank) {
  check_search_rank(rank);
  std::vector<WhiteheadMove> moves;

  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      WhiteheadMove m;
      m.kind = WhiteheadMove::Kind::TypeI;
      m.perm = perm;
      m.signs.resize(static_cast<std::size_t>(rank));
      for (int i = 0; i < rank; ++i) {
        m.signs[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
      }
      moves.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Letter> letters;
  for (int g = 1; g <= rank; ++g) {
    letters.push_back(Letter{g});
    letters.push_back(Letter{-g});
  }
  for (Letter a : letters) {
    std::vector<Letter> others;
    for (Letter l : letters) {
      if (l != a && l != a.inverse()) others.push_back(l);
    }
    for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
      WhiteheadMove m;
      m.kind = WhiteheadMove::Kind::TypeII;
      m.multiplier = a;
      m.cut.push_back(a);
      for (std::size_t i = 0; i < others.size(); ++i) {
        if ((mask >> i) & 1u) m.cut.push_back(others[i]);
      }
      std::sort(m.cut.begin(), m.cut.end(), letter_less);
      moves.push_back(std::move(m));
    }
  }
  return moves;
}

Word apply_move(const WhiteheadMove& m, const Word& w, int rank) {
  if (!w.is_cyclically_reduced()) {
    throw std::invalid_argument("apply_move requires a cyclically reduced word");
  }
  CompiledMove cm = compile_move(m, rank);
  std::vector<Letter> out;
  apply_compiled(cm, w.letters(), out);
  return Word(rank, out);
}

MinimizationResult minimize(const Word& w) {
  check_search_rank(w.rank());
  const int rank = w.rank();
  Word current = cyclic_reduce(w).core;
  if (!current.empty()) current = least_rotation(current);

  auto moves = enumerate_moves(rank);
  std::vector<std::size_t> type2;
  std::vector<CompiledMove> compiled;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i].kind == WhiteheadMove::Kind::TypeII) {
      type2.push_back(i);
      compiled.push_back(compile_move(moves[i], rank));
    }
  }

  std::vector<WhiteheadMove> trace;
  std::vector<Letter> img, best_img;
  while (!current.empty()) {
    std::ptrdiff_t best = -1;
    for (std::size_t k = 0; k < type2.size(); ++k) {
      apply_compiled(compiled[k], current.letters(), img);
      if (static_cast<int>(img.size()) >= current.length()) continue;
      if (best < 0 || letters_shortlex_less(img, best_img)) {
        best = static_cast<std::ptrdiff_t>(k);
        best_img = img;
      }
    }
    if (best < 0) break;
    trace.push_back(moves[type2[static_cast<std::size_t>(best)]]);
    current = Word(rank, best_img);
  }
  return {std::move(current), std::move(trace)};
}

Word replay_trace(const Word& w, const std::vector<WhiteheadMove>& trace) {
  Word current = cyclic_reduce(w).core;
  if (!current.empty()) current = least_rotation(current);
  for (const WhiteheadMove& m : trace) current = apply_move(m, current, w.rank());
  return current;
}

OrbitSearchResult orbit_equivalent(const Word& u, const Word& v, std::uint64_t budget) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument("orbit_equivalent requires equal ranks");
  }
  check_search_rank(u.rank());
  const int rank = u.rank();

  OrbitSearchResult res;
  auto mu = minimize(u);
  auto mv = minimize(v);
  res.stats.minimal_length = mu.minimal.length();

  if (mu.minimal.length() != mv.minimal.length()) {
    res.status = SearchStatus::NotFound;
    return res;
  }
  if (u == v || mu.minimal.empty()) {
    // Equal inputs, or both words are the identity.
    res.status = SearchStatus::Found;
    res.automorphism = Automorphism::identity(rank);
    return res;
  }

  const int level = mu.minimal.length();
  auto moves = enumerate_moves(rank);
  std::vector<CompiledMove> compiled;
  compiled.reserve(moves.size());
  for (const auto& m : moves) compiled.push_back(compile_move(m, rank));

  const std::string start = encode(mu.minimal.letters());
  const std::string target = encode(mv.minimal.letters());

  std::vector<WhiteheadMove> path;
  if (start != target) {
    std::unordered_map<std::string, std::int32_t> id;
    std::vector<const std::string*> key_of;
    std::vector<std::int32_t> parent, via;
    auto add_node = [&](std::string key, std::int32_t from,
                        std::int32_t move_idx) -> std::pair<std::int32_t, bool> {
      auto [it, inserted] = id.try_emplace(std::move(key), static_cast<std::int32_t>(key_of.size()));
      if (!inserted) return {it->second, false};
      key_of.push_back(&it->first);
      parent.push_back(from);
      via.push_back(move_idx);
      return {it->second, true};
    };
    add_node(start, -1, -1);

    std::deque<std::int32_t> queue{0};
    std::uint64_t explored = 0;
    std::uint64_t peak = 1;
    std::int32_t found_node = -1;
    std::vector<Letter> in_buf, out_buf;

    while (!queue.empty() && found_node < 0) {
      if (explored >= budget) {
        res.status = SearchStatus::BudgetExceeded;
        res.stats.nodes_explored = explored;
        res.stats.peak_frontier = peak;
        return res;
      }
      const std::int32_t cur = queue.front();
      queue.pop_front();
      ++explored;
      decode(*key_of[static_cast<std::size_t>(cur)], in_buf);
      for (std::size_t mi = 0; mi < compiled.size(); ++mi) {
        apply_compiled(compiled[mi], in_buf, out_buf);
        if (static_cast<int>(out_buf.size()) != level) continue;
        auto [node, fresh] = add_node(encode(out_buf), cur, static_cast<std::int32_t>(mi));
        if (!fresh) continue;
        if (*key_of[static_cast<std::size_t>(node)] == target) {
          found_node = node;
          break;
        }
        queue.push_back(node);
        peak = std::max<std::uint64_t>(peak, queue.size());
      }
    }
    res.stats.nodes_explored = explored;
    res.stats.peak_frontier = peak;
    if (found_node < 0) {
      res.status = SearchStatus::NotFound;
      return res;
    }
    for (std::int32_t n = found_node; parent[static_cast<std::size_t>(n)] >= 0;
         n = parent[static_cast<std::size_t>(n)]) {
      path.push_back(moves[static_cast<std::size_t>(via[static_cast<std::size_t>(n)])]);
    }
    std::reverse(path.begin(), path.end());
  }

  auto compose_moves = [&](const std::vector<WhiteheadMove>& ms) {
    Automorphism acc = Automorphism::identity(rank);
    for (const WhiteheadMove& m : ms) acc = compose(m.automorphism(rank), acc);
    return acc;
  };

  const Automorphism alpha_u = compose_moves(mu.trace);
  const Automorphism alpha_v = compose_moves(mv.trace);
  const Automorphism beta = compose_moves(path);
  const Automorphism sigma = compose(alpha_v.inverse(), compose(beta, alpha_u));

  const Word image = sigma.apply(u);
  auto c = conjugator_between(v, image);
  if (!c) throw std::logic_error("whitehead search image is not conjugate to the target");
  Automorphism exact = compose(Automorphism::inner(*c), sigma);
  if (exact.apply(u) != v) {
    throw std::logic_error("whitehead automorphism failed the exactness check");
  }

  res.status = SearchStatus::Found;
  res.move_trace = mu.trace;
  res.move_trace.insert(res.move_trace.end(), path.begin(), path.end());
  for (auto it = mv.trace.rbegin(); it != mv.trace.rend(); ++it) {
    res.move_trace.push_back(it->inverted());
  }
  res.automorphism = std::move(exact);
  return res;
}

OrbitSearchResult aut_inverts(const Word& w, std::uint64_t budget) {
  return orbit_equivalent(w, w.inverse(), budget);
}

}  // namespace wordchir
