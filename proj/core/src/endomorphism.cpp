#include "wordchir/endomorphism.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wordchir {

Endomorphism::Endomorphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("endomorphism needs at least one generator");
  const int rank = static_cast<int>(images_.size());
  for (const Word& w : images_) {
    if (w.rank() != rank) {
      throw std::invalid_argument("endomorphism image rank mismatch");
    }
  }
}

Endomorphism Endomorphism::identity(int rank) {
  if (rank <= 0) throw std::invalid_argument("rank must be positive");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int g = 1; g <= rank; ++g) images.emplace_back(rank, std::initializer_list<std::int32_t>{g});
  return Endomorphism(std::move(images));
}

const Word& Endomorphism::image(int generator) const {
  if (generator < 1 || generator > rank()) {
    throw std::invalid_argument("generator index out of range");
  }
  return images_[static_cast<std::size_t>(generator - 1)];
}

Word Endomorphism::apply(const Word& w) const {
  if (w.rank() != rank()) throw std::invalid_argument("apply requires equal ranks");
  WordBuilder b(rank());
  for (Letter l : w.letters()) {
    const Word& img = images_[static_cast<std::size_t>(l.generator() - 1)];
    if (l.is_inverse()) {
      b.append_inverse(img);
    } else {
      b.append(img);
    }
  }
  return b.take();
}

bool Endomorphism::is_identity() const {
  for (int g = 1; g <= rank(); ++g) {
    const Word& img = image(g);
    if (img.length() != 1 || img.letter(0) != Letter{g}) return false;
  }
  return true;
}

Endomorphism Endomorphism::extended_trivial(int new_rank) const {
  if (new_rank < rank()) throw std::invalid_argument("cannot extend to a smaller rank");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(new_rank));
  for (const Word& w : images_) images.push_back(w.embedded(new_rank));
  for (int g = rank() + 1; g <= new_rank; ++g) images.emplace_back(new_rank);
  return Endomorphism(std::move(images));
}

Endomorphism Endomorphism::extended_identity(int new_rank) const {
  if (new_rank < rank()) throw std::invalid_argument("cannot extend to a smaller rank");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(new_rank));
  for (const Word& w : images_) images.push_back(w.embedded(new_rank));
  for (int g = rank() + 1; g <= new_rank; ++g) {
    images.emplace_back(new_rank, std::initializer_list<std::int32_t>{g});
  }
  return Endomorphism(std::move(images));
}

std::string Endomorphism::str() const {
  std::string out;
  for (int g = 1; g <= rank(); ++g) {
    out += 'x';
    out += std::to_string(g);
    out += " -> ";
    out += image(g).str();
    out += '\n';
  }
  return out;
}

Endomorphism Endomorphism::parse(std::string_view text, int rank) {
  if (rank <= 0) throw std::invalid_argument("rank must be positive");
  std::vector<Word> images(static_cast<std::size_t>(rank), Word(rank));
  std::vector<bool> seen(static_cast<std::size_t>(rank), false);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = line;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    if (s.empty()) continue;
    if (s.front() != 'x') {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'xi -> <word>'", line_no);
    }
    s.remove_prefix(1);
    std::size_t d = 0;
    while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
    if (d == 0) {
      throw ParseError("line " + std::to_string(line_no) + ": expected a generator index",
                       line_no);
    }
    int gen = std::stoi(std::string(s.substr(0, d)));
    s.remove_prefix(d);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    if (s.size() < 2 || s[0] != '-' || s[1] != '>') {
      throw ParseError("line " + std::to_string(line_no) + ": expected '->' after generator",
                       line_no);
    }
    s.remove_prefix(2);
    if (gen < 1 || gen > rank) {
      throw ParseError("line " + std::to_string(line_no) + ": generator index out of range",
                       line_no);
    }
    images[static_cast<std::size_t>(gen - 1)] = Word::parse(s, rank);
    seen[static_cast<std::size_t>(gen - 1)] = true;
  }
  for (int g = 1; g <= rank; ++g) {
    if (!seen[static_cast<std::size_t>(g - 1)]) {
      throw ParseError("missing image for x" + std::to_string(g), 0);
    }
  }
  return Endomorphism(std::move(images));
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("compose requires equal ranks");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(f.rank()));
  for (int i = 1; i <= g.rank(); ++i) images.push_back(f.apply(g.image(i)));
  return Endomorphism(std::move(images));
}

bool is_two_sided_inverse(const Endomorphism& f, const Endomorphism& g) {
  if (f.rank() != g.rank()) return false;
  return compose(f, g).is_identity() && compose(g, f).is_identity();
}

Automorphism::Automorphism(Endomorphism forward, Endomorphism backward)
    : fwd_(std::move(forward)), inv_(std::move(backward)) {
  if (!is_two_sided_inverse(fwd_, inv_)) {
    throw std::invalid_argument("supplied maps are not mutually inverse");
  }
}

Automorphism::Automorphism(Endomorphism forward, Endomorphism backward, Checked)
    : fwd_(std::move(forward)), inv_(std::move(backward)) {}

Automorphism Automorphism::identity(int rank) {
  Endomorphism id = Endomorphism::identity(rank);
  return Automorphism(id, id, Checked::kYes);
}

Automorphism Automorphism::inner(const Word& c) {
  const int rank = c.rank();
  std::vector<Word> fwd, inv;
  for (int g = 1; g <= rank; ++g) {
    Word x(rank, {g});
    fwd.push_back(concat(c, concat(x, c.inverse())));
    inv.push_back(concat(c.inverse(), concat(x, c)));
  }
  return Automorphism(Endomorphism(std::move(fwd)), Endomorphism(std::move(inv)), Checked::kYes);
}

Automorphism Automorphism::signed_permutation(std::span<const int> targets,
                                              std::span<const int> signs) {
  const int rank = static_cast<int>(targets.size());
  if (rank == 0) throw std::invalid_argument("empty permutation");
  if (!signs.empty() && signs.size() != targets.size()) {
    throw std::invalid_argument("signs must match targets");
  }
  std::vector<int> seen(static_cast<std::size_t>(rank), 0);
  for (int t : targets) {
    if (t < 1 || t > rank || seen[static_cast<std::size_t>(t - 1)]++) {
      throw std::invalid_argument("targets must be a permutation of 1..rank");
    }
  }
  std::vector<Word> fwd(static_cast<std::size_t>(rank), Word(rank));
  std::vector<Word> inv(static_cast<std::size_t>(rank), Word(rank));
  for (int g = 1; g <= rank; ++g) {
    int t = targets[static_cast<std::size_t>(g - 1)];
    int s = signs.empty() ? 1 : signs[static_cast<std::size_t>(g - 1)];
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    fwd[static_cast<std::size_t>(g - 1)] = Word(rank, {s * t});
    inv[static_cast<std::size_t>(t - 1)] = Word(rank, {s * g});
  }
  return Automorphism(Endomorphism(std::move(fwd)), Endomorphism(std::move(inv)), Checked::kYes);
}

Automorphism Automorphism::extended_identity(int new_rank) const {
  return Automorphism(fwd_.extended_identity(new_rank), inv_.extended_identity(new_rank),
                      Checked::kYes);
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  return Automorphism(compose(f.fwd(), g.fwd()), compose(g.inv(), f.inv()));
}

namespace {

Word word_of(int rank, std::initializer_list<std::int32_t> ls) { return Word(rank, ls); }

// x1 -> conj * x1^{-1} * conj^{-1} style images assembled from powers.
Word sandwich(int rank, const Word& left, std::int32_t core, const Word& right) {
  WordBuilder b(rank);
  b.append(left);
  b.push(Letter{core});
  b.append(right);
  return b.take();
}

}  // namespace

Automorphism named_family(NamedFamily name, std::span<const std::int64_t> params, int rank) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw std::invalid_argument(std::string(named_family_name(name)) + " expects " +
                                  std::to_string(n) + " parameter(s)");
    }
  };
  auto x = [&](int g) { return word_of(rank, {g}); };

  switch (name) {
    case NamedFamily::InvertAll: {
      need(0);
      if (rank < 1) throw std::invalid_argument("rank must be positive");
      std::vector<Word> images;
      for (int g = 1; g <= rank; ++g) images.push_back(x(-g));
      Endomorphism f{std::move(images)};
      return Automorphism(f, f);
    }
    case NamedFamily::SwapInvert: {
      need(0);
      if (rank < 2) throw std::invalid_argument("family needs rank >= 2");
      std::vector<Word> images{x(-2), x(-1)};
      for (int g = 3; g <= rank; ++g) images.push_back(x(g));
      Endomorphism f{std::move(images)};
      return Automorphism(f, f);
    }
    case NamedFamily::Swap: {
      need(0);
      if (rank < 2) throw std::invalid_argument("family needs rank >= 2");
      std::vector<Word> images{x(2), x(1)};
      for (int g = 3; g <= rank; ++g) images.push_back(x(g));
      Endomorphism f{std::move(images)};
      return Automorphism(f, f);
    }
    case NamedFamily::TwoBlock: {
      need(2);
      if (rank < 2) throw std::invalid_argument("family needs rank >= 2");
      const std::int64_t m2 = params[1];
      Word conj = power(x(2), -m2);
      std::vector<Word> images{sandwich(rank, conj, -1, conj.inverse()), x(-2)};
      for (int g = 3; g <= rank; ++g) images.push_back(x(g));
      Endomorphism f{std::move(images)};
      return Automorphism(f, f);
    }
    case NamedFamily::FourBlockSame: {
      need(1);
      if (rank < 2) throw std::invalid_argument("family needs rank >= 2");
      Word conj = power(x(1), params[0]);
      std::vector<Word> images{x(-1), sandwich(rank, conj, -2, conj.inverse())};
      for (int g = 3; g <= rank; ++g) images.push_back(x(g));
      Endomorphism f{std::move(images)};
      return Automorphism(f, f);
    }
    case NamedFamily::FourBlockOpp: {
      need(1);
      if (rank < 2) throw std::invalid_argument("family needs rank >= 2");
      Word conj = power(x(1), params[0]);
      std::vector<Word> images{x(-1), sandwich(rank, conj, 2, conj.inverse())};
      for (int g = 3; g <= rank; ++g) images.push_back(x(g));
      Endomorphism f{std::move(images)};
      return Automorphism(f, f);
    }
  }
  throw std::invalid_argument("unknown family");
}

Automorphism named_family(NamedFamily name, std::initializer_list<std::int64_t> params,
                          int rank) {
  return named_family(name, std::span<const std::int64_t>(params.begin(), params.size()), rank);
}

std::string_view named_family_name(NamedFamily name) {
  switch (name) {
    case NamedFamily::InvertAll: return "InvertAll";
    case NamedFamily::SwapInvert: return "SwapInvert";
    case NamedFamily::Swap: return "Swap";
    case NamedFamily::TwoBlock: return "TwoBlock";
    case NamedFamily::FourBlockSame: return "FourBlockSame";
    case NamedFamily::FourBlockOpp: return "FourBlockOpp";
  }
  return "?";
}

InversionCertificate make_certificate(const Word& w, const Automorphism& aut) {
  return InversionCertificate{w, aut.fwd(), WitnessKind::AutomorphismWitness, aut.inv()};
}

InversionCertificate make_certificate(const Word& w, const Endomorphism& endo) {
  return InversionCertificate{w, endo, WitnessKind::EndomorphismWitness, std::nullopt};
}

CertStatus verify_certificate(const InversionCertificate& c) {
  if (c.word.rank() != c.endo.rank()) return CertStatus::RankMismatch;
  if (c.endo.apply(c.word) != c.word.inverse()) return CertStatus::ImageMismatch;
  if (c.kind == WitnessKind::AutomorphismWitness) {
    if (!c.aut_proof) return CertStatus::MissingAutProof;
    if (c.aut_proof->rank() != c.endo.rank()) return CertStatus::RankMismatch;
    if (!is_two_sided_inverse(c.endo, *c.aut_proof)) return CertStatus::AutProofNotInverse;
  }
  return CertStatus::Ok;
}

std::string_view cert_status_name(CertStatus s) {
  switch (s) {
    case CertStatus::Ok: return "ok";
    case CertStatus::RankMismatch: return "rank mismatch";
    case CertStatus::ImageMismatch: return "image is not the inverse word";
    case CertStatus::MissingAutProof: return "automorphism witness lacks an inverse";
    case CertStatus::AutProofNotInverse: return "supplied inverse is not two-sided";
  }
  return "?";
}

InversionCertificate power_certificate(const InversionCertificate& c, std::int64_t k) {
  if (k == 0) throw std::invalid_argument("power_certificate requires k != 0");
  if (verify_certificate(c) != CertStatus::Ok) {
    throw std::invalid_argument("power_certificate requires a valid certificate");
  }
  InversionCertificate out = c;
  out.word = power(c.word, k);
  return out;
}

}  // namespace wordchir
