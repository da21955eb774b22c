#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordchir/word.hpp"

namespace wordchir {

// An endomorphism of F_n, determined by the images of the generators.
class Endomorphism {
 public:
  // rank = images.size(); every image must have that rank.
  explicit Endomorphism(std::vector<Word> images);
  static Endomorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  // 1-based generator index.
  const Word& image(int generator) const;
  std::span<const Word> images() const { return images_; }

  Word apply(const Word& w) const;
  bool is_identity() const;

  // Images of the added generators are the empty word.
  Endomorphism extended_trivial(int new_rank) const;
  // The added generators map to themselves.
  Endomorphism extended_identity(int new_rank) const;

  // One line per generator: "xi -> <word>".
  std::string str() const;
  static Endomorphism parse(std::string_view text, int rank);

  // Extensional equality on generator images.
  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<Word> images_;
};

// f after g: apply(compose(f, g), w) == apply(f, apply(g, w)).
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

// True iff compose(f, g) and compose(g, f) fix every generator.
bool is_two_sided_inverse(const Endomorphism& f, const Endomorphism& g);

// An automorphism certified by an explicit two-sided inverse. Construction
// checks the inverse, so holding an Automorphism is holding the proof.
class Automorphism {
 public:
  Automorphism(Endomorphism forward, Endomorphism backward);
  static Automorphism identity(int rank);
  // g -> c g c^{-1}
  static Automorphism inner(const Word& c);
  // x_i -> x_{targets[i-1]}^{signs[i-1]}; signs default to all +1.
  static Automorphism signed_permutation(std::span<const int> targets,
                                         std::span<const int> signs = {});

  int rank() const { return fwd_.rank(); }
  const Endomorphism& fwd() const { return fwd_; }
  const Endomorphism& inv() const { return inv_; }

  Word apply(const Word& w) const { return fwd_.apply(w); }
  Automorphism inverse() const { return Automorphism(inv_, fwd_, Checked::kYes); }
  Automorphism extended_identity(int new_rank) const;

 private:
  enum class Checked { kYes };
  Automorphism(Endomorphism forward, Endomorphism backward, Checked);
  Endomorphism fwd_;
  Endomorphism inv_;
};

Automorphism compose(const Automorphism& f, const Automorphism& g);

// The inverting-map families used by the pattern rules. All of them are
// involutions, so they certify themselves.
enum class NamedFamily {
  InvertAll,      // x_i -> x_i^{-1}
  SwapInvert,     // x1 -> x2^{-1}, x2 -> x1^{-1}
  Swap,           // x1 <-> x2
  TwoBlock,       // inverts x1^{m1} x2^{m2}; params (m1, m2)
  FourBlockSame,  // inverts x1^m x2^{e} x1^n x2^{e};  params (m)
  FourBlockOpp,   // inverts x1^m x2^{e} x1^n x2^{-e}; params (m)
};

// Families other than InvertAll need rank >= 2; generators beyond x2 are
// fixed.
Automorphism named_family(NamedFamily name, std::span<const std::int64_t> params = {},
                          int rank = 2);
Automorphism named_family(NamedFamily name, std::initializer_list<std::int64_t> params,
                          int rank = 2);

std::string_view named_family_name(NamedFamily name);

enum class WitnessKind { EndomorphismWitness, AutomorphismWitness };

// The constructive content of achirality: endo maps word to its inverse.
struct InversionCertificate {
  Word word;
  Endomorphism endo;
  WitnessKind kind = WitnessKind::EndomorphismWitness;
  // Required two-sided inverse when kind is AutomorphismWitness.
  std::optional<Endomorphism> aut_proof;
};

InversionCertificate make_certificate(const Word& w, const Automorphism& aut);
InversionCertificate make_certificate(const Word& w, const Endomorphism& endo);

enum class CertStatus {
  Ok,
  RankMismatch,
  ImageMismatch,      // endo(word) != word^{-1}
  MissingAutProof,
  AutProofNotInverse,
};

CertStatus verify_certificate(const InversionCertificate& c);
inline bool certificate_ok(const InversionCertificate& c) {
  return verify_certificate(c) == CertStatus::Ok;
}
std::string_view cert_status_name(CertStatus s);

// Certificate for word^k with the same endomorphism; k != 0 and c must verify.
InversionCertificate power_certificate(const InversionCertificate& c, std::int64_t k);

}  // namespace wordchir
