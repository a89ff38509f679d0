// Words in the standard presentation of a closed genus-g surface group
//   < a1, b1, ..., ag, bg | [a1,b1] ... [ag,bg] >
// together with Dehn's algorithm, homomorphisms between surface groups and
// exhaustive word enumeration.
#ifndef HYPSURF_SURFGRP_HPP
#define HYPSURF_SURFGRP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hypsurf {

/// Letter code 2*k + e: generator k (a_i is k = 2(i-1), b_i is k = 2i-1),
/// e = 1 for the inverse. Column order of coset tables follows the codes:
/// a1, a1^-1, b1, b1^-1, ...
using Letter = int;
using Word = std::vector<Letter>;

constexpr Letter inverse_letter(Letter l) { return l ^ 1; }
constexpr int generator_of(Letter l) { return l >> 1; }
constexpr bool is_inverse(Letter l) { return (l & 1) != 0; }
constexpr Letter letter_a(int i, bool inv = false) { return 4 * (i - 1) + (inv ? 1 : 0); }
constexpr Letter letter_b(int i, bool inv = false) { return 4 * (i - 1) + 2 + (inv ? 1 : 0); }

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word free_reduce(const Word& w);
/// Freely reduces, then strips letters x ... x^-1 from both ends.
Word cyclic_reduce(const Word& w);
bool is_freely_reduced(const Word& w);

std::string generator_name(int k);
std::string format_word(const Word& w);
/// Parses `a1 b2^-1 a1^2`; the empty string is the identity. Letters must
/// name generators below 2*genus.
Word parse_word(const std::string& text, int genus);

class SurfacePresentation {
 public:
  /// Throws BadGenusRange for genus < 2.
  explicit SurfacePresentation(int genus);

  int genus() const { return genus_; }
  int generator_count() const { return 2 * genus_; }
  int letter_count() const { return 4 * genus_; }
  const Word& relator() const { return relator_; }

  /// All cyclic rotations of the relator and of its inverse.
  const std::vector<Word>& relator_rotations() const { return rotations_; }

  bool operator==(const SurfacePresentation& o) const { return genus_ == o.genus_; }

 private:
  int genus_;
  Word relator_;
  std::vector<Word> rotations_;
  // rotations_ indices whose first letter is a given letter (exactly two).
  std::vector<std::vector<int>> by_first_;
  friend Word dehn_reduce(const SurfacePresentation&, const Word&);
};

/// Dehn's algorithm: free reduction plus replacement of any subword longer
/// than half a relator rotation by the inverse of its complement. Returns the
/// empty word iff w is trivial in the surface group.
Word dehn_reduce(const SurfacePresentation& p, const Word& w);

inline bool is_trivial(const SurfacePresentation& p, const Word& w) { return dehn_reduce(p, w).empty(); }

/// Homomorphism given by the images of the 2*source_genus generators.
struct SurfaceHom {
  int source_genus = 2;
  int target_genus = 2;
  std::vector<Word> images;
};

struct HomValidation {
  bool valid = false;
  Word reduced_relator_image;
};

HomValidation validate_hom(const SurfaceHom& f);
/// Throws RelatorImageNontrivial when validation fails.
void require_valid(const SurfaceHom& f);

Word apply_hom(const SurfaceHom& f, const Word& w);
/// (f o g)(x) = f(g(x)).
SurfaceHom compose(const SurfaceHom& f, const SurfaceHom& g);

SurfaceHom identity_hom(int genus);
/// Keeps the first `kept` handles and kills the others.
SurfaceHom mk_pinch(int source_genus, int kept);
/// Degree-2 map from genus 2g onto genus g: the second copy of the
/// generators is conjugated by the slit loop a1.
SurfaceHom mk_doubling(int base_genus);
Word doubling_slit_word();

/// Number of freely reduced words of length exactly len (len >= 1).
std::uint64_t reduced_word_count(int genus, int len);

/// Calls visit on every freely reduced word of length 1..max_len in
/// length-lexicographic order (letter order by code). For max_len == 0 the
/// empty word is visited once. Returning false from visit stops early.
void for_each_word(int genus, int max_len, const std::function<bool(const Word&)>& visit);
std::vector<Word> enumerate_words(int genus, int max_len);

}  // namespace hypsurf

#endif  // HYPSURF_SURFGRP_HPP
