#include "hypsurf/surfgrp.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hypsurf/errors.hpp"

namespace hypsurf {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = inverse_letter(l);
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  for (Letter l : u) {
    if (!out.empty() && out.back() == inverse_letter(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  for (Letter l : v) {
    if (!out.empty() && out.back() == inverse_letter(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word free_reduce(const Word& w) { return concat(w, {}); }

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == inverse_letter(r[hi - 1])) ++lo, --hi;
  return Word(r.begin() + lo, r.begin() + hi);
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse_letter(w[i - 1])) return false;
  return true;
}

std::string generator_name(int k) {
  return std::string(k % 2 == 0 ? "a" : "b") + std::to_string(k / 2 + 1);
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += generator_name(generator_of(w[i]));
    if (is_inverse(w[i])) out += "^-1";
  }
  return out;
}

Word parse_word(const std::string& text, int genus) {
  std::istringstream is(text);
  std::string tok;
  Word out;
  while (is >> tok) {
    std::size_t pos = 0;
    char kind = static_cast<char>(std::tolower(static_cast<unsigned char>(tok[0])));
    if (kind != 'a' && kind != 'b') throw DomainError(ErrorKind::ParseError, "bad generator token '" + tok + "'");
    ++pos;
    std::size_t digits = pos;
    while (digits < tok.size() && std::isdigit(static_cast<unsigned char>(tok[digits]))) ++digits;
    if (digits == pos) throw DomainError(ErrorKind::ParseError, "missing generator index in '" + tok + "'");
    int handle = std::stoi(tok.substr(pos, digits - pos));
    if (handle < 1 || handle > genus)
      throw DomainError(ErrorKind::ParseError,
                        "generator '" + tok + "' out of range for genus " + std::to_string(genus));
    int exponent = 1;
    if (digits < tok.size()) {
      if (tok[digits] != '^') throw DomainError(ErrorKind::ParseError, "bad token '" + tok + "'");
      try {
        std::size_t used = 0;
        exponent = std::stoi(tok.substr(digits + 1), &used);
        if (used != tok.size() - digits - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw DomainError(ErrorKind::ParseError, "bad exponent in '" + tok + "'");
      }
      if (exponent == 0) throw DomainError(ErrorKind::ParseError, "zero exponent in '" + tok + "'");
    }
    Letter l = kind == 'a' ? letter_a(handle, exponent < 0) : letter_b(handle, exponent < 0);
    for (int i = 0; i < std::abs(exponent); ++i) out.push_back(l);
  }
  return out;
}

// ---------------------------------------------------------------------------

SurfacePresentation::SurfacePresentation(int genus) : genus_(genus) {
  if (genus < 2) throw DomainError(ErrorKind::BadGenusRange, "surface genus must be at least 2");
  for (int i = 1; i <= genus; ++i) {
    relator_.push_back(letter_a(i));
    relator_.push_back(letter_b(i));
    relator_.push_back(letter_a(i, true));
    relator_.push_back(letter_b(i, true));
  }
  const int n = letter_count();
  by_first_.assign(n, {});
  for (const Word& base : {relator_, inverse(relator_)}) {
    for (int s = 0; s < n; ++s) {
      Word rot(base.begin() + s, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + s);
      by_first_[rot.front()].push_back(static_cast<int>(rotations_.size()));
      rotations_.push_back(std::move(rot));
    }
  }
}

Word dehn_reduce(const SurfacePresentation& p, const Word& input) {
  const std::size_t n = p.letter_count();
  const std::size_t half = n / 2;
  Word w = free_reduce(input);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (int ri : p.by_first_[w[i]]) {
        const Word& r = p.rotations_[ri];
        std::size_t m = 0;
        while (m < n && i + m < w.size() && w[i + m] == r[m]) ++m;
        if (m <= half) continue;
        // w[i, i+m) = r[0, m) equals the inverse of r[m, n).
        Word replacement;
        for (std::size_t k = n; k > m; --k) replacement.push_back(inverse_letter(r[k - 1]));
        Word next(w.begin(), w.begin() + i);
        next.insert(next.end(), replacement.begin(), replacement.end());
        next.insert(next.end(), w.begin() + i + m, w.end());
        w = free_reduce(next);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// ---------------------------------------------------------------------------

HomValidation validate_hom(const SurfaceHom& f) {
  SurfacePresentation source(f.source_genus);
  SurfacePresentation target(f.target_genus);
  if (f.images.size() != static_cast<std::size_t>(source.generator_count()))
    throw DomainError(ErrorKind::ConstructionInvalid, "homomorphism needs one image per source generator");
  HomValidation out;
  out.reduced_relator_image = dehn_reduce(target, apply_hom(f, source.relator()));
  out.valid = out.reduced_relator_image.empty();
  return out;
}

void require_valid(const SurfaceHom& f) {
  auto v = validate_hom(f);
  if (!v.valid)
    throw DomainError(ErrorKind::RelatorImageNontrivial,
                      "relator maps to '" + format_word(v.reduced_relator_image) + "'");
}

Word apply_hom(const SurfaceHom& f, const Word& w) {
  Word out;
  for (Letter l : w) {
    const Word& img = f.images.at(generator_of(l));
    out = concat(out, is_inverse(l) ? inverse(img) : img);
  }
  return out;
}

SurfaceHom compose(const SurfaceHom& f, const SurfaceHom& g) {
  SurfaceHom out{g.source_genus, f.target_genus, {}};
  for (const Word& img : g.images) out.images.push_back(apply_hom(f, img));
  return out;
}

SurfaceHom identity_hom(int genus) {
  SurfaceHom out{genus, genus, {}};
  for (int k = 0; k < 2 * genus; ++k) out.images.push_back({2 * k});
  return out;
}

SurfaceHom mk_pinch(int source_genus, int kept) {
  if (kept < 2 || kept >= source_genus)
    throw DomainError(ErrorKind::BadGenusRange, "pinch needs 2 <= kept < source genus");
  SurfaceHom out{source_genus, kept, {}};
  for (int k = 0; k < 2 * source_genus; ++k) {
    if (k < 2 * kept) {
      out.images.push_back({2 * k});
    } else {
      out.images.push_back({});
    }
  }
  return out;
}

Word doubling_slit_word() { return {letter_a(1)}; }

SurfaceHom mk_doubling(int base_genus) {
  if (base_genus < 2) throw DomainError(ErrorKind::BadGenusRange, "doubling needs base genus >= 2");
  SurfaceHom out{2 * base_genus, base_genus, {}};
  const Word c = doubling_slit_word();
  for (int k = 0; k < 2 * base_genus; ++k) out.images.push_back({2 * k});
  for (int k = 0; k < 2 * base_genus; ++k) out.images.push_back(concat(concat(c, {2 * k}), inverse(c)));
  if (!validate_hom(out).valid)
    throw DomainError(ErrorKind::ConstructionInvalid, "doubling homomorphism failed validation");
  return out;
}

// ---------------------------------------------------------------------------

std::uint64_t reduced_word_count(int genus, int len) {
  if (len == 0) return 1;
  std::uint64_t n = 4 * static_cast<std::uint64_t>(genus);
  std::uint64_t out = n;
  for (int i = 1; i < len; ++i) out *= n - 1;
  return out;
}

void for_each_word(int genus, int max_len, const std::function<bool(const Word&)>& visit) {
  if (max_len <= 0) {
    visit({});
    return;
  }
  const int letters = 4 * genus;
  Word w;
  for (int len = 1; len <= max_len; ++len) {
    // Iterative odometer over reduced words of exactly this length.
    w.assign(len, -1);
    int depth = 0;
    while (depth >= 0) {
      Letter next = w[depth] + 1;
      if (depth > 0 && next == inverse_letter(w[depth - 1])) ++next;
      if (next >= letters) {
        w[depth] = -1;
        --depth;
        continue;
      }
      w[depth] = next;
      if (depth + 1 == len) {
        if (!visit(w)) return;
      } else {
        ++depth;
      }
    }
  }
}

std::vector<Word> enumerate_words(int genus, int max_len) {
  std::vector<Word> out;
  for_each_word(genus, max_len, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace hypsurf
