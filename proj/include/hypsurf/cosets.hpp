// Todd-Coxeter coset enumeration (HLT strategy) over the one-relator surface
// presentation.
#ifndef HYPSURF_COSETS_HPP
#define HYPSURF_COSETS_HPP

#include <vector>

#include "hypsurf/surfgrp.hpp"

namespace hypsurf {

inline constexpr int kDefaultMaxCosets = 100000;

struct CosetTable {
  enum class Status { Closed, CutoffExceeded };

  Status status = Status::CutoffExceeded;
  int live_cosets = 0;
  int columns = 0;  // 4g, one per letter code
  // Rows of the compacted table when Closed; coset 0 is the subgroup.
  std::vector<std::vector<int>> rows;

  bool closed() const { return status == Status::Closed; }
  int index() const { return closed() ? live_cosets : -1; }
};

/// Throws BadWord if a generator is not freely reduced or names a letter
/// outside the presentation; an empty generator list enumerates the trivial
/// subgroup.
CosetTable coset_enumerate(const SurfacePresentation& p, const std::vector<Word>& subgens,
                           int max_cosets = kDefaultMaxCosets);

/// Permutation of the cosets induced by each letter (closed tables only).
std::vector<std::vector<int>> letter_permutations(const CosetTable& t);

/// Coset reached from `start` by reading w (closed tables only).
int trace_word(const CosetTable& t, int start, const Word& w);

/// Genus of a degree-n cover of a genus-g surface: 1 + n(g-1).
int quotient_genus(int base_genus, int index);

}  // namespace hypsurf

#endif  // HYPSURF_COSETS_HPP
