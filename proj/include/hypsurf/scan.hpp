// Exhaustive classification of word images under a representation, and the
// common-axis (elementary) test.
#ifndef HYPSURF_SCAN_HPP
#define HYPSURF_SCAN_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypsurf/representation.hpp"

namespace hypsurf {

struct ScanOptions {
  double classify_tolerance = kDefaultClassifyTolerance;
  // Distance from +-I below which an image counts as the identity.
  double identity_tolerance = 1e-6;
  bool stop_at_first_non_hyperbolic = false;
  // Cap on the stored kernel-witness and ambiguous lists (counts stay exact).
  std::size_t max_listed = 256;
  RelatorCheck relator_check = RelatorCheck::Numeric;
};

struct ClassifiedWord {
  Word word;
  IsometryTag tag = IsometryTag::Identity;
  double trace = 0;
};

struct ScanReport {
  int genus = 2;
  int max_length = 0;
  std::uint64_t words_scanned = 0;
  bool stopped_early = false;
  // Indexed by IsometryTag.
  std::array<std::uint64_t, 4> class_counts{};
  std::optional<ClassifiedWord> first_non_hyperbolic;
  std::uint64_t kernel_witness_count = 0;
  std::vector<Word> kernel_witnesses;  // numerically trivial, Dehn-nontrivial
  std::uint64_t ambiguous_count = 0;
  std::vector<ClassifiedWord> tolerance_ambiguous;
  // Words whose computed image is too inaccurate to classify: the tag could
  // change within the rounding-error bound of the product. Not included in
  // class_counts.
  std::uint64_t precision_limited_count = 0;
  std::vector<ClassifiedWord> precision_limited;

  std::uint64_t count(IsometryTag t) const { return class_counts[static_cast<int>(t)]; }
  bool purely_hyperbolic() const { return !first_non_hyperbolic && precision_limited_count == 0; }
};

/// Classifies the image of every freely reduced word of length 1..max_len in
/// length-lexicographic order.
ScanReport scan_classification(const RepresentationAssignment& rho, int max_len, const ScanOptions& opts = {});

struct Pullback {
  const RepresentationAssignment& base;
  const SurfaceHom& f;
};

/// Scan of g -> base(f(g)). Words that cannot be classified from the product
/// of generator images are re-evaluated through the Dehn-reduced image word
/// in the base. Validates the base numerically and f combinatorially.
ScanReport scan_pullback(const Pullback& through, int max_len, const ScanOptions& opts = {});

struct ElementaryCertificate {
  bool elementary = false;
  std::vector<BoundaryPoint<double>> common_fixed_points;  // when elementary
  int mismatch_generator = -1;                             // first offender otherwise
  std::string detail;
};

ElementaryCertificate is_elementary(const RepresentationAssignment& rho,
                                    double eps = kDefaultClassifyTolerance);

}  // namespace hypsurf

#endif  // HYPSURF_SCAN_HPP
