#include "hypsurf/euler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

namespace hypsurf {

namespace {

constexpr double kRoundingThreshold = 0.25;

double raw_translation(const RepresentationAssignment& rho) {
  std::vector<CircleLiftd> lifts;
  lifts.reserve(rho.images.size());
  for (const auto& g : rho.images) lifts.push_back(lift(g));
  return lifted_relator_translation(lifts);
}

// Fixed, generic conjugators used to cross-check the rounding.
const std::array<Isometryd, 3>& validation_conjugators() {
  static const std::array<Isometryd, 3> hs = {
      Isometryd::rotation(0.3) * Isometryd::dilation(0.7),
      Isometryd::dilation(-1.1) * Isometryd::rotation(1.9),
      Isometryd(1.0, 0.4, -0.25, 0.9),
  };
  return hs;
}

// Translation of the lifted word at 0, in units of pi, applying canonical
// lifts of the letters right to left.
double lifted_word_translation(const RepresentationAssignment& rho, const Word& w) {
  std::vector<CircleLiftd> lifts, inverses;
  for (const auto& g : rho.images) {
    lifts.push_back(lift(g));
    inverses.push_back(inverse(lifts.back()));
  }
  double theta = 0.0;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    theta = (is_inverse(*it) ? inverses : lifts)[generator_of(*it)](theta);
  return theta / std::numbers::pi;
}

EulerResult rounded_result(const std::function<double(const RepresentationAssignment&)>& raw_of,
                           const RepresentationAssignment& rho) {
  EulerResult out;
  out.raw = raw_of(rho);
  const double rounded = std::round(out.raw);
  if (!(std::abs(out.raw - rounded) < kRoundingThreshold))
    throw DomainError(ErrorKind::RoundingUnsafe, "raw translation " + std::to_string(out.raw) +
                                                     " is not close to an integer");
  for (const auto& h : validation_conjugators()) {
    double r = raw_of(conjugate(rho, h));
    out.conjugation_spread = std::max(out.conjugation_spread, std::abs(r - out.raw));
  }
  if (!(out.conjugation_spread < kRoundingThreshold))
    throw DomainError(ErrorKind::RoundingUnsafe, "conjugates disagree by " +
                                                     std::to_string(out.conjugation_spread));
  out.value = static_cast<int>(rounded);
  return out;
}

}  // namespace

double lifted_relator_translation(const std::vector<CircleLiftd>& lifts) {
  // Evaluate the composite map at 0 from the right: the relator word is
  // A1 B1 A1^-1 B1^-1 ... so the rightmost factor acts first.
  std::vector<CircleLiftd> inverses;
  inverses.reserve(lifts.size());
  for (const auto& l : lifts) inverses.push_back(inverse(l));
  double theta = 0.0;
  const std::size_t handles = lifts.size() / 2;
  for (std::size_t i = handles; i-- > 0;) {
    const auto& a = lifts[2 * i];
    const auto& b = lifts[2 * i + 1];
    theta = inverses[2 * i + 1](theta);
    theta = inverses[2 * i](theta);
    theta = b(theta);
    theta = a(theta);
  }
  return theta / std::numbers::pi;
}

EulerResult euler_number(const RepresentationAssignment& rho, RelatorCheck check) {
  validate(rho, check);
  return rounded_result(raw_translation, rho);
}

EulerResult euler_of_pullback(const RepresentationAssignment& rho0, const SurfaceHom& f) {
  if (rho0.genus != f.target_genus)
    throw DomainError(ErrorKind::ConstructionInvalid, "homomorphism target genus does not match representation");
  validate(rho0);
  require_valid(f);
  // The image of the relator, evaluated letter by letter in the base. Lifts
  // of l and l^-1 cancel exactly, and the lifted relator is a central
  // translation, so the word may be freely and cyclically reduced without
  // changing the value. This avoids forming ill-conditioned image matrices.
  const Word w = cyclic_reduce(apply_hom(f, SurfacePresentation(f.source_genus).relator()));
  return rounded_result([&](const RepresentationAssignment& r) { return lifted_word_translation(r, w); }, rho0);
}

}  // namespace hypsurf
