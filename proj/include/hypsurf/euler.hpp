// Euler number of a surface-group representation as the translation amount
// of the product of lifted commutators.
//
// With lifts A~_i, B~_i of the generator images to the universal cover of
// the boundary circle, the product of commutators [A~_1,B~_1]...[A~_g,B~_g]
// lifts the identity, so it is translation by n*pi for an integer n; n is the
// Euler number. Commutators of lifts do not depend on which lifts are taken.
#ifndef HYPSURF_EULER_HPP
#define HYPSURF_EULER_HPP

#include <optional>
#include <vector>

#include "hypsurf/representation.hpp"

namespace hypsurf {

struct EulerResult {
  int value = 0;
  double raw = 0;  // translation of the lifted relator at 0, in units of pi
  double conjugation_spread = 0;
};

/// Translation amount (in units of pi) of the lifted relator at angle 0,
/// using the given lifts in generator order. No rounding or validation.
double lifted_relator_translation(const std::vector<CircleLiftd>& lifts);

/// Throws RelatorViolated if the relator fails at tolerance 1e-6 and
/// RoundingUnsafe if the raw value is 0.25 or more away from an integer,
/// either directly or on one of the fixed validation conjugates.
EulerResult euler_number(const RepresentationAssignment& rho, RelatorCheck check = RelatorCheck::Numeric);

/// euler_number of g -> rho0(f(g)). Validates rho0 numerically and f
/// combinatorially, then trusts the pulled-back relator.
EulerResult euler_of_pullback(const RepresentationAssignment& rho0, const SurfaceHom& f);

}  // namespace hypsurf

#endif  // HYPSURF_EULER_HPP
