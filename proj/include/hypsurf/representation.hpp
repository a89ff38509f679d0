#ifndef HYPSURF_REPRESENTATION_HPP
#define HYPSURF_REPRESENTATION_HPP

#include <vector>

#include "hypsurf/isom2.hpp"
#include "hypsurf/surfgrp.hpp"

namespace hypsurf {

inline constexpr double kRelatorTolerance = 1e-6;

/// Images rho(a1), rho(b1), ..., rho(ag), rho(bg) of the standard generators.
struct RepresentationAssignment {
  int genus = 2;
  std::vector<Isometryd> images;

  const Isometryd& image(int generator) const { return images.at(generator); }
};

Isometryd evaluate(const RepresentationAssignment& rho, const Word& w);

/// Distance of the relator image from the identity (modulo sign).
double relator_defect(const RepresentationAssignment& rho);

/// Throws RelatorViolated if the relator image is farther than tol from the
/// identity, BadGenusRange / ConstructionInvalid on malformed input.
void validate(const RepresentationAssignment& rho, double tol = kRelatorTolerance);

/// Certified skips the numeric relator test, for pullbacks of a validated
/// base along a validated homomorphism whose relator words are too long to
/// evaluate in double precision. Shape checks still apply.
enum class RelatorCheck { Numeric, Certified };

void validate(const RepresentationAssignment& rho, RelatorCheck check);

/// g -> rho0(f(g)).
RepresentationAssignment pullback(const RepresentationAssignment& rho0, const SurfaceHom& f);

/// h rho h^-1.
RepresentationAssignment conjugate(const RepresentationAssignment& rho, const Isometryd& h);

RepresentationAssignment trivial_representation(int genus);

struct HandleAttachment {
  SurfacePresentation presentation;
  SurfaceHom pinch;  // kills the new handle
  RepresentationAssignment rho;
};

/// Adds a handle whose generators map to the identity; throws BadGenusRange
/// below genus 2.
HandleAttachment mk_handle_attach(const RepresentationAssignment& rho);

}  // namespace hypsurf

#endif  // HYPSURF_REPRESENTATION_HPP
