#include "hypsurf/representation.hpp"

#include <string>

namespace hypsurf {

Isometryd evaluate(const RepresentationAssignment& rho, const Word& w) {
  Isometryd m;
  for (Letter l : w) {
    const Isometryd& g = rho.image(generator_of(l));
    m = m * (is_inverse(l) ? g.inverse() : g);
  }
  return m;
}

double relator_defect(const RepresentationAssignment& rho) {
  SurfacePresentation p(rho.genus);
  return evaluate(rho, p.relator()).distance_to_identity();
}

void validate(const RepresentationAssignment& rho, double tol) {
  if (rho.genus < 2) throw DomainError(ErrorKind::BadGenusRange, "representation genus must be at least 2");
  if (rho.images.size() != static_cast<std::size_t>(2 * rho.genus))
    throw DomainError(ErrorKind::ConstructionInvalid, "need 2g generator images, got " +
                                                          std::to_string(rho.images.size()));
  double defect = relator_defect(rho);
  if (!(defect <= tol))
    throw DomainError(ErrorKind::RelatorViolated, "relator image is " + std::to_string(defect) +
                                                      " away from the identity");
}

void validate(const RepresentationAssignment& rho, RelatorCheck check) {
  if (check == RelatorCheck::Numeric) {
    validate(rho);
    return;
  }
  if (rho.genus < 2) throw DomainError(ErrorKind::BadGenusRange, "representation genus must be at least 2");
  if (rho.images.size() != static_cast<std::size_t>(2 * rho.genus))
    throw DomainError(ErrorKind::ConstructionInvalid, "need 2g generator images, got " +
                                                          std::to_string(rho.images.size()));
}

RepresentationAssignment pullback(const RepresentationAssignment& rho0, const SurfaceHom& f) {
  if (rho0.genus != f.target_genus)
    throw DomainError(ErrorKind::ConstructionInvalid, "homomorphism target genus does not match representation");
  RepresentationAssignment out{f.source_genus, {}};
  for (const Word& img : f.images) out.images.push_back(evaluate(rho0, img));
  return out;
}

RepresentationAssignment conjugate(const RepresentationAssignment& rho, const Isometryd& h) {
  RepresentationAssignment out{rho.genus, {}};
  for (const auto& g : rho.images) out.images.push_back(conjugate(h, g));
  return out;
}

RepresentationAssignment trivial_representation(int genus) {
  return {genus, std::vector<Isometryd>(2 * genus, Isometryd::identity())};
}

HandleAttachment mk_handle_attach(const RepresentationAssignment& rho) {
  if (rho.genus < 2) throw DomainError(ErrorKind::BadGenusRange, "handle attachment needs genus >= 2");
  const int g = rho.genus + 1;
  SurfaceHom f = mk_pinch(g, rho.genus);
  return {SurfacePresentation(g), f, pullback(rho, f)};
}

}  // namespace hypsurf
