// Geometrisability decision for representations presented as rho0 o f_*,
// with rho0 a Fuchsian base and f a surface-group homomorphism.
//
// The decision reads off the canonical factorization invariants: the image
// of f_* has index n in the base group, so H^2 / rho(pi_1 S) is the degree-n
// cover of the base surface, and the canonical degree is eu(rho) divided by
// the Euler characteristic of that cover. Degree one with a genus drop is the
// pinch case; degree two or more is a branched covering.
#ifndef HYPSURF_GATE_HPP
#define HYPSURF_GATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hypsurf/cosets.hpp"
#include "hypsurf/scan.hpp"

namespace hypsurf {

enum class Verdict {
  FuchsianComplete,
  GeometrisableBranched,
  NotGeometrisablePinch,
  NotGeometrisableZeroEuler,
  NotGeometrisableElementary,
  NotPurelyHyperbolicAtBudget,
  Indeterminate,
};

/// Upper-case wire names, e.g. NOT_GEOMETRISABLE_PINCH.
const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct GateInput {
  RepresentationAssignment base;
  SurfaceHom f;
  int scan_depth = 6;
  int max_cosets = kDefaultMaxCosets;
  ScanOptions scan;
};

struct Rational {
  long num = 0;
  long den = 1;
  bool is_integer() const { return den == 1; }
};

struct GateReport {
  Verdict verdict = Verdict::Indeterminate;
  int source_genus = 0;
  int scan_depth = 0;
  std::optional<int> euler;
  std::optional<int> image_index;
  bool index_cutoff = false;  // coset enumeration gave up
  std::optional<int> quotient_genus;
  std::optional<Rational> canonical_degree;
  std::optional<int> cone_budget;  // sum of cone orders required on S
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
};

/// Throws DomainError when the input is malformed (genus mismatch, invalid
/// homomorphism, base relator violated); every other outcome is a verdict.
GateReport decide(const GateInput& input);

struct ParityCheck {
  bool ok = true;
  std::string diagnostic;
};

/// Even Euler number for the non-Fuchsian purely hyperbolic verdicts;
/// vacuously true otherwise.
ParityCheck parity_check(const GateReport& report);

}  // namespace hypsurf

#endif  // HYPSURF_GATE_HPP
