#include "hypsurf/gate.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "hypsurf/euler.hpp"

namespace hypsurf {

namespace {

std::string describe(const ClassifiedWord& w) {
  std::ostringstream os;
  os << format_word(w.word) << " -> " << to_string(w.tag) << " (trace " << w.trace << ", length "
     << w.word.size() << ")";
  return os.str();
}

std::string precision_note(const ScanReport& scan) {
  return std::to_string(scan.precision_limited_count) +
         " words cannot be classified in double precision (first: " +
         format_word(scan.precision_limited.front().word) + ")";
}

Rational make_rational(long num, long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long g = std::gcd(std::labs(num), den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::FuchsianComplete: return "FUCHSIAN_COMPLETE";
    case Verdict::GeometrisableBranched: return "GEOMETRISABLE_BRANCHED";
    case Verdict::NotGeometrisablePinch: return "NOT_GEOMETRISABLE_PINCH";
    case Verdict::NotGeometrisableZeroEuler: return "NOT_GEOMETRISABLE_ZERO_EULER";
    case Verdict::NotGeometrisableElementary: return "NOT_GEOMETRISABLE_ELEMENTARY";
    case Verdict::NotPurelyHyperbolicAtBudget: return "NOT_PURELY_HYPERBOLIC_AT_BUDGET";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::FuchsianComplete, Verdict::GeometrisableBranched, Verdict::NotGeometrisablePinch,
                    Verdict::NotGeometrisableZeroEuler, Verdict::NotGeometrisableElementary,
                    Verdict::NotPurelyHyperbolicAtBudget, Verdict::Indeterminate}) {
    if (s == to_string(v)) return v;
  }
  throw DomainError(ErrorKind::ParseError, "unknown verdict '" + s + "'");
}

GateReport decide(const GateInput& input) {
  const SurfaceHom& f = input.f;
  if (input.base.genus != f.target_genus)
    throw DomainError(ErrorKind::ConstructionInvalid, "homomorphism target genus " + std::to_string(f.target_genus) +
                                                          " differs from base genus " +
                                                          std::to_string(input.base.genus));
  validate(input.base);
  require_valid(f);

  GateReport r;
  r.source_genus = f.source_genus;
  r.scan_depth = input.scan_depth;
  const int chi_source = 2 - 2 * f.source_genus;
  const RepresentationAssignment rho = pullback(input.base, f);

  // Informational when a later step decides; failures are reported below.
  std::optional<EulerResult> eu;
  std::string euler_error;
  try {
    eu = euler_of_pullback(input.base, f);
    r.euler = eu->value;
  } catch (const DomainError& e) {
    euler_error = e.what();
  }

  auto elem = is_elementary(rho, input.scan.classify_tolerance);
  if (elem.elementary) {
    r.verdict = Verdict::NotGeometrisableElementary;
    r.witnesses.push_back(elem.detail);
    return r;
  }

  ScanOptions opts = input.scan;
  opts.stop_at_first_non_hyperbolic = true;
  auto scan = scan_pullback({input.base, f}, input.scan_depth, opts);
  if (scan.first_non_hyperbolic) {
    r.verdict = Verdict::NotPurelyHyperbolicAtBudget;
    r.witnesses.push_back(describe(*scan.first_non_hyperbolic));
    if (scan.first_non_hyperbolic->tag == IsometryTag::Parabolic)
      r.notes.push_back("witness lies inside the trace tolerance band (tolerance-ambiguous)");
    return r;
  }
  if (scan.precision_limited_count > 0) {
    r.verdict = Verdict::Indeterminate;
    r.notes.push_back(precision_note(scan));
    return r;
  }
  r.notes.push_back("purely hyperbolic up to word length " + std::to_string(input.scan_depth) + " (" +
                    std::to_string(scan.words_scanned) + " words, " + std::to_string(scan.kernel_witness_count) +
                    " kernel witnesses)");

  auto base_scan = scan_classification(input.base, input.scan_depth, input.scan);
  if (base_scan.first_non_hyperbolic) {
    r.verdict = Verdict::NotPurelyHyperbolicAtBudget;
    r.notes.push_back("base representation fails the Fuchsian certificate at this budget");
    r.witnesses.push_back("base: " + describe(*base_scan.first_non_hyperbolic));
    return r;
  }
  if (base_scan.precision_limited_count > 0) {
    r.verdict = Verdict::Indeterminate;
    r.notes.push_back("base: " + precision_note(base_scan));
    return r;
  }
  if (base_scan.kernel_witness_count > 0) {
    r.verdict = Verdict::Indeterminate;
    r.notes.push_back("base representation is not faithful up to this budget");
    r.witnesses.push_back("base kernel: " + format_word(base_scan.kernel_witnesses.front()));
    return r;
  }

  if (!eu) {
    r.verdict = Verdict::Indeterminate;
    r.notes.push_back(euler_error);
    return r;
  }
  if (eu->value == 0) {
    r.verdict = Verdict::NotGeometrisableZeroEuler;
    r.notes.push_back("a branched hyperbolic holonomy never has Euler number zero");
    return r;
  }
  r.cone_budget = eu->value - chi_source;
  if (eu->value > 0) {
    // Orientation opposite to the polygon convention; magnitudes still apply.
    r.cone_budget = -eu->value - chi_source;
    r.notes.push_back("positive Euler number: orientation is reversed relative to the polygon convention");
  }

  SurfacePresentation base_presentation(input.base.genus);
  std::vector<Word> subgens;
  for (const Word& w : f.images) {
    Word reduced = free_reduce(w);
    if (!reduced.empty()) subgens.push_back(reduced);
  }
  auto table = coset_enumerate(base_presentation, subgens, input.max_cosets);
  if (!table.closed()) {
    r.verdict = Verdict::Indeterminate;
    r.index_cutoff = true;
    r.notes.push_back("coset enumeration exceeded " + std::to_string(input.max_cosets) + " cosets (" +
                      std::to_string(table.live_cosets) + " live); image index unknown");
    return r;
  }
  r.image_index = table.index();
  r.quotient_genus = quotient_genus(input.base.genus, table.index());
  const int chi_quotient = 2 - 2 * *r.quotient_genus;
  Rational d = make_rational(std::labs(eu->value), std::labs(chi_quotient));
  r.canonical_degree = d;
  if (!d.is_integer() || d.num < 1) {
    r.verdict = Verdict::Indeterminate;
    r.notes.push_back("eu / chi(quotient) = " + std::to_string(d.num) + "/" + std::to_string(d.den) +
                      " is not a positive integer");
    return r;
  }

  if (d.num == 1) {
    r.verdict = *r.quotient_genus == f.source_genus ? Verdict::FuchsianComplete : Verdict::NotGeometrisablePinch;
    if (r.verdict == Verdict::NotGeometrisablePinch)
      r.witnesses.push_back("degree 1 with genus drop " + std::to_string(f.source_genus) + " -> " +
                            std::to_string(*r.quotient_genus));
  } else {
    r.verdict = Verdict::GeometrisableBranched;
    std::ostringstream os;
    os << "Riemann-Hurwitz: chi(T) + B = d chi(quotient) = " << d.num * chi_quotient;
    r.notes.push_back(os.str());
  }
  return r;
}

ParityCheck parity_check(const GateReport& report) {
  ParityCheck out;
  if (report.verdict != Verdict::GeometrisableBranched && report.verdict != Verdict::NotGeometrisablePinch) {
    out.diagnostic = "not applicable to this verdict";
    return out;
  }
  if (!report.euler) {
    out.ok = false;
    out.diagnostic = "Euler number missing";
    return out;
  }
  out.ok = *report.euler % 2 == 0;
  out.diagnostic = "eu = " + std::to_string(*report.euler) + (out.ok ? " is even" : " is odd");
  return out;
}

}  // namespace hypsurf
