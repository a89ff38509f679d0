// Acceptance suite: one PASS/FAIL line per criterion. Tolerances and budgets
// are fixed here; the exit status is nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "hypsurf/cli.hpp"
#include "hypsurf/suite.hpp"
#include "support.hpp"

using namespace hypsurf;
using testsupport::kPi;
using testsupport::Rng;

namespace {

constexpr double kRawTolerance = 1e-6;
constexpr double kPolygonSeconds = 1.0;
constexpr double kAreaTolerance = 1e-9;
constexpr double kLiftTolerance = 1e-9;
constexpr double kRotationTolerance = 1e-12;
constexpr double kWordEngineSeconds = 30.0;
constexpr int kGateDepth = 6;
constexpr int kWitnessLimit = 12;
constexpr int kConjugations = 20;
constexpr int kRandomSamples = 1000;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GateReport gate(const RepresentationAssignment& base, const SurfaceHom& f, int depth = kGateDepth) {
  GateInput in;
  in.base = base;
  in.f = f;
  in.scan_depth = depth;
  return decide(in);
}

struct SuiteRep {
  std::string name;
  RepresentationAssignment rho;
  bool non_fuchsian_purely_hyperbolic;
};

std::vector<SuiteRep> suite_representations() {
  auto complete = testsupport::octagon(2 * kPi);
  auto right = testsupport::octagon(4 * kPi);
  auto complete3 = testsupport::polygon_rep(3, 2 * kPi);
  return {
      {"octagon-complete", complete, false},
      {"octagon-right", right, false},
      {"tan(3,1)", pullback(complete, mk_pinch(3, 2)), true},
      {"tan(4,1)", pullback(complete3, mk_pinch(4, 3)), true},
      {"tan(4,2)", pullback(complete, mk_pinch(4, 2)), true},
      {"doubling", pullback(complete, mk_doubling(2)), true},
      {"handle-attach", mk_handle_attach(right).rho, false},
  };
}

// 1. Euler numbers of polygon structures through the command line.
void criterion1(Outcome& o) {
  struct Case {
    int genus;
    std::string angle;
    int expected;
  };
  for (const Case& c : {Case{2, "1", -2}, Case{2, "2", -1}, Case{3, "complete", -4}}) {
    auto t0 = std::chrono::steady_clock::now();
    std::istringstream none;
    std::ostringstream poly, err;
    int code = run_cli({"polygon", "--genus", std::to_string(c.genus), "--cone-angle", c.angle}, none, poly, err);
    std::istringstream piped(poly.str());
    std::ostringstream out;
    code = code | run_cli({"euler", "--report", "json"}, piped, out, err);
    double secs = seconds_since(t0);
    o.require(code == 0, "cli exit");
    if (code != 0) continue;
    auto j = json::parse(out.str())["results"];
    int value = j["euler"].get<int>();
    double raw = j["raw"].get<double>();
    o.require(value == c.expected, "euler value");
    o.require(std::abs(raw - value) <= kRawTolerance, "raw within 1e-6");
    o.require(secs < kPolygonSeconds, "runtime < 1 s");
    o.detail << "g=" << c.genus << " m=" << c.angle << ": eu=" << value << " |raw-eu|=" << std::abs(raw - value)
             << " " << secs << "s; ";
  }
}

// 2. Tan formula eu = 2 + 2h - 2g over Fuchsian bases of genus g - h.
void criterion2(Outcome& o) {
  for (auto [g, h] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{4, 2}}) {
    auto base = testsupport::polygon_rep(g - h, 2 * kPi);
    int eu = euler_of_pullback(base, mk_pinch(g, g - h)).value;
    o.require(eu == 2 + 2 * h - 2 * g, "tan formula");
    o.detail << "(" << g << "," << h << ")->" << eu << " ";
  }
}

// 3. Degree multiplicativity for the doubling.
void criterion3(Outcome& o) {
  auto base = testsupport::octagon(2 * kPi);
  int base_eu = euler_number(base).value;
  int eu = euler_of_pullback(base, mk_doubling(2)).value;
  auto r = gate(base, mk_doubling(2));
  long degree = r.canonical_degree ? r.canonical_degree->num : -1;
  o.require(eu == -4 && eu == 2 * base_eu, "eu = 2 eu(base) = -4");
  o.require(degree == 2 && r.canonical_degree->is_integer(), "canonical degree 2");
  o.detail << "eu=" << eu << " base eu=" << base_eu << " degree=" << degree;
}

// 4. Gate verdicts.
void criterion4(Outcome& o) {
  auto complete = testsupport::octagon(2 * kPi);
  auto tan = gate(complete, mk_pinch(3, 2));
  o.require(tan.verdict == Verdict::NotGeometrisablePinch, "tan verdict");
  o.require(tan.canonical_degree && tan.canonical_degree->num == 1, "tan degree 1");
  o.require(tan.quotient_genus == 2, "tan quotient genus 2");
  auto dbl = gate(complete, mk_doubling(2));
  o.require(dbl.verdict == Verdict::GeometrisableBranched, "doubling verdict");
  o.require(dbl.cone_budget == 2, "doubling cone budget 2");
  auto right = testsupport::octagon(4 * kPi);
  GateInput in;
  in.base = right;
  in.f = mk_handle_attach(right).pinch;
  in.scan_depth = kWitnessLimit;
  auto ha = decide(in);
  o.require(ha.verdict == Verdict::NotPurelyHyperbolicAtBudget, "handle-attach verdict");
  ScanOptions so;
  so.stop_at_first_non_hyperbolic = true;
  auto scan = scan_classification(pullback(right, in.f), kWitnessLimit, so);
  std::size_t len = scan.first_non_hyperbolic ? scan.first_non_hyperbolic->word.size() : 0;
  o.require(!ha.witnesses.empty() && len >= 1 && len <= kWitnessLimit, "witness of length <= 12");
  o.detail << "tan " << to_string(tan.verdict) << " d=1 g'=" << tan.quotient_genus.value_or(-1) << "; doubling "
           << to_string(dbl.verdict) << " budget=" << dbl.cone_budget.value_or(-1) << "; handle-attach "
           << to_string(ha.verdict) << " minimal witness length " << len << " ("
           << (ha.witnesses.empty() ? "none" : ha.witnesses.front()) << ")";
}

// 5. Gauss-Bonnet on every built polygon, and the angle guard.
void criterion5(Outcome& o) {
  int built = 0, guarded = 0;
  double worst = 0;
  for (int g = 2; g <= 6; ++g) {
    const int chi = 2 - 2 * g;
    for (int k = 0; k <= 4 * g; ++k) {
      const double theta = 2 * kPi * (k + 1);
      if (chi + k >= 0) {
        try {
          build_regular(g, theta);
          o.require(false, "AngleOutOfRange expected");
        } catch (const DomainError& e) {
          o.require(e.kind() == ErrorKind::AngleOutOfRange, "AngleOutOfRange kind");
          ++guarded;
        }
        continue;
      }
      auto p = build_regular(g, theta);
      double err = std::abs(area(p) - 2 * kPi * -(chi + k));
      worst = std::max(worst, err);
      o.require(err <= kAreaTolerance, "area identity");
      o.require(check_gauss_bonnet(p).ok, "check_gauss_bonnet");
      ++built;
    }
    for (int i = 1; i < 20; ++i) {
      const double theta = (4 * g - 2) * kPi * i / 20.0;
      double err = std::abs(area(build_regular(g, theta)) - ((4 * g - 2) * kPi - theta));
      worst = std::max(worst, err);
      o.require(err <= kAreaTolerance, "area for non-integral angles");
      ++built;
    }
  }
  o.detail << built << " polygons, max area error " << worst << ", " << guarded << " out-of-range angles rejected";
}

// 6. Parity and nonzero Euler numbers, including conjugated copies.
void criterion6(Outcome& o) {
  Rng rng(601);
  int checked = 0;
  for (const auto& s : suite_representations()) {
    if (!s.non_fuchsian_purely_hyperbolic) continue;
    ScanOptions so;
    so.stop_at_first_non_hyperbolic = true;
    o.require(scan_classification(s.rho, 4, so).purely_hyperbolic(), s.name + " purely hyperbolic");
    for (int i = 0; i <= kConjugations; ++i) {
      auto rho = i == 0 ? s.rho : conjugate(s.rho, testsupport::random_isometry(rng));
      int eu = euler_number(rho).value;
      o.require(eu % 2 == 0, s.name + " even");
      ++checked;
    }
  }
  auto complete = testsupport::octagon(2 * kPi);
  auto complete3 = testsupport::polygon_rep(3, 2 * kPi);
  std::vector<std::pair<RepresentationAssignment, SurfaceHom>> inputs{{complete, mk_pinch(3, 2)},
                                                                      {complete3, mk_pinch(4, 3)},
                                                                      {complete, mk_pinch(4, 2)},
                                                                      {complete, mk_doubling(2)}};
  int verdicts = 0;
  for (const auto& [base, f] : inputs) {
    for (int i = 0; i <= kConjugations; ++i) {
      auto b = i == 0 ? base : conjugate(base, testsupport::random_isometry(rng, 1.0));
      auto r = gate(b, f, 4);
      o.require(parity_check(r).ok, "parity_check");
      if (r.verdict == Verdict::GeometrisableBranched) o.require(r.euler && *r.euler != 0, "branched eu nonzero");
      o.require(r.verdict == Verdict::GeometrisableBranched || r.verdict == Verdict::NotGeometrisablePinch,
                "non-Fuchsian verdict");
      ++verdicts;
    }
  }
  o.detail << checked << " Euler numbers even, " << verdicts << " gate reports pass parity and nonzero checks";
}

// 7. Conjugation invariance of Euler numbers and classification tags.
void criterion7(Outcome& o) {
  Rng rng(701);
  int eu_checks = 0;
  auto reps = suite_representations();
  reps.push_back({"12-gon", testsupport::polygon_rep(3, 2 * kPi), false});
  for (const auto& s : reps) {
    int expected = euler_number(s.rho).value;
    for (int i = 0; i < kConjugations; ++i) {
      o.require(euler_number(conjugate(s.rho, testsupport::random_isometry(rng))).value == expected, s.name);
      ++eu_checks;
    }
  }
  int tags = 0;
  for (int i = 0; i < kRandomSamples; ++i) {
    const auto& s = reps[i % reps.size()];
    Word w = testsupport::random_reduced_word(rng, s.rho.genus, testsupport::uniform_int(rng, 1, 8));
    auto g = evaluate(s.rho, w);
    auto h = testsupport::random_isometry(rng);
    o.require(classify(g).tag == classify(conjugate(h, g)).tag, "tag of " + format_word(w));
    ++tags;
  }
  o.detail << eu_checks << " conjugated Euler numbers, " << tags << " element tags unchanged";
}

// 8. Word engine soundness, enumeration counts and runtime.
void criterion8(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(801);
  SurfacePresentation p(2);
  o.require(dehn_reduce(p, p.relator()).empty(), "relator reduces");
  for (int i = 0; i < kRandomSamples; ++i) {
    Word w;
    int n = testsupport::uniform_int(rng, 1, 5);
    for (int j = 0; j < n; ++j) {
      Word u = testsupport::random_reduced_word(rng, 2, testsupport::uniform_int(rng, 0, 6));
      Word r = testsupport::uniform_int(rng, 0, 1) ? p.relator() : inverse(p.relator());
      w = concat(w, concat(concat(u, r), inverse(u)));
    }
    o.require(dehn_reduce(p, w).empty(), "conjugate product reduces");
  }
  auto rho = testsupport::octagon(2 * kPi);
  int nontrivial = 0;
  while (nontrivial < kRandomSamples) {
    Word w = testsupport::random_reduced_word(rng, 2, testsupport::uniform_int(rng, 1, 10));
    if (evaluate(rho, w).distance_to_identity() <= 0.01) continue;
    o.require(!dehn_reduce(p, w).empty(), "nontrivial word declared nontrivial");
    ++nontrivial;
  }
  std::uint64_t enumerated = 0;
  for (int g = 2; g <= 4; ++g) {
    for (int len = 1; len <= 6; ++len) {
      std::uint64_t expected = 4 * g, n = 0;
      for (int i = 1; i < len; ++i) expected *= 4 * g - 1;
      for_each_word(g, len, [&](const Word& w) {
        if (static_cast<int>(w.size()) == len) ++n;
        return true;
      });
      o.require(n == expected, "count g=" + std::to_string(g) + " l=" + std::to_string(len));
      enumerated += n;
    }
  }
  double secs = seconds_since(t0);
  o.require(secs < kWordEngineSeconds, "runtime < 30 s");
  o.detail << "1000 trivial and 1000 nontrivial words decided, " << enumerated << " words enumerated, " << secs << "s";
}

// 9. Coset enumeration oracles.
void criterion9(Outcome& o) {
  SurfacePresentation p(2);
  auto w = [](const char* s) { return parse_word(s, 2); };
  auto whole = coset_enumerate(p, {w("a1"), w("b1"), w("a2"), w("b2")});
  o.require(whole.index() == 1, "whole group index 1");
  std::vector<Word> kernel{w("b1"), w("a2"), w("b2"), w("a1^2"), w("a1 b1 a1^-1"), w("a1 a2 a1^-1"), w("a1 b2 a1^-1")};
  auto parity = coset_enumerate(p, kernel);
  o.require(parity.index() == 2, "parity kernel index 2");
  if (parity.closed()) {
    for (const Word& g : kernel)
      for (int c = 0; c < 2; ++c) o.require(trace_word(parity, c, g) == c, "generator acts trivially");
    for (int c = 0; c < 2; ++c) o.require(trace_word(parity, c, p.relator()) == c, "relator closes");
    o.require(trace_word(parity, 0, w("a1")) == 1, "a1 swaps the cosets");
  }
  auto cyclic = coset_enumerate(p, {w("a1")}, 10000);
  o.require(!cyclic.closed(), "<a1> cutoff");
  o.detail << "index " << whole.index() << ", " << parity.index() << ", <a1> "
           << (cyclic.closed() ? "closed" : "CutoffExceeded at " + std::to_string(cyclic.live_cosets) + " cosets");
}

// 10. Lift properties.
void criterion10(Outcome& o) {
  Rng rng(1001);
  double worst = 0;
  for (int i = 0; i < kRandomSamples; ++i) {
    auto L = lift(testsupport::random_isometry(rng));
    double t = testsupport::uniform(rng, -20, 20);
    double err = std::abs(lift_eval(L, t + kPi) - lift_eval(L, t) - kPi);
    worst = std::max(worst, err);
    o.require(err <= kLiftTolerance, "equivariance");
    double t2 = t + testsupport::uniform(rng, 1e-6, kPi);
    o.require(lift_eval(L, t) < lift_eval(L, t2), "monotonicity");
  }
  double rot_worst = 0;
  for (int i = 0; i < kRandomSamples; ++i) {
    double phi = testsupport::uniform(rng, 0, kPi);
    auto L = lift(Isometryd::rotation(phi));
    double t = testsupport::uniform(rng, -20, 20);
    double err = std::abs(lift_eval(L, t) - t - phi);
    rot_worst = std::max(rot_worst, err);
    o.require(err <= kRotationTolerance, "rotation translates by phi");
  }
  o.detail << "max equivariance error " << worst << ", max rotation error " << rot_worst;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"polygon Euler numbers", criterion1}, {"Tan formula", criterion2},
      {"degree multiplicativity", criterion3}, {"gate verdicts", criterion4},
      {"Gauss-Bonnet", criterion5},          {"parity and nonzero", criterion6},
      {"conjugation invariance", criterion7}, {"word engine", criterion8},
      {"coset enumeration", criterion9},     {"lift properties", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    if (!o.ok) ++failures;
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.ok ? "PASS" : "FAIL") << " - "
              << o.detail.str() << " [" << seconds_since(t0) << "s]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
