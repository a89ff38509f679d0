#include "hypsurf/suite.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hypsurf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAreaTolerance = 1e-9;
constexpr double kRawTolerance = 1e-6;
constexpr int kWitnessLengthLimit = 12;

std::string str(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

class Checker {
 public:
  explicit Checker(ExampleResult& r) : r_(r) {}

  template <class T>
  void equal(const std::string& what, const T& expected, const T& actual) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    r_.checks.push_back({what, expected == actual, e.str(), a.str()});
  }

  void near(const std::string& what, double expected, double actual, double tol) {
    r_.checks.push_back(
        {what, std::abs(expected - actual) <= tol, str(expected) + " +- " + str(tol), str(actual)});
  }

  void holds(const std::string& what, bool ok, const std::string& expected, const std::string& actual) {
    r_.checks.push_back({what, ok, expected, actual});
  }

 private:
  ExampleResult& r_;
};

std::string verdict_or(const GateReport& g) { return to_string(g.verdict); }

void polygon_example(ExampleResult& r, int genus, int cone_order) {
  Checker c(r);
  const double theta = 2 * kPi * (cone_order + 1);
  auto poly = build_regular(genus, theta);
  auto rho = holonomy_assignment(poly);
  auto eu = euler_number(rho);
  const int chi = 2 - 2 * genus;
  r.data = {{"polygon", to_json(poly)}, {"euler", to_json(eu)}, {"representation", to_json(rho)}};
  c.equal("euler number", chi + cone_order, eu.value);
  c.near("raw Euler value", static_cast<double>(eu.value), eu.raw, kRawTolerance);
  c.near("area", 2 * kPi * -(chi + cone_order), area(poly), kAreaTolerance);
  c.equal("cone order", cone_order, cone_data(poly).value_or(-1));
  auto gb = check_gauss_bonnet(poly);
  c.holds("Gauss-Bonnet", gb.ok, "holds", gb.diagnostic);
}

GateReport run_gate(const RepresentationAssignment& base, const SurfaceHom& f, const ExampleOptions& opts) {
  GateInput in{base, f, opts.scan_depth, opts.max_cosets, opts.scan};
  return decide(in);
}

void tan_example(ExampleResult& r, const ExampleOptions& opts) {
  Checker c(r);
  const int g = opts.genus, h = opts.handles;
  auto base = holonomy_assignment(build_regular(g - h, 2 * kPi));
  auto f = mk_pinch(g, g - h);
  auto rho = pullback(base, f);
  auto eu = euler_number(rho);
  auto kernel = scan_classification(rho, 1, opts.scan);
  auto gate = run_gate(base, f, opts);
  r.data = {{"genus", g}, {"handles", h}, {"euler", to_json(eu)}, {"gate", to_json(gate)}};
  c.equal("euler number 2 + 2h - 2g", 2 + 2 * h - 2 * g, eu.value);
  c.equal("kernel witnesses at length 1", static_cast<std::uint64_t>(4 * h), kernel.kernel_witness_count);
  c.equal<std::string>("verdict", "NOT_GEOMETRISABLE_PINCH", verdict_or(gate));
  c.equal("canonical degree", 1L, gate.canonical_degree ? gate.canonical_degree->num : -1L);
  c.equal("quotient genus", g - h, gate.quotient_genus.value_or(-1));
  auto parity = parity_check(gate);
  c.holds("parity", parity.ok, "even", parity.diagnostic);
}

void doubling_example(ExampleResult& r, const ExampleOptions& opts) {
  Checker c(r);
  auto base = holonomy_assignment(build_regular(2, 2 * kPi));
  auto f = mk_doubling(2);
  auto base_eu = euler_number(base);
  auto eu = euler_of_pullback(base, f);
  auto gate = run_gate(base, f, opts);
  r.data = {{"base_euler", to_json(base_eu)}, {"euler", to_json(eu)}, {"gate", to_json(gate)}};
  c.equal("euler number", 2 * base_eu.value, eu.value);
  c.equal("euler number", -4, eu.value);
  c.equal<std::string>("verdict", "GEOMETRISABLE_BRANCHED", verdict_or(gate));
  c.equal("canonical degree", 2L, gate.canonical_degree ? gate.canonical_degree->num : -1L);
  c.equal("image index", 1, gate.image_index.value_or(-1));
  c.equal("cone budget", 2, gate.cone_budget.value_or(-1));
  auto parity = parity_check(gate);
  c.holds("parity", parity.ok, "even", parity.diagnostic);
}

void handle_attach_example(ExampleResult& r, const ExampleOptions& opts) {
  Checker c(r);
  auto base = holonomy_assignment(build_regular(2, 4 * kPi));
  auto ha = mk_handle_attach(base);
  auto base_eu = euler_number(base);
  auto eu = euler_number(ha.rho);
  auto gate = run_gate(base, ha.pinch, opts);
  r.data = {{"base_euler", to_json(base_eu)}, {"euler", to_json(eu)}, {"gate", to_json(gate)}};
  c.equal("euler number preserved", base_eu.value, eu.value);
  c.equal<std::string>("verdict", "NOT_PURELY_HYPERBOLIC_AT_BUDGET", verdict_or(gate));
  c.holds("non-hyperbolic witness", !gate.witnesses.empty(), "present",
          gate.witnesses.empty() ? "none" : gate.witnesses.front());
}

void ex4_scan_example(ExampleResult& r, const ExampleOptions& opts) {
  Checker c(r);
  auto rho = holonomy_assignment(build_regular(2, 4 * kPi));
  ScanOptions so = opts.scan;
  so.stop_at_first_non_hyperbolic = true;
  auto scan = scan_classification(rho, kWitnessLengthLimit, so);
  r.data = {{"euler", euler_number(rho).value}, {"scan", to_json(scan)}};
  const auto& w = scan.first_non_hyperbolic;
  c.holds("non-hyperbolic image found", w.has_value(), "a word of length <= 12", w ? format_word(w->word) : "none");
  if (w) {
    r.data["minimal_witness_length"] = w->word.size();
    c.holds("witness is non-hyperbolic", std::abs(w->trace) <= 2 + so.classify_tolerance, "|trace| <= 2",
            str(w->trace));
  }
}

}  // namespace

bool ExampleResult::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"octagon-complete", "octagon-right", "tan",
                                              "doubling",         "handle-attach", "commutator-witness"};
  return names;
}

ExampleResult run_example(const std::string& name, const ExampleOptions& opts) {
  ExampleResult r;
  r.name = name;
  if (name == "octagon-complete") {
    polygon_example(r, 2, 0);
  } else if (name == "octagon-right") {
    polygon_example(r, 2, 1);
  } else if (name == "tan") {
    tan_example(r, opts);
  } else if (name == "doubling") {
    doubling_example(r, opts);
  } else if (name == "handle-attach") {
    handle_attach_example(r, opts);
  } else if (name == "commutator-witness") {
    ex4_scan_example(r, opts);
  } else {
    throw DomainError(ErrorKind::ParseError, "unknown example '" + name + "'");
  }
  return r;
}

json to_json(const ExampleResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"check", c.what}, {"ok", c.ok}, {"expected", c.expected}, {"actual", c.actual}});
  return {{"name", r.name}, {"ok", r.ok()}, {"checks", checks}, {"data", r.data}};
}

}  // namespace hypsurf
