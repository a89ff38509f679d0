#include "hypsurf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "hypsurf/suite.hpp"

namespace hypsurf {

namespace {

struct Settings {
  double tolerance = kDefaultClassifyTolerance;
  std::string report = "text";
  int max_length = 6;
  int max_cosets = kDefaultMaxCosets;

  bool json() const { return report == "json"; }
  ScanOptions scan() const {
    ScanOptions o;
    o.classify_tolerance = tolerance;
    return o;
  }
};

class Session {
 public:
  Session(const std::vector<std::string>& args, std::istream& in, std::ostream& out)
      : args_(args), in_(in), out_(out), start_(std::chrono::steady_clock::now()) {}

  Settings settings;

  // Reads the whole file (or `in` for "-").
  std::string slurp(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
      buf << in_.rdbuf();
    } else {
      std::ifstream f(path);
      if (!f) throw DomainError(ErrorKind::ParseError, "cannot open '" + path + "'");
      buf << f.rdbuf();
    }
    return buf.str();
  }

  RepresentationAssignment representation(const std::string& path) {
    std::istringstream s(slurp(path));
    return read_representation(s);
  }

  void emit(const json& results) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::string command = "hypsurf";
    for (const auto& a : args_) command += " " + a;
    json report{{"command", command},
                {"tolerances",
                 {{"classify", settings.tolerance},
                  {"identity", ScanOptions{}.identity_tolerance},
                  {"relator", kRelatorTolerance}}},
                {"results", results},
                {"wall_time_s", secs}};
    out_ << report.dump(2) << '\n';
  }

  std::ostream& out() { return out_; }

 private:
  const std::vector<std::string>& args_;
  std::istream& in_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
};

std::string word_or_identity(const Word& w) { return w.empty() ? "1" : format_word(w); }

std::string describe_class(const IsometryClass<double>& c) {
  std::ostringstream os;
  os << to_string(c.tag);
  if (c.tag == IsometryTag::Hyperbolic) os << " (translation length " << c.translation_length << ")";
  if (c.tag == IsometryTag::Elliptic) os << " (rotation angle " << c.rotation_angle << ")";
  if (c.tolerance_ambiguous) os << " [tolerance-ambiguous]";
  return os.str();
}

std::string describe_points(const std::vector<BoundaryPoint<double>>& pts) {
  std::ostringstream os;
  os << std::setprecision(12);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ", ";
    if (pts[i].at_infinity) {
      os << "inf";
    } else {
      os << pts[i].x + 0.0;
    }
  }
  return os.str();
}

json class_json(const Isometryd& g, double eps) {
  auto c = classify(g, eps);
  json j = to_json(c);
  j["trace"] = g.trace();
  if (c.tag != IsometryTag::Identity && c.tag != IsometryTag::Elliptic) {
    json pts = json::array();
    for (const auto& p : fixed_points(g, eps)) pts.push_back(p.at_infinity ? json("inf") : json(p.x));
    j["fixed_points"] = pts;
  }
  return j;
}

int cmd_classify(Session& s, const std::string& path) {
  std::string text = s.slurp(path);
  const double eps = s.settings.tolerance;
  std::vector<std::pair<std::string, Isometryd>> items;
  if (text.find("genus") != std::string::npos) {
    std::istringstream is(text);
    auto rho = read_representation(is);
    for (std::size_t k = 0; k < rho.images.size(); ++k)
      items.emplace_back(generator_name(static_cast<int>(k)), rho.images[k]);
  } else {
    std::string cleaned;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) cleaned += line.substr(0, line.find('#')) + ' ';
    items.emplace_back("", parse_matrix<double>(cleaned));
  }
  if (s.settings.json()) {
    json results = json::array();
    for (const auto& [name, g] : items) {
      json j = class_json(g, eps);
      if (!name.empty()) j["generator"] = name;
      results.push_back(j);
    }
    s.emit(results);
    return kExitOk;
  }
  for (const auto& [name, g] : items) {
    if (!name.empty()) s.out() << name << ": ";
    auto c = classify(g, eps);
    s.out() << describe_class(c);
    if (c.tag == IsometryTag::Hyperbolic || c.tag == IsometryTag::Parabolic)
      s.out() << " fixed points " << describe_points(fixed_points(g, eps));
    s.out() << '\n';
  }
  return kExitOk;
}

int cmd_euler(Session& s, const std::string& path) {
  auto rho = s.representation(path);
  auto e = euler_number(rho);
  if (s.settings.json()) {
    s.emit(to_json(e));
  } else {
    s.out() << "euler = " << e.value << '\n'
            << std::setprecision(12) << "raw = " << e.raw << '\n'
            << "conjugation spread = " << e.conjugation_spread << '\n';
  }
  return kExitOk;
}

int cmd_reduce(Session& s, int genus, const std::vector<std::string>& tokens) {
  std::string text;
  for (const auto& t : tokens) text += t + " ";
  SurfacePresentation p(genus);
  Word w = parse_word(text, genus);
  Word r = dehn_reduce(p, w);
  if (s.settings.json()) {
    s.emit({{"genus", genus}, {"word", format_word(w)}, {"reduced", format_word(r)}, {"trivial", r.empty()}});
  } else {
    s.out() << "reduced = " << word_or_identity(r) << '\n' << (r.empty() ? "trivial" : "nontrivial") << '\n';
  }
  return kExitOk;
}

int cmd_scan(Session& s, const std::string& path, bool stop_at_first) {
  auto rho = s.representation(path);
  ScanOptions o = s.settings.scan();
  o.stop_at_first_non_hyperbolic = stop_at_first;
  auto r = scan_classification(rho, s.settings.max_length, o);
  if (s.settings.json()) {
    s.emit(to_json(r));
    return kExitOk;
  }
  auto& out = s.out();
  out << "words scanned = " << r.words_scanned << " (lengths 1.." << r.max_length
      << (r.stopped_early ? ", stopped at first non-hyperbolic" : "") << ")\n";
  for (auto t : {IsometryTag::Identity, IsometryTag::Elliptic, IsometryTag::Parabolic, IsometryTag::Hyperbolic})
    out << "  " << to_string(t) << ": " << r.count(t) << '\n';
  if (r.first_non_hyperbolic) {
    const auto& w = *r.first_non_hyperbolic;
    out << "first non-hyperbolic = " << format_word(w.word) << " (" << to_string(w.tag) << ", trace "
        << std::setprecision(12) << w.trace << ", length " << w.word.size() << ")\n";
  } else if (r.purely_hyperbolic()) {
    out << "purely hyperbolic up to length " << r.max_length << '\n';
  } else {
    out << "undecided: no non-hyperbolic image found, but some words cannot be classified\n";
  }
  out << "kernel witnesses = " << r.kernel_witness_count << '\n';
  for (std::size_t i = 0; i < std::min<std::size_t>(r.kernel_witnesses.size(), 8); ++i)
    out << "  " << format_word(r.kernel_witnesses[i]) << '\n';
  out << "tolerance-ambiguous = " << r.ambiguous_count << '\n';
  for (const auto& w : r.tolerance_ambiguous) out << "  " << format_word(w.word) << " (trace " << w.trace << ")\n";
  if (r.precision_limited_count > 0) {
    out << "precision-limited = " << r.precision_limited_count << '\n';
    for (std::size_t i = 0; i < std::min<std::size_t>(r.precision_limited.size(), 8); ++i)
      out << "  " << format_word(r.precision_limited[i].word) << '\n';
  }
  return kExitOk;
}

int cmd_hom_validate(Session& s, const std::string& path) {
  std::istringstream is(s.slurp(path));
  auto f = read_hom(is);
  auto v = validate_hom(f);
  if (s.settings.json()) {
    s.emit({{"source_genus", f.source_genus},
            {"target_genus", f.target_genus},
            {"valid", v.valid},
            {"reduced_relator_image", format_word(v.reduced_relator_image)}});
  } else if (v.valid) {
    s.out() << "valid\n";
  } else {
    s.out() << "invalid: relator image reduces to " << format_word(v.reduced_relator_image) << '\n';
  }
  return v.valid ? kExitOk : kExitDomain;
}

int cmd_index(Session& s, int genus, const std::string& path) {
  SurfacePresentation p(genus);
  std::istringstream is(s.slurp(path));
  auto words = read_words(is, genus);
  for (auto& w : words) w = free_reduce(w);
  std::erase_if(words, [](const Word& w) { return w.empty(); });
  auto t = coset_enumerate(p, words, s.settings.max_cosets);
  if (s.settings.json()) {
    json j = to_json(t);
    j["quotient_genus"] = t.closed() ? json(quotient_genus(genus, t.index())) : json(nullptr);
    s.emit(j);
  } else if (t.closed()) {
    s.out() << "index = " << t.index() << '\n' << "quotient genus = " << quotient_genus(genus, t.index()) << '\n';
  } else {
    s.out() << "cutoff exceeded (" << t.live_cosets << " live cosets, limit " << s.settings.max_cosets << ")\n";
  }
  return t.closed() ? kExitOk : kExitDomain;
}

int cmd_polygon(Session& s, int genus, const std::string& cone_angle) {
  double m = 0;
  if (cone_angle == "complete") {
    m = 1;
  } else {
    std::size_t used = 0;
    try {
      m = std::stod(cone_angle, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != cone_angle.size())
      throw CLI::ValidationError("--cone-angle", "expected a number or 'complete', got '" + cone_angle + "'");
  }
  auto poly = build_regular(genus, 2 * std::numbers::pi * m);
  auto rho = holonomy_assignment(poly);
  if (s.settings.json()) {
    s.emit({{"polygon", to_json(poly)}, {"representation", to_json(rho)}});
  } else {
    s.out() << "# regular " << 4 * genus << "-gon, total angle " << m << " * 2pi, cone order "
            << cone_data(poly).value_or(-1) << '\n';
    write_representation(s.out(), rho);
  }
  return kExitOk;
}

void print_gate(std::ostream& out, const GateReport& r) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  out << "verdict = " << to_string(r.verdict) << '\n'
      << "euler = " << opt(r.euler) << '\n'
      << "image index = " << (r.index_cutoff ? std::string("cutoff") : opt(r.image_index)) << '\n'
      << "quotient genus = " << opt(r.quotient_genus) << '\n'
      << "canonical degree = ";
  if (r.canonical_degree) {
    out << r.canonical_degree->num;
    if (!r.canonical_degree->is_integer()) out << '/' << r.canonical_degree->den;
  } else {
    out << '-';
  }
  out << '\n' << "cone budget = " << opt(r.cone_budget) << '\n' << "scan depth = " << r.scan_depth << '\n';
  for (const auto& w : r.witnesses) out << "witness: " << w << '\n';
  for (const auto& n : r.notes) out << "note: " << n << '\n';
}

int cmd_gate(Session& s, const std::string& base_path, const std::string& hom_path) {
  if (base_path == "-" && hom_path == "-") throw CLI::ValidationError("--base/--hom", "only one may read stdin");
  GateInput in;
  in.base = s.representation(base_path);
  std::istringstream hs(s.slurp(hom_path));
  in.f = read_hom(hs);
  in.scan_depth = s.settings.max_length;
  in.max_cosets = s.settings.max_cosets;
  in.scan = s.settings.scan();
  auto r = decide(in);
  if (s.settings.json()) {
    s.out() << to_json(r).dump(2) << '\n';
  } else {
    print_gate(s.out(), r);
  }
  return r.verdict == Verdict::Indeterminate ? kExitDomain : kExitOk;
}

int cmd_examples(Session& s, const std::string& name, ExampleOptions opts) {
  std::vector<std::string> names;
  if (name == "all") {
    names = example_names();
  } else {
    names = {name};
  }
  opts.scan_depth = s.settings.max_length;
  opts.max_cosets = s.settings.max_cosets;
  opts.scan = s.settings.scan();
  bool all_ok = true;
  json results = json::array();
  for (const auto& n : names) {
    auto r = run_example(n, opts);
    all_ok = all_ok && r.ok();
    if (s.settings.json()) {
      results.push_back(to_json(r));
      continue;
    }
    s.out() << "== " << n << (r.ok() ? " ok" : " FAILED") << '\n';
    if (n == "tan") s.out() << "genus = " << opts.genus << ", handles = " << opts.handles << '\n';
    if (r.data.contains("gate")) s.out() << "verdict = " << r.data["gate"]["verdict"].get<std::string>() << '\n';
    for (const auto& c : r.checks) {
      s.out() << (c.ok ? "  pass " : "  FAIL ") << c.what << ": " << c.actual;
      if (!c.ok) s.out() << " (expected " << c.expected << ")";
      s.out() << '\n';
    }
  }
  if (s.settings.json()) s.emit(results);
  return all_ok ? kExitOk : kExitDomain;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Session session(args, in, out);
  Settings& st = session.settings;

  CLI::App app{"Hyperbolic surface-group representations: Euler numbers, word scans and the branched-structure gate",
               "hypsurf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tolerance", st.tolerance, "trace tolerance for classification")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--report", st.report, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--max-length", st.max_length, "word length budget for scans")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  app.add_option("--max-cosets", st.max_cosets, "coset enumeration cutoff")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string path = "-";
  int genus = 2;
  std::vector<std::string> tokens;
  bool stop_at_first = false;
  std::string cone_angle;
  std::string base_path, hom_path;
  std::string example = "all";
  ExampleOptions ex;
  std::function<int()> action;

  auto* classify_cmd = app.add_subcommand("classify", "classify a matrix or every generator of a representation");
  classify_cmd->add_option("file", path, "matrix or representation file ('-' for stdin)");
  classify_cmd->callback([&] { action = [&] { return cmd_classify(session, path); }; });

  auto* euler_cmd = app.add_subcommand("euler", "Euler number of a representation");
  euler_cmd->add_option("file", path, "representation file ('-' for stdin)");
  euler_cmd->callback([&] { action = [&] { return cmd_euler(session, path); }; });

  auto* reduce_cmd = app.add_subcommand("reduce", "Dehn reduction of a word");
  reduce_cmd->add_option("--genus", genus)->required()->check(CLI::Range(2, 1000));
  reduce_cmd->add_option("word", tokens, "tokens such as a1 b2^-1 (empty for the identity)");
  reduce_cmd->callback([&] { action = [&] { return cmd_reduce(session, genus, tokens); }; });

  auto* scan_cmd = app.add_subcommand("scan", "classify all word images up to --max-length");
  scan_cmd->add_option("file", path, "representation file ('-' for stdin)");
  scan_cmd->add_flag("--stop-at-first", stop_at_first, "stop at the first non-hyperbolic image");
  scan_cmd->callback([&] { action = [&] { return cmd_scan(session, path, stop_at_first); }; });

  auto* hom_cmd = app.add_subcommand("hom", "surface-group homomorphisms");
  hom_cmd->require_subcommand(1);
  auto* validate_cmd = hom_cmd->add_subcommand("validate", "check that the relator maps to a trivial word");
  validate_cmd->add_option("file", path, "homomorphism file ('-' for stdin)");
  validate_cmd->callback([&] { action = [&] { return cmd_hom_validate(session, path); }; });

  auto* index_cmd = app.add_subcommand("index", "index of a subgroup given by generator words");
  index_cmd->add_option("--genus", genus)->required()->check(CLI::Range(2, 1000));
  index_cmd->add_option("file", path, "one word per line ('-' for stdin)");
  index_cmd->callback([&] { action = [&] { return cmd_index(session, genus, path); }; });

  auto* polygon_cmd = app.add_subcommand("polygon", "regular polygon holonomy in representation-file format");
  polygon_cmd->add_option("--genus", genus)->required()->check(CLI::Range(2, 1000));
  polygon_cmd->add_option("--cone-angle", cone_angle, "total angle in units of 2pi, or 'complete'")->required();
  polygon_cmd->callback([&] { action = [&] { return cmd_polygon(session, genus, cone_angle); }; });

  auto* gate_cmd = app.add_subcommand("gate", "decide geometrisability of base o hom");
  gate_cmd->add_option("--base", base_path, "base representation file")->required();
  gate_cmd->add_option("--hom", hom_path, "homomorphism file")->required();
  gate_cmd->callback([&] { action = [&] { return cmd_gate(session, base_path, hom_path); }; });

  auto* examples_cmd = app.add_subcommand("examples", "rebuild the reference constructions and check their numbers");
  std::vector<std::string> choices = example_names();
  choices.push_back("all");
  examples_cmd->add_option("name", example)->check(CLI::IsMember(choices))->capture_default_str();
  examples_cmd->add_option("--genus", ex.genus, "tan: surface genus")->capture_default_str();
  examples_cmd->add_option("--handles", ex.handles, "tan: handles attached")->check(CLI::PositiveNumber)->capture_default_str();
  examples_cmd->callback([&] { action = [&] { return cmd_examples(session, example, ex); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    const CLI::App* sub = nullptr;
    for (const auto* s : app.get_subcommands()) sub = s;
    err << (sub ? sub->help() : app.help());
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace hypsurf
