#include "hypsurf/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "hypsurf/errors.hpp"

namespace hypsurf {

namespace {

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) { return s.substr(0, s.find('#')); }

std::vector<Entry> read_entries(std::istream& in) {
  std::vector<Entry> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    Entry e;
    e.line = n;
    auto eq = line.find('=');
    if (eq != std::string::npos) {
      e.key = trim(line.substr(0, eq));
      e.value = trim(line.substr(eq + 1));
    } else {
      auto sp = line.find_first_of(" \t");
      e.key = line.substr(0, sp);
      e.value = sp == std::string::npos ? "" : trim(line.substr(sp));
    }
    out.push_back(std::move(e));
  }
  return out;
}

[[noreturn]] void parse_fail(const Entry& e, const std::string& what) {
  throw DomainError(ErrorKind::ParseError, "line " + std::to_string(e.line) + ": " + what);
}

int parse_int(const Entry& e) {
  try {
    std::size_t used = 0;
    int v = std::stoi(e.value, &used);
    if (used != e.value.size()) parse_fail(e, "expected an integer for " + e.key);
    return v;
  } catch (const std::logic_error&) {
    parse_fail(e, "expected an integer for " + e.key);
  }
}

// Index of a generator name in a1, b1, ..., ag, bg order, or -1.
int generator_index(const std::string& name, int genus) {
  if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b')) return -1;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
  if (name[1] == '0') return -1;
  int i = std::stoi(name.substr(1));
  if (i < 1 || i > genus) return -1;
  return 2 * (i - 1) + (name[0] == 'b' ? 1 : 0);
}

template <class T, class Make>
std::vector<T> collect_generators(const std::vector<Entry>& entries, int genus,
                                  const std::vector<std::string>& header_keys, Make make) {
  std::vector<std::optional<T>> slots(2 * genus);
  for (const Entry& e : entries) {
    bool header = false;
    for (const auto& k : header_keys) header = header || e.key == k;
    if (header) continue;
    int k = generator_index(e.key, genus);
    if (k < 0) parse_fail(e, "unknown generator '" + e.key + "' for genus " + std::to_string(genus));
    if (slots[k]) parse_fail(e, "duplicate generator '" + e.key + "'");
    try {
      slots[k] = make(e.value);
    } catch (const DomainError& err) {
      if (err.kind() != ErrorKind::ParseError && err.kind() != ErrorKind::BadWord) throw;
      parse_fail(e, e.key + ": " + err.what());
    }
  }
  std::vector<T> out;
  for (int k = 0; k < 2 * genus; ++k) {
    if (!slots[k]) throw DomainError(ErrorKind::ParseError, "missing generator " + generator_name(k));
    out.push_back(*slots[k]);
  }
  return out;
}

const Entry& require_key(const std::vector<Entry>& entries, const std::string& key) {
  for (const Entry& e : entries)
    if (e.key == key) return e;
  throw DomainError(ErrorKind::ParseError, "missing field '" + key + "'");
}

template <class F>
auto with_file(const std::string& path, F read) {
  if (path == "-") return read(std::cin);
  std::ifstream in(path);
  if (!in) throw DomainError(ErrorKind::ParseError, "cannot open '" + path + "'");
  return read(in);
}

json word_json(const Word& w) { return format_word(w); }

json classified_json(const ClassifiedWord& w) {
  return {{"word", format_word(w.word)}, {"length", w.word.size()}, {"class", to_string(w.tag)}, {"trace", w.trace}};
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

RepresentationAssignment read_representation(std::istream& in) {
  auto entries = read_entries(in);
  int genus = parse_int(require_key(entries, "genus"));
  if (genus < 2) throw DomainError(ErrorKind::BadGenusRange, "genus must be at least 2");
  RepresentationAssignment rho;
  rho.genus = genus;
  rho.images = collect_generators<Isometryd>(entries, genus, {"genus"},
                                             [](const std::string& v) { return parse_matrix<double>(v); });
  validate(rho);
  return rho;
}

void write_representation(std::ostream& out, const RepresentationAssignment& rho) {
  out << "genus = " << rho.genus << '\n';
  for (std::size_t k = 0; k < rho.images.size(); ++k)
    out << generator_name(static_cast<int>(k)) << " = " << format_matrix(rho.images[k]) << '\n';
}

SurfaceHom read_hom(std::istream& in) {
  auto entries = read_entries(in);
  SurfaceHom f;
  f.source_genus = parse_int(require_key(entries, "source_genus"));
  f.target_genus = parse_int(require_key(entries, "target_genus"));
  if (f.source_genus < 2 || f.target_genus < 2)
    throw DomainError(ErrorKind::BadGenusRange, "homomorphism genera must be at least 2");
  const int target = f.target_genus;
  f.images = collect_generators<Word>(entries, f.source_genus, {"source_genus", "target_genus"},
                                      [target](const std::string& v) { return parse_word(v, target); });
  return f;
}

void write_hom(std::ostream& out, const SurfaceHom& f) {
  out << "source_genus = " << f.source_genus << '\n' << "target_genus = " << f.target_genus << '\n';
  for (std::size_t k = 0; k < f.images.size(); ++k) {
    out << generator_name(static_cast<int>(k)) << " =";
    if (!f.images[k].empty()) out << ' ' << format_word(f.images[k]);
    out << '\n';
  }
}

std::vector<Word> read_words(std::istream& in, int genus) {
  std::vector<Word> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(strip_comment(line));
    if (!line.empty()) out.push_back(parse_word(line, genus));
  }
  return out;
}

RepresentationAssignment load_representation(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_representation(in); });
}

SurfaceHom load_hom(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_hom(in); });
}

std::vector<Word> load_words(const std::string& path, int genus) {
  return with_file(path, [genus](std::istream& in) { return read_words(in, genus); });
}

json to_json(const IsometryClass<double>& c) {
  json j{{"class", to_string(c.tag)}, {"tolerance_ambiguous", c.tolerance_ambiguous}};
  if (c.tag == IsometryTag::Hyperbolic) j["translation_length"] = c.translation_length;
  if (c.tag == IsometryTag::Elliptic) j["rotation_angle"] = c.rotation_angle;
  return j;
}

json to_json(const RepresentationAssignment& rho) {
  json gens = json::object();
  for (std::size_t k = 0; k < rho.images.size(); ++k) {
    const auto& g = rho.images[k];
    gens[generator_name(static_cast<int>(k))] = {g.a(), g.b(), g.c(), g.d()};
  }
  return {{"genus", rho.genus}, {"generators", gens}};
}

json to_json(const EulerResult& e) {
  return {{"euler", e.value}, {"raw", e.raw}, {"conjugation_spread", e.conjugation_spread}};
}

json to_json(const ScanReport& r) {
  json counts = json::object();
  for (auto t : {IsometryTag::Identity, IsometryTag::Elliptic, IsometryTag::Parabolic, IsometryTag::Hyperbolic})
    counts[to_string(t)] = r.count(t);
  json kernel = json::array();
  for (const Word& w : r.kernel_witnesses) kernel.push_back(word_json(w));
  json ambiguous = json::array();
  for (const auto& w : r.tolerance_ambiguous) ambiguous.push_back(classified_json(w));
  json limited = json::array();
  for (const auto& w : r.precision_limited) limited.push_back(word_json(w.word));
  return {{"genus", r.genus},
          {"max_length", r.max_length},
          {"words_scanned", r.words_scanned},
          {"stopped_early", r.stopped_early},
          {"purely_hyperbolic", r.purely_hyperbolic()},
          {"class_counts", counts},
          {"first_non_hyperbolic", r.first_non_hyperbolic ? classified_json(*r.first_non_hyperbolic) : json(nullptr)},
          {"kernel_witness_count", r.kernel_witness_count},
          {"kernel_witnesses", kernel},
          {"tolerance_ambiguous_count", r.ambiguous_count},
          {"tolerance_ambiguous", ambiguous},
          {"precision_limited_count", r.precision_limited_count},
          {"precision_limited", limited}};
}

json to_json(const CosetTable& t) {
  json j{{"status", t.closed() ? "CLOSED" : "CUTOFF_EXCEEDED"},
         {"index", t.closed() ? json(t.index()) : json(nullptr)},
         {"live_cosets", t.live_cosets}};
  if (t.closed()) {
    json perms = json::object();
    auto p = letter_permutations(t);
    for (int x = 0; x < t.columns; ++x) perms[format_word({x})] = p[x];
    j["permutations"] = perms;
  }
  return j;
}

json to_json(const RegularPolygonStructure& p) {
  json vertices = json::array();
  for (auto v : p.vertices) vertices.push_back({v.real(), v.imag()});
  auto k = cone_data(p);
  return {{"genus", p.genus},
          {"total_angle", p.total_angle},
          {"cone_order", optional_json(k)},
          {"circumradius", p.circumradius},
          {"apothem", p.apothem},
          {"area", area(p)},
          {"vertices", vertices}};
}

json to_json(const GateReport& r) {
  json degree = nullptr;
  if (r.canonical_degree) {
    degree = r.canonical_degree->is_integer()
                 ? json(r.canonical_degree->num)
                 : json(std::to_string(r.canonical_degree->num) + "/" + std::to_string(r.canonical_degree->den));
  }
  json index = r.image_index ? json(*r.image_index) : r.index_cutoff ? json("cutoff") : json(nullptr);
  return {{"verdict", to_string(r.verdict)},
          {"euler", optional_json(r.euler)},
          {"image_index", index},
          {"quotient_genus", optional_json(r.quotient_genus)},
          {"canonical_degree", degree},
          {"cone_budget", optional_json(r.cone_budget)},
          {"witnesses", r.witnesses},
          {"source_genus", r.source_genus},
          {"scan_depth", r.scan_depth},
          {"notes", r.notes}};
}

GateReport gate_report_from_json(const json& j) {
  auto opt_int = [&](const char* key) -> std::optional<int> {
    const json& v = j.at(key);
    if (v.is_number_integer()) return v.get<int>();
    return std::nullopt;
  };
  GateReport r;
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.euler = opt_int("euler");
  r.image_index = opt_int("image_index");
  r.index_cutoff = j.at("image_index") == "cutoff";
  r.quotient_genus = opt_int("quotient_genus");
  r.cone_budget = opt_int("cone_budget");
  const json& d = j.at("canonical_degree");
  if (d.is_number_integer()) {
    r.canonical_degree = Rational{d.get<long>(), 1};
  } else if (d.is_string()) {
    std::string s = d.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) throw DomainError(ErrorKind::ParseError, "bad canonical_degree '" + s + "'");
    r.canonical_degree = Rational{std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1))};
  }
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.source_genus = j.at("source_genus").get<int>();
  r.scan_depth = j.at("scan_depth").get<int>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace hypsurf
