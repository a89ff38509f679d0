// Text file formats and JSON conversions.
//
// Representation file:
//   genus = 2
//   a1 = m00 m01 m10 m11
//   b1 = ...
// Homomorphism file:
//   source_genus = 3
//   target_genus = 2
//   a1 = a1
//   a3 =            (empty word, the identity)
// Word list: one word per line.
//
// Lines may use `key value` instead of `key = value`; `#` starts a comment.
#ifndef HYPSURF_IO_HPP
#define HYPSURF_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypsurf/cosets.hpp"
#include "hypsurf/euler.hpp"
#include "hypsurf/gate.hpp"
#include "hypsurf/polygon.hpp"
#include "hypsurf/scan.hpp"

namespace hypsurf {

using json = nlohmann::ordered_json;

/// Parses and validates (relator check included); throws ParseError or the
/// validation error.
RepresentationAssignment read_representation(std::istream& in);
void write_representation(std::ostream& out, const RepresentationAssignment& rho);

/// Parses only; validity of the relator image is checked separately.
SurfaceHom read_hom(std::istream& in);
void write_hom(std::ostream& out, const SurfaceHom& f);

/// Non-empty, non-comment lines as words in the given genus.
std::vector<Word> read_words(std::istream& in, int genus);

RepresentationAssignment load_representation(const std::string& path);  // "-" reads stdin
SurfaceHom load_hom(const std::string& path);
std::vector<Word> load_words(const std::string& path, int genus);

json to_json(const IsometryClass<double>& c);
json to_json(const RepresentationAssignment& rho);
json to_json(const EulerResult& e);
json to_json(const ScanReport& r);
json to_json(const CosetTable& t);
json to_json(const RegularPolygonStructure& p);
json to_json(const GateReport& r);

GateReport gate_report_from_json(const json& j);

}  // namespace hypsurf

#endif  // HYPSURF_IO_HPP
