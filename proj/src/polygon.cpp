#include "hypsurf/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hypsurf/euler.hpp"

namespace hypsurf {

namespace {

using std::numbers::pi;
using cplx = std::complex<double>;

constexpr double kIntegerAngleTolerance = 1e-9;

// Counterclockwise rotation by psi about i in the upper half-plane, which is
// the rotation about the disk origin under the Cayley transform.
Isometryd rotation_about_center(double psi) { return Isometryd::rotation(-psi / 2); }

double side_midpoint_angle(int genus, int side) { return 2 * pi * (side + 0.5) / (4 * genus); }

// Rotate side `source` to the position opposite `target`, then translate
// through the center across `target`.
Isometryd side_pairing(int genus, double apothem, int source, int target) {
  return rotation_about_center(side_midpoint_angle(genus, target)) * Isometryd::dilation(2 * apothem) *
         rotation_about_center(pi - side_midpoint_angle(genus, source));
}

// Angle at b in the geodesic triangle (a, b, c), from the law of cosines.
double vertex_angle(cplx a, cplx b, cplx c) {
  double x = hyperbolic_distance(b, a);
  double y = hyperbolic_distance(b, c);
  double z = hyperbolic_distance(a, c);
  double cosine = (std::cosh(x) * std::cosh(y) - std::cosh(z)) / (std::sinh(x) * std::sinh(y));
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

}  // namespace

cplx act(const Isometryd& g, cplx z) { return (g.a() * z + g.b()) / (g.c() * z + g.d()); }

double hyperbolic_distance(cplx z, cplx w) {
  return std::acosh(1 + std::norm(z - w) / (2 * z.imag() * w.imag()));
}

cplx disk_to_upper(cplx w) { return cplx(0, 1) * (1.0 + w) / (1.0 - w); }

std::pair<int, int> paired_sides(int genus, int generator) {
  (void)genus;
  // Sides 4j, 4j+1, 4j+2, 4j+3 carry a, b, a^-1, b^-1. The a-generator maps
  // side a^-1 onto side a and the b-generator maps side b onto side b^-1;
  // with these directions the pairings satisfy [a1,b1]...[ag,bg] = 1.
  int handle = generator / 2;
  if (generator % 2 == 0) return {4 * handle + 2, 4 * handle};
  return {4 * handle + 1, 4 * handle + 3};
}

RegularPolygonStructure build_regular(int genus, double total_angle) {
  if (genus < 2) throw DomainError(ErrorKind::AngleOutOfRange, "genus must be at least 2");
  const double max_angle = (4.0 * genus - 2) * pi;
  if (!(total_angle > 0 && total_angle < max_angle)) {
    std::ostringstream os;
    os << "total angle " << total_angle << " outside (0, " << max_angle << ")";
    throw DomainError(ErrorKind::AngleOutOfRange, os.str());
  }
  const int n = 4 * genus;
  const double center_half = pi / n;
  const double vertex_half = total_angle / (2 * n);
  // Right triangle center / side midpoint / vertex.
  const double cosh_r = 1 / (std::tan(center_half) * std::tan(vertex_half));
  const double cosh_h = std::cos(vertex_half) / std::sin(center_half);

  RegularPolygonStructure p;
  p.genus = genus;
  p.total_angle = total_angle;
  p.circumradius = std::acosh(cosh_r);
  p.apothem = std::acosh(cosh_h);
  const double disk_radius = std::tanh(p.circumradius / 2);
  for (int i = 0; i < n; ++i) p.vertices.push_back(std::polar(disk_radius, 2 * pi * i / n));
  for (int k = 0; k < 2 * genus; ++k) {
    auto [source, target] = paired_sides(genus, k);
    p.pairings.push_back(side_pairing(genus, p.apothem, source, target));
  }
  return p;
}

std::optional<int> cone_data(const RegularPolygonStructure& p) {
  double m = p.total_angle / (2 * pi);
  double r = std::round(m);
  if (r >= 1 && std::abs(m - r) <= kIntegerAngleTolerance) return static_cast<int>(r) - 1;
  return std::nullopt;
}

RepresentationAssignment holonomy_assignment(const RegularPolygonStructure& p) {
  if (!cone_data(p))
    throw DomainError(ErrorKind::NotIntegerAngle, "total angle is not a multiple of 2pi");
  return RepresentationAssignment{p.genus, p.pairings};
}

std::vector<cplx> vertices_upper_half_plane(const RegularPolygonStructure& p) {
  std::vector<cplx> out;
  for (auto w : p.vertices) out.push_back(disk_to_upper(w));
  return out;
}

std::vector<double> interior_angles(const RegularPolygonStructure& p) {
  auto v = vertices_upper_half_plane(p);
  const std::size_t n = v.size();
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(vertex_angle(v[(i + n - 1) % n], v[i], v[(i + 1) % n]));
  return out;
}

std::vector<double> side_lengths(const RegularPolygonStructure& p) {
  auto v = vertices_upper_half_plane(p);
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(hyperbolic_distance(v[i], v[(i + 1) % v.size()]));
  return out;
}

double area(const RegularPolygonStructure& p) {
  double sum = 0;
  for (double a : interior_angles(p)) sum += a;
  return (4.0 * p.genus - 2) * pi - sum;
}

IdentityCheck check_gauss_bonnet(const RegularPolygonStructure& p) {
  IdentityCheck out;
  const double chi = 2.0 - 2.0 * p.genus;
  const double k = p.total_angle / (2 * pi) - 1;
  const double a = area(p);
  const double expected = 2 * pi * (-(chi + k));
  std::ostringstream os;
  os << "chi + k = " << chi + k << ", area = " << a << ", 2pi(-(chi+k)) = " << expected;
  out.diagnostic = os.str();
  out.ok = chi + k < 0 && std::abs(a - expected) <= 1e-9;
  return out;
}

IdentityCheck check_euler_identity(const RegularPolygonStructure& p) {
  IdentityCheck out;
  auto k = cone_data(p);
  if (!k) {
    out.diagnostic = "total angle is not a multiple of 2pi";
    return out;
  }
  const int chi = 2 - 2 * p.genus;
  try {
    auto eu = euler_number(holonomy_assignment(p));
    out.ok = std::abs(eu.value) == std::abs(chi + *k);
    out.diagnostic = "eu = " + std::to_string(eu.value) + ", chi + k = " + std::to_string(chi + *k);
  } catch (const DomainError& e) {
    out.diagnostic = e.what();
  }
  return out;
}

}  // namespace hypsurf
