// Regular hyperbolic 4g-gons with the labelling a1 b1 a1^-1 b1^-1 ... and
// their side-pairing generators.
//
// The polygon is centered at the origin of the Poincare disk; vertex i sits
// at angle 2*pi*i/(4g) on the circle of hyperbolic radius R, and side i runs
// from vertex i to vertex i+1. Each generator pairs its two sides reversing
// boundary orientation (a_j: side 4j+2 onto 4j, b_j: side 4j+1 onto 4j+3,
// counting from j = 0), which makes the relator hold. Gluing produces a
// closed genus-g surface with a single cone point of angle Theta (the sum of
// the 4g interior angles).
#ifndef HYPSURF_POLYGON_HPP
#define HYPSURF_POLYGON_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hypsurf/representation.hpp"

namespace hypsurf {

struct RegularPolygonStructure {
  int genus = 2;
  double total_angle = 0;  // Theta
  double circumradius = 0;
  double apothem = 0;
  std::vector<std::complex<double>> vertices;  // disk model
  std::vector<Isometryd> pairings;              // a1, b1, ..., ag, bg
};

/// Throws AngleOutOfRange unless g >= 2 and 0 < Theta < (4g-2)pi.
RegularPolygonStructure build_regular(int genus, double total_angle);

/// Throws NotIntegerAngle unless Theta is a multiple of 2pi.
RepresentationAssignment holonomy_assignment(const RegularPolygonStructure& p);

/// Cone order k with Theta = 2pi(k+1), when Theta is (numerically) such a value.
std::optional<int> cone_data(const RegularPolygonStructure& p);

/// Area recomputed from the measured interior angles, (4g-2)pi - sum.
double area(const RegularPolygonStructure& p);

// Measurements taken from the vertex coordinates.
std::vector<double> interior_angles(const RegularPolygonStructure& p);
std::vector<double> side_lengths(const RegularPolygonStructure& p);
/// Upper-half-plane coordinates of the vertices.
std::vector<std::complex<double>> vertices_upper_half_plane(const RegularPolygonStructure& p);
/// Source and target side indices of generator k (0 = a1, 1 = b1, ...).
std::pair<int, int> paired_sides(int genus, int generator);

struct IdentityCheck {
  bool ok = false;
  std::string diagnostic;
};

IdentityCheck check_gauss_bonnet(const RegularPolygonStructure& p);
IdentityCheck check_euler_identity(const RegularPolygonStructure& p);

// Half-plane helpers shared with tests.
std::complex<double> act(const Isometryd& g, std::complex<double> z);
double hyperbolic_distance(std::complex<double> z, std::complex<double> w);
std::complex<double> disk_to_upper(std::complex<double> w);

}  // namespace hypsurf

#endif  // HYPSURF_POLYGON_HPP
