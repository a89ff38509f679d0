// Hand-rolled generators shared by the test binaries. Seeds are fixed so
// every run sees the same samples.
#ifndef HYPSURF_TESTS_SUPPORT_HPP
#define HYPSURF_TESTS_SUPPORT_HPP

#include <numbers>
#include <random>

#include "hypsurf/euler.hpp"
#include "hypsurf/polygon.hpp"
#include "hypsurf/representation.hpp"
#include "hypsurf/surfgrp.hpp"

namespace testsupport {

using Rng = std::mt19937_64;
constexpr double kPi = std::numbers::pi;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Rotation * dilation * rotation covers PSL(2,R); spread bounds the dilation.
inline hypsurf::Isometryd random_isometry(Rng& rng, double spread = 2.0) {
  using hypsurf::Isometryd;
  return Isometryd::rotation(uniform(rng, 0, 2 * kPi)) * Isometryd::dilation(uniform(rng, -spread, spread)) *
         Isometryd::rotation(uniform(rng, 0, 2 * kPi));
}

inline hypsurf::Isometryd random_hyperbolic(Rng& rng) {
  using hypsurf::Isometryd;
  auto h = random_isometry(rng);
  double len = uniform(rng, 0.2, 2.0);
  return h * Isometryd::dilation(len) * h.inverse();
}

/// Freely reduced word of exactly `len` letters.
inline hypsurf::Word random_reduced_word(Rng& rng, int genus, int len) {
  hypsurf::Word w;
  while (static_cast<int>(w.size()) < len) {
    int l = uniform_int(rng, 0, 4 * genus - 1);
    if (!w.empty() && l == hypsurf::inverse_letter(w.back())) continue;
    w.push_back(l);
  }
  return w;
}

inline hypsurf::RepresentationAssignment polygon_rep(int genus, double total_angle) {
  return hypsurf::holonomy_assignment(hypsurf::build_regular(genus, total_angle));
}

inline hypsurf::RepresentationAssignment octagon(double total_angle) { return polygon_rep(2, total_angle); }

/// x -> u x u^-1 on genus g.
inline hypsurf::SurfaceHom inner_hom(int genus, const hypsurf::Word& u) {
  hypsurf::SurfaceHom f{genus, genus, {}};
  for (int k = 0; k < 2 * genus; ++k)
    f.images.push_back(hypsurf::concat(hypsurf::concat(u, {2 * k}), hypsurf::inverse(u)));
  return f;
}

}  // namespace testsupport

#endif  // HYPSURF_TESTS_SUPPORT_HPP
