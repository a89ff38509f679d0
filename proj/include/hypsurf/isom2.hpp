// Orientation-preserving isometries of the hyperbolic plane as PSL(2,R)
// matrices, their trace classification, boundary fixed points, and lifts of
// their boundary action to the universal cover of the circle.
//
// Boundary convention: the boundary circle is the projective line of
// directions in R^2, parametrized by the direction angle theta with period
// pi. The direction (cos t, sin t) corresponds to the upper-half-plane
// boundary point cot(t).
#ifndef HYPSURF_ISOM2_HPP
#define HYPSURF_ISOM2_HPP

#include <Eigen/Dense>

#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypsurf/errors.hpp"

namespace hypsurf {

inline constexpr double kDefaultClassifyTolerance = 1e-9;

template <typename Scalar>
class IsometryElement {
 public:
  using Matrix = Eigen::Matrix<Scalar, 2, 2>;

  IsometryElement() : m_(Matrix::Identity()) {}

  /// Normalizes to determinant 1 and canonical sign. Throws InvalidMatrix
  /// for non-finite entries or non-positive determinant.
  explicit IsometryElement(const Matrix& m) : m_(m) { normalize(); }

  IsometryElement(Scalar a, Scalar b, Scalar c, Scalar d) {
    m_ << a, b, c, d;
    normalize();
  }

  static IsometryElement identity() { return IsometryElement(); }

  /// For matrices known to have determinant 1 up to rounding, such as
  /// products of elements. Never throws on a rounding-corrupted determinant.
  static IsometryElement from_unimodular(const Matrix& m) { return IsometryElement(m, Unimodular{}); }

  static IsometryElement rotation(Scalar phi) {
    using std::cos;
    using std::sin;
    return IsometryElement(cos(phi), -sin(phi), sin(phi), cos(phi));
  }

  /// Translation along the imaginary axis of the upper half-plane by
  /// hyperbolic distance `length`.
  static IsometryElement dilation(Scalar length) {
    using std::exp;
    return IsometryElement(exp(length / 2), Scalar(0), Scalar(0), exp(-length / 2));
  }

  const Matrix& matrix() const { return m_; }
  Scalar a() const { return m_(0, 0); }
  Scalar b() const { return m_(0, 1); }
  Scalar c() const { return m_(1, 0); }
  Scalar d() const { return m_(1, 1); }
  Scalar trace() const { return m_.trace(); }

  IsometryElement inverse() const {
    Matrix m;
    m << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
    return IsometryElement(m, Unimodular{});
  }

  template <typename Other>
  IsometryElement<Other> cast() const {
    return IsometryElement<Other>(m_.template cast<Other>());
  }

  friend IsometryElement operator*(const IsometryElement& g, const IsometryElement& h) {
    return IsometryElement(Matrix(g.m_ * h.m_), Unimodular{});
  }

  /// Equality of canonical representatives, entrywise within tol.
  bool is_approx(const IsometryElement& other, Scalar tol) const {
    return distance(other) <= tol;
  }

  /// Max-entry distance modulo the global sign.
  Scalar distance(const IsometryElement& other) const {
    Scalar plus = (m_ - other.m_).cwiseAbs().maxCoeff();
    Scalar minus = (m_ + other.m_).cwiseAbs().maxCoeff();
    return plus < minus ? plus : minus;
  }

  Scalar distance_to_identity() const { return distance(IsometryElement()); }

 private:
  struct Unimodular {};

  // Renormalizes only while the determinant can be computed to within about
  // 1e-12; past that its rounding error exceeds the drift it would correct.
  IsometryElement(const Matrix& m, Unimodular) : m_(m) {
    using std::abs;
    using std::sqrt;
    if (!m_.allFinite()) throw DomainError(ErrorKind::InvalidMatrix, "non-finite matrix entry");
    const Scalar magnitude = abs(m_(0, 0) * m_(1, 1)) + abs(m_(0, 1) * m_(1, 0));
    if (magnitude * std::numeric_limits<Scalar>::epsilon() <= Scalar(1e-12)) {
      Scalar det = m_.determinant();
      if (det > Scalar(0)) m_ /= sqrt(det);
    }
    canonical_sign();
  }

  void normalize() {
    using std::sqrt;
    if (!m_.allFinite()) throw DomainError(ErrorKind::InvalidMatrix, "non-finite matrix entry");
    Scalar det = m_.determinant();
    if (!(det > Scalar(0)))
      throw DomainError(ErrorKind::InvalidMatrix, "determinant must be positive");
    m_ /= sqrt(det);
    canonical_sign();
  }

  void canonical_sign() {
    using std::abs;
    Scalar scale = m_.cwiseAbs().maxCoeff();
    for (int i = 0; i < 4; ++i) {
      Scalar x = m_(i / 2, i % 2);
      if (abs(x) > scale * Scalar(1e-12)) {
        if (x < Scalar(0)) m_ = -m_;
        break;
      }
    }
  }

  Matrix m_;
};

using Isometryd = IsometryElement<double>;

template <typename Scalar>
IsometryElement<Scalar> conjugate(const IsometryElement<Scalar>& h, const IsometryElement<Scalar>& g) {
  return h * g * h.inverse();
}

template <typename Scalar>
IsometryElement<Scalar> commutator(const IsometryElement<Scalar>& g, const IsometryElement<Scalar>& h) {
  return g * h * g.inverse() * h.inverse();
}

template <typename Scalar>
IsometryElement<Scalar> power(const IsometryElement<Scalar>& g, int n) {
  IsometryElement<Scalar> base = n < 0 ? g.inverse() : g;
  IsometryElement<Scalar> out;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return out;
}

// ---------------------------------------------------------------------------
// Classification

enum class IsometryTag { Identity, Elliptic, Parabolic, Hyperbolic };

inline const char* to_string(IsometryTag t) {
  switch (t) {
    case IsometryTag::Identity: return "Identity";
    case IsometryTag::Elliptic: return "Elliptic";
    case IsometryTag::Parabolic: return "Parabolic";
    case IsometryTag::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

template <typename Scalar>
struct IsometryClass {
  IsometryTag tag = IsometryTag::Identity;
  Scalar translation_length = 0;  // Hyperbolic only
  Scalar rotation_angle = 0;      // Elliptic only, in (0, 2pi)
  // Set when ||trace| - 2| falls inside the tolerance band; such elements
  // are reported Parabolic but cannot be certified as such.
  bool tolerance_ambiguous = false;
};

template <typename Scalar>
IsometryClass<Scalar> classify(const IsometryElement<Scalar>& g,
                               Scalar eps = Scalar(kDefaultClassifyTolerance)) {
  using std::abs;
  using std::acos;
  using std::acosh;
  IsometryClass<Scalar> out;
  if (g.distance_to_identity() <= eps) {
    out.tag = IsometryTag::Identity;
    return out;
  }
  Scalar t = abs(g.trace());
  if (t > Scalar(2) + eps) {
    out.tag = IsometryTag::Hyperbolic;
    out.translation_length = 2 * acosh(t / 2);
  } else if (t < Scalar(2) - eps) {
    out.tag = IsometryTag::Elliptic;
    const Scalar pi = std::numbers::pi_v<Scalar>;
    // sign(c) separates the two conjugacy classes with equal trace.
    Scalar theta = 2 * acos(g.trace() / 2);
    out.rotation_angle = g.c() > Scalar(0) ? 2 * pi - theta : theta;
  } else {
    out.tag = IsometryTag::Parabolic;
    out.tolerance_ambiguous = true;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boundary fixed points

template <typename Scalar>
struct BoundaryPoint {
  Scalar x = 0;
  bool at_infinity = false;

  /// Unit representative of the boundary direction, for tolerant comparison.
  Eigen::Matrix<Scalar, 2, 1> direction() const {
    Eigen::Matrix<Scalar, 2, 1> v;
    if (at_infinity) {
      v << Scalar(1), Scalar(0);
    } else {
      v << x, Scalar(1);
    }
    return v.normalized();
  }

  bool is_approx(const BoundaryPoint& other, Scalar tol) const {
    using std::abs;
    auto u = direction();
    auto v = other.direction();
    return abs(u(0) * v(1) - u(1) * v(0)) <= tol;
  }
};

/// Roots of c x^2 + (d - a) x - b = 0 on the extended real line; the count
/// follows the classification (2, 1, 0 for hyperbolic, parabolic, elliptic).
template <typename Scalar>
std::vector<BoundaryPoint<Scalar>> fixed_points(const IsometryElement<Scalar>& g,
                                                Scalar eps = Scalar(kDefaultClassifyTolerance)) {
  using std::abs;
  using std::sqrt;
  auto cls = classify(g, eps);
  if (cls.tag == IsometryTag::Identity)
    throw DomainError(ErrorKind::IdentityHasAllPoints, "identity fixes every boundary point");
  std::vector<BoundaryPoint<Scalar>> out;
  if (cls.tag == IsometryTag::Elliptic) return out;

  const Scalar a = g.a(), b = g.b(), c = g.c(), d = g.d();
  const Scalar scale = g.matrix().cwiseAbs().maxCoeff();
  const bool c_zero = abs(c) <= scale * Scalar(1e-12);

  if (cls.tag == IsometryTag::Parabolic) {
    if (c_zero) {
      out.push_back({Scalar(0), true});
    } else {
      out.push_back({(a - d) / (2 * c), false});
    }
    return out;
  }

  if (c_zero) {
    out.push_back({Scalar(0), true});
    out.push_back({b / (d - a), false});
    return out;
  }
  // Numerically stable quadratic roots.
  Scalar p = d - a;
  Scalar disc = sqrt(p * p + 4 * b * c);
  Scalar q = -(p + (p >= Scalar(0) ? disc : -disc)) / 2;
  Scalar r1 = q / c;
  Scalar r2 = q != Scalar(0) ? -b / q : (a - d) / (2 * c);
  out.push_back({r1 < r2 ? r1 : r2, false});
  out.push_back({r1 < r2 ? r2 : r1, false});
  return out;
}

// ---------------------------------------------------------------------------
// Lifts of the boundary action to the universal cover of the circle

/// A lift L of the boundary action of `base` to the real line: continuous,
/// strictly increasing, L(theta + pi) = L(theta) + pi, with L(0) = anchor.
///
/// Evaluation uses base = Q(alpha) * U with U upper triangular with positive
/// diagonal. U fixes the direction 0, so its action has a canonical lift U~
/// with U~(0) = 0, and every lift of base is theta -> anchor + U~(theta).
template <typename Scalar>
class CircleLift {
 public:
  CircleLift() = default;

  /// The anchor must be congruent to the base's image of direction 0 modulo
  /// pi; use lift() for the canonical choice.
  CircleLift(const IsometryElement<Scalar>& base, Scalar anchor) : base_(base), anchor_(anchor) {
    using std::hypot;
    const auto& m = base_.matrix();
    Scalar r11 = hypot(m(0, 0), m(1, 0));
    u11_ = r11;
    u12_ = (m(0, 0) * m(0, 1) + m(1, 0) * m(1, 1)) / r11;
    u22_ = Scalar(1) / r11;
  }

  const IsometryElement<Scalar>& base() const { return base_; }
  Scalar anchor() const { return anchor_; }

  Scalar operator()(Scalar theta) const {
    using std::atan2;
    using std::cos;
    using std::floor;
    using std::sin;
    const Scalar pi = std::numbers::pi_v<Scalar>;
    Scalar turns = floor(theta / pi);
    Scalar t = theta - turns * pi;
    Scalar st = sin(t);
    Scalar ct = cos(t);
    // y-coordinate of U (cos t, sin t) is nonnegative, so atan2 lands in [0, pi].
    Scalar phi = atan2(u22_ * st, u11_ * ct + u12_ * st);
    return anchor_ + turns * pi + phi;
  }

  /// The same map shifted by k half-turns (another lift of the same base).
  CircleLift shifted(int k) const {
    return CircleLift(base_, anchor_ + Scalar(k) * std::numbers::pi_v<Scalar>);
  }

 private:
  IsometryElement<Scalar> base_;
  Scalar anchor_ = 0;
  Scalar u11_ = 1, u12_ = 0, u22_ = 1;
};

using CircleLiftd = CircleLift<double>;

/// The lift with anchor in [0, pi).
template <typename Scalar>
CircleLift<Scalar> lift(const IsometryElement<Scalar>& g) {
  using std::atan2;
  using std::fmod;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar alpha = atan2(g.c(), g.a());
  Scalar anchor = fmod(alpha, pi);
  if (anchor < Scalar(0)) anchor += pi;
  if (anchor >= pi) anchor -= pi;
  return CircleLift<Scalar>(g, anchor);
}

template <typename Scalar>
Scalar lift_eval(const CircleLift<Scalar>& L, Scalar theta) {
  return L(theta);
}

/// Composition of lifts as maps of the line: (f * g)(theta) = f(g(theta)).
template <typename Scalar>
CircleLift<Scalar> operator*(const CircleLift<Scalar>& f, const CircleLift<Scalar>& g) {
  return CircleLift<Scalar>(f.base() * g.base(), f(g.anchor()));
}

/// The inverse map of the line.
template <typename Scalar>
CircleLift<Scalar> inverse(const CircleLift<Scalar>& f) {
  // c is some lift of base^{-1}; the inverse of f is c minus c(f(0)).
  CircleLift<Scalar> c = lift(f.base().inverse());
  return CircleLift<Scalar>(c.base(), c.anchor() - c(f.anchor()));
}

// ---------------------------------------------------------------------------
// Text format: four whitespace-separated numbers in row-major order.

template <typename Scalar>
std::string format_matrix(const IsometryElement<Scalar>& g) {
  std::ostringstream os;
  os << std::setprecision(17) << g.a() << ' ' << g.b() << ' ' << g.c() << ' ' << g.d();
  return os.str();
}

template <typename Scalar>
IsometryElement<Scalar> parse_matrix(const std::string& text) {
  std::istringstream is(text);
  Scalar v[4];
  for (auto& x : v) {
    if (!(is >> x)) throw DomainError(ErrorKind::ParseError, "expected four numbers: '" + text + "'");
  }
  std::string extra;
  if (is >> extra) throw DomainError(ErrorKind::ParseError, "trailing token '" + extra + "' in matrix literal");
  return IsometryElement<Scalar>(v[0], v[1], v[2], v[3]);
}

}  // namespace hypsurf

#endif  // HYPSURF_ISOM2_HPP
