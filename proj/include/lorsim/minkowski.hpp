#pragma once

#include <array>
#include <cstdint>

namespace lorsim {

// 3-vector in Minkowski 3-space with the metric diag(-1, 1, 1); x0 is the
// timelike coordinate.
struct Vec3 {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  Vec3() = default;
  Vec3(double a, double b, double c) : x0(a), x1(b), x2(c) {}

  double operator[](int i) const { return i == 0 ? x0 : (i == 1 ? x1 : x2); }
  double& operator[](int i) { return i == 0 ? x0 : (i == 1 ? x1 : x2); }

  Vec3 operator+(const Vec3& o) const { return {x0 + o.x0, x1 + o.x1, x2 + o.x2}; }
  Vec3 operator-(const Vec3& o) const { return {x0 - o.x0, x1 - o.x1, x2 - o.x2}; }
  Vec3 operator-() const { return {-x0, -x1, -x2}; }
  Vec3 operator*(double s) const { return {x0 * s, x1 * s, x2 * s}; }
  Vec3 operator/(double s) const { return {x0 / s, x1 / s, x2 / s}; }
  Vec3& operator+=(const Vec3& o) { x0 += o.x0; x1 += o.x1; x2 += o.x2; return *this; }
  Vec3& operator-=(const Vec3& o) { x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Lorentzian inner product -x0*y0 + x1*y1 + x2*y2.
inline double inner(const Vec3& x, const Vec3& y) {
  return -x.x0 * y.x0 + x.x1 * y.x1 + x.x2 * y.x2;
}

/// sqrt(|inner(x,x)|); zero exactly on the light cone.
double norm(const Vec3& x);

/// Ordinary Euclidean length, used for error metrics and tolerance scaling.
double euclidean_norm(const Vec3& x);

// Lorentzian vector product. Component layout comes from expanding the
// defining determinant with first row (-i, j, k); it satisfies
// inner(cross(x,y), z) = det3(x,y,z) and is Lorentz-orthogonal to both
// arguments.
Vec3 cross(const Vec3& x, const Vec3& y);

/// Plain component determinant det[x; y; z].
double det3(const Vec3& x, const Vec3& y, const Vec3& z);

enum class CausalCharacter { Timelike, Spacelike, Lightlike };

const char* causal_character_name(CausalCharacter c);

// Classification by the sign of inner(x,x) with a relative tolerance band
// |x.x| <= tol*(1 + euclidean_norm(x)^2) for the lightlike verdict. The zero
// vector classifies as spacelike.
CausalCharacter causal_character(const Vec3& x, double tol = 1e-10);

enum class AngleKind { Hyperbolic, Circular, Undefined };

enum class AngleStatus {
  Ok,
  NullInput,            // an argument is lightlike or zero
  MixedCausality,       // one timelike, one spacelike: no angle defined
  OppositeOrientation,  // timelike pair pointing into opposite cones
  DegeneratePair,       // spacelike pair with |x.y| = ||x|| ||y||
};

struct AngleResult {
  double value = 0.0;
  AngleKind kind = AngleKind::Undefined;
  AngleStatus status = AngleStatus::Ok;
};

// Angle between two non-null vectors. Timelike pairs in the same cone get a
// hyperbolic angle from cosh(theta) = -inner/(|x||y|); spacelike pairs get a
// circular angle when |inner| < |x||y| and a hyperbolic one when
// |inner| > |x||y|. Every uncovered configuration reports kind Undefined with
// the reason in status.
AngleResult angle_between(const Vec3& x, const Vec3& y);

enum class UnitSphere { Hyperbolic, Lorentzian };

enum class SphereSheet { Future, Past, None };

struct SphereCheck {
  bool on = false;
  SphereSheet sheet = SphereSheet::None;  // set for the hyperbolic sphere
};

/// Membership test for the unit spheres {x.x = -1} (Hyperbolic) and
/// {x.x = +1} (Lorentzian); hyperbolic hits also report the sheet (x0 > 0 is
/// future).
SphereCheck on_unit_sphere(const Vec3& x, UnitSphere which, double tol = 1e-10);

// Small dense 3x3 matrix acting on Vec3, row-major.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};

  static Mat3 identity();
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

  Vec3 apply(const Vec3& v) const;
  Mat3 multiply(const Mat3& o) const;
  Mat3 transposed() const;
  double det() const;

  double operator()(int r, int c) const { return m[r][c]; }
  double& operator()(int r, int c) { return m[r][c]; }
};

/// Max-norm deviation of R^T I* R from I*, zero for pseudo-orthogonal maps.
double pseudo_orthogonality_defect(const Mat3& r);

}  // namespace lorsim
