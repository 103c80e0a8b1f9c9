#include "lorsim/minkowski.hpp"

#include <algorithm>
#include <cmath>

namespace lorsim {

double norm(const Vec3& x) { return std::sqrt(std::fabs(inner(x, x))); }

double euclidean_norm(const Vec3& x) {
  return std::sqrt(x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2);
}

Vec3 cross(const Vec3& x, const Vec3& y) {
  return {-(x.x1 * y.x2 - x.x2 * y.x1),
          x.x2 * y.x0 - x.x0 * y.x2,
          x.x0 * y.x1 - x.x1 * y.x0};
}

double det3(const Vec3& x, const Vec3& y, const Vec3& z) {
  return x.x0 * (y.x1 * z.x2 - y.x2 * z.x1) -
         x.x1 * (y.x0 * z.x2 - y.x2 * z.x0) +
         x.x2 * (y.x0 * z.x1 - y.x1 * z.x0);
}

const char* causal_character_name(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Lightlike: return "lightlike";
  }
  return "?";
}

CausalCharacter causal_character(const Vec3& x, double tol) {
  const double q = inner(x, x);
  const double e2 = x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2;
  if (e2 == 0.0) return CausalCharacter::Spacelike;  // zero vector counts as spacelike
  if (std::fabs(q) <= tol * (1.0 + e2)) return CausalCharacter::Lightlike;
  return q < 0.0 ? CausalCharacter::Timelike : CausalCharacter::Spacelike;
}

AngleResult angle_between(const Vec3& x, const Vec3& y) {
  AngleResult out;
  const CausalCharacter cx = causal_character(x);
  const CausalCharacter cy = causal_character(y);
  if (cx == CausalCharacter::Lightlike || cy == CausalCharacter::Lightlike) {
    out.status = AngleStatus::NullInput;
    return out;
  }
  const double nx = norm(x);
  const double ny = norm(y);
  const double ip = inner(x, y);
  const double prod = nx * ny;

  if (cx == CausalCharacter::Timelike && cy == CausalCharacter::Timelike) {
    if (x.x0 * y.x0 <= 0.0) {
      out.status = AngleStatus::OppositeOrientation;
      return out;
    }
    out.kind = AngleKind::Hyperbolic;
    out.value = std::acosh(std::max(1.0, -ip / prod));
    return out;
  }
  if (cx == CausalCharacter::Spacelike && cy == CausalCharacter::Spacelike) {
    const double r = std::fabs(ip) / prod;
    if (std::fabs(r - 1.0) <= 1e-12) {
      // |x.y| = |x||y| splits into parallel vectors (angle 0 or pi) and
      // genuinely degenerate pairs whose cross product is lightlike.
      const double parallel_tol =
          1e-9 * euclidean_norm(x) * euclidean_norm(y);
      if (euclidean_norm(cross(x, y)) <= parallel_tol) {
        out.kind = AngleKind::Circular;
        out.value = ip > 0.0 ? 0.0 : M_PI;
        return out;
      }
      out.status = AngleStatus::DegeneratePair;
      return out;
    }
    if (r < 1.0) {
      out.kind = AngleKind::Circular;
      out.value = std::acos(std::clamp(ip / prod, -1.0, 1.0));
    } else {
      out.kind = AngleKind::Hyperbolic;
      out.value = std::acosh(r);
    }
    return out;
  }
  out.status = AngleStatus::MixedCausality;
  return out;
}

SphereCheck on_unit_sphere(const Vec3& x, UnitSphere which, double tol) {
  SphereCheck out;
  const double q = inner(x, x);
  if (which == UnitSphere::Hyperbolic) {
    out.on = std::fabs(q + 1.0) <= tol;
    if (out.on) out.sheet = x.x0 > 0.0 ? SphereSheet::Future : SphereSheet::Past;
  } else {
    out.on = std::fabs(q - 1.0) <= tol;
  }
  return out;
}

Mat3 Mat3::identity() {
  Mat3 r;
  r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
  return r;
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    r.m[i][0] = c0[i];
    r.m[i][1] = c1[i];
    r.m[i][2] = c2[i];
  }
  return r;
}

Vec3 Mat3::apply(const Vec3& v) const {
  Vec3 out;
  for (int i = 0; i < 3; ++i)
    out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return out;
}

Mat3 Mat3::multiply(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

Mat3 Mat3::transposed() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

double Mat3::det() const {
  return det3({m[0][0], m[1][0], m[2][0]},
              {m[0][1], m[1][1], m[2][1]},
              {m[0][2], m[1][2], m[2][2]});
}

double pseudo_orthogonality_defect(const Mat3& r) {
  const double eta[3] = {-1.0, 1.0, 1.0};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += r.m[k][i] * eta[k] * r.m[k][j];
      const double want = i == j ? eta[i] : 0.0;
      worst = std::max(worst, std::fabs(s - want));
    }
  return worst;
}

}  // namespace lorsim
