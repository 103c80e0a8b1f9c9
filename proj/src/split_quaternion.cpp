#include "lorsim/split_quaternion.hpp"

#include <cmath>
#include <random>

#include "lorsim/errors.hpp"

namespace lorsim {

SplitQuaternion sq_mul(const SplitQuaternion& p, const SplitQuaternion& q) {
  // i^2 = -1, j^2 = k^2 = 1, ij = k, jk = -i, ki = j, anticommuting.
  return {p.w * q.w - p.x * q.x + p.y * q.y + p.z * q.z,
          p.w * q.x + p.x * q.w - p.y * q.z + p.z * q.y,
          p.w * q.y + p.y * q.w - p.x * q.z + p.z * q.x,
          p.w * q.z + p.z * q.w + p.x * q.y - p.y * q.x};
}

SplitQuaternion sq_conjugate(const SplitQuaternion& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

double sq_norm_form(const SplitQuaternion& q) {
  return q.w * q.w + q.x * q.x - q.y * q.y - q.z * q.z;
}

SplitQuaternion sq_inverse(const SplitQuaternion& q) {
  const double n = sq_norm_form(q);
  if (std::fabs(n) <= 1e-14)
    throw GeometryError(Err::DegenerateQuaternion,
                        "split quaternion has vanishing norm form");
  const SplitQuaternion c = sq_conjugate(q);
  return {c.w / n, c.x / n, c.y / n, c.z / n};
}

SplitQuaternion sq_normalized(const SplitQuaternion& q) {
  const double n = sq_norm_form(q);
  if (n <= 0.0)
    throw GeometryError(Err::NotUnitTimelike,
                        "split quaternion is not timelike (N <= 0)");
  const double s = 1.0 / std::sqrt(n);
  return {q.w * s, q.x * s, q.y * s, q.z * s};
}

Vec3 rotate(const SplitQuaternion& q, const Vec3& r) {
  if (std::fabs(sq_norm_form(q) - 1.0) > 1e-8)
    throw GeometryError(Err::NotUnitTimelike,
                        "rotation requires a unit timelike split quaternion");
  const SplitQuaternion out = sq_mul(sq_mul(q, SplitQuaternion::pure(r)), sq_inverse(q));
  return out.imaginary();
}

Mat3 rotation_matrix(const SplitQuaternion& q) {
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  Mat3 r;
  r(0, 0) = w * w + x * x + y * y + z * z;
  r(0, 1) = 2.0 * (w * z - x * y);
  r(0, 2) = -2.0 * (w * y + x * z);
  r(1, 0) = 2.0 * (w * z + x * y);
  r(1, 1) = w * w - x * x - y * y + z * z;
  r(1, 2) = -2.0 * (w * x + y * z);
  r(2, 0) = 2.0 * (x * z - w * y);
  r(2, 1) = 2.0 * (w * x - y * z);
  r(2, 2) = w * w - x * x + y * y - z * z;
  return r;
}

SplitQuaternion quaternion_from_rotation(const Mat3& r, double tol) {
  const double m00 = r(0, 0), m11 = r(1, 1), m22 = r(2, 2);
  // Squared components from the diagonal, bilinears from the off-diagonal.
  const double w2 = (m00 + m11 + m22 + 1.0) / 4.0;
  const double x2 = (m00 - m11 - m22 + 1.0) / 4.0;
  const double y2 = (m00 - m11 + m22 - 1.0) / 4.0;
  const double z2 = (m00 + m11 - m22 - 1.0) / 4.0;

  SplitQuaternion q;
  if (w2 >= x2 && w2 >= y2 && w2 >= z2 && w2 > 0.0) {
    q.w = std::sqrt(w2);
    q.x = (r(2, 1) - r(1, 2)) / (4.0 * q.w);
    q.y = -(r(0, 2) + r(2, 0)) / (4.0 * q.w);
    q.z = (r(1, 0) + r(0, 1)) / (4.0 * q.w);
  } else if (x2 >= y2 && x2 >= z2 && x2 > 0.0) {
    q.x = std::sqrt(x2);
    q.w = (r(2, 1) - r(1, 2)) / (4.0 * q.x);
    q.y = (r(1, 0) - r(0, 1)) / (4.0 * q.x);
    q.z = (r(2, 0) - r(0, 2)) / (4.0 * q.x);
  } else if (y2 >= z2 && y2 > 0.0) {
    q.y = std::sqrt(y2);
    q.w = -(r(0, 2) + r(2, 0)) / (4.0 * q.y);
    q.x = (r(1, 0) - r(0, 1)) / (4.0 * q.y);
    q.z = -(r(2, 1) + r(1, 2)) / (4.0 * q.y);
  } else if (z2 > 0.0) {
    q.z = std::sqrt(z2);
    q.w = (r(1, 0) + r(0, 1)) / (4.0 * q.z);
    q.x = (r(2, 0) - r(0, 2)) / (4.0 * q.z);
    q.y = -(r(2, 1) + r(1, 2)) / (4.0 * q.z);
  } else {
    throw GeometryError(Err::QuaternionExtractionFailure,
                        "rotation matrix has no dominant quaternion component");
  }

  const double n = sq_norm_form(q);
  if (n <= 0.0)
    throw GeometryError(Err::QuaternionExtractionFailure,
                        "extracted split quaternion is not timelike");
  q = sq_normalized(q);

  const Mat3 back = rotation_matrix(q);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst, std::fabs(back(i, j) - r(i, j)));
  if (worst > tol)
    throw GeometryError(Err::QuaternionExtractionFailure,
                        "linear map is not a split-quaternion conjugation");
  return q;
}

const char* orientation_name(Orientation o) {
  return o == Orientation::Preserving ? "preserving" : "reversing";
}

Vec3 PSimilarity::apply(const Vec3& p) const { return apply_linear(p) + b; }

Vec3 PSimilarity::apply_linear(const Vec3& p) const {
  return rotate(q, p) * mu;
}

Mat3 PSimilarity::linear_matrix() const {
  Mat3 r = rotation_matrix(q);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) *= mu;
  return r;
}

Orientation PSimilarity::orientation() const {
  return linear_matrix().det() > 0.0 ? Orientation::Preserving
                                     : Orientation::Reversing;
}

PSimilarity compose(const PSimilarity& f, const PSimilarity& g) {
  PSimilarity out;
  out.mu = f.mu * g.mu;
  out.q = sq_normalized(sq_mul(f.q, g.q));  // renormalize to control drift
  out.b = f.apply(g.b);
  return out;
}

PSimilarity inverse(const PSimilarity& f) {
  PSimilarity out;
  out.mu = 1.0 / f.mu;
  out.q = sq_inverse(sq_normalized(f.q));
  out.b = rotate(out.q, f.b) * (-out.mu);
  return out;
}

PSimilarity random_psimilarity(std::uint64_t seed, double mu_min, double mu_max) {
  if (!(mu_min > 0.0) || !(mu_max >= mu_min))
    throw GeometryError(Err::InvalidArgument,
                        "mu range must satisfy 0 < mu_min <= mu_max");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> mu_dist(mu_min, mu_max);

  SplitQuaternion q;
  do {
    q = {unit(rng), unit(rng), unit(rng), unit(rng)};
  } while (sq_norm_form(q) < 0.1);  // keep away from the null cone of N
  q = sq_normalized(q);

  PSimilarity f;
  f.mu = mu_dist(rng);
  f.q = q;
  f.b = {unit(rng), unit(rng), unit(rng)};
  return f;
}

}  // namespace lorsim
