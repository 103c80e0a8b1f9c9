#pragma once

#include <cstdint>

#include "lorsim/minkowski.hpp"

namespace lorsim {

// Split quaternion over the basis {1, i, j, k} with i^2 = -1, j^2 = k^2 = +1,
// ij = -ji = k, jk = -kj = -i, ki = -ik = j. The quadratic form
// N(q) = w^2 + x^2 - y^2 - z^2 is multiplicative; unit timelike elements
// (N = 1) act as rotations of Minkowski 3-space by conjugation.
struct SplitQuaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  SplitQuaternion() = default;
  SplitQuaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static SplitQuaternion one() { return {1.0, 0.0, 0.0, 0.0}; }

  /// Pure split quaternion for a Minkowski vector under the identification
  /// (x0, x1, x2) -> x0*i + x1*j + x2*k (i carries the timelike direction).
  static SplitQuaternion pure(const Vec3& v) { return {0.0, v.x0, v.x1, v.x2}; }

  Vec3 imaginary() const { return {x, y, z}; }
};

SplitQuaternion sq_mul(const SplitQuaternion& p, const SplitQuaternion& q);
SplitQuaternion sq_conjugate(const SplitQuaternion& q);

/// N(q) = w^2 + x^2 - y^2 - z^2.
double sq_norm_form(const SplitQuaternion& q);

/// conjugate(q)/N(q); throws DegenerateQuaternion when |N| <= 1e-14.
SplitQuaternion sq_inverse(const SplitQuaternion& q);

/// Scale q to N(q) = 1. Requires N(q) > 0 (timelike); throws otherwise.
SplitQuaternion sq_normalized(const SplitQuaternion& q);

// Rotation r -> q r q^-1 on Minkowski vectors. Requires |N(q) - 1| <= 1e-8
// (NotUnitTimelike otherwise). Preserves inner products and causal
// characters; the scalar part of the conjugated pure quaternion stays zero.
Vec3 rotate(const SplitQuaternion& q, const Vec3& r);

/// The 3x3 matrix of rotate(q, .) in Minkowski coordinates.
Mat3 rotation_matrix(const SplitQuaternion& q);

// Extract a unit timelike split quaternion from a linear map known to be a
// conjugation rotation (pseudo-orthogonal, det +1, future-preserving).
// Throws QuaternionExtractionFailure when no such q reproduces the matrix
// within tolerance.
SplitQuaternion quaternion_from_rotation(const Mat3& r, double tol = 1e-6);

enum class Orientation { Preserving, Reversing };

const char* orientation_name(Orientation o);

// Similarity transformation p -> mu * (q p q^-1) + b of Minkowski 3-space.
// mu may be negative (orientation-reversing); |mu| is the similarity ratio.
struct PSimilarity {
  double mu = 1.0;
  SplitQuaternion q = SplitQuaternion::one();
  Vec3 b{0.0, 0.0, 0.0};

  static PSimilarity identity() { return {}; }

  Vec3 apply(const Vec3& p) const;
  /// Linear part only (translation dropped): mu * q p q^-1.
  Vec3 apply_linear(const Vec3& p) const;
  Mat3 linear_matrix() const;
  /// Sign of det of the linear part: mu^3 det(R_q) = mu^3.
  Orientation orientation() const;
};

PSimilarity compose(const PSimilarity& f, const PSimilarity& g);
PSimilarity inverse(const PSimilarity& f);

// Deterministic sampler for tests and harnesses: q unit timelike, mu uniform
// in [mu_min, mu_max], translation components uniform in [-1, 1].
PSimilarity random_psimilarity(std::uint64_t seed, double mu_min = 0.5,
                               double mu_max = 2.0);

}  // namespace lorsim
