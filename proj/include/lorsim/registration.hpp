#pragma once

#include <optional>

#include "lorsim/curve.hpp"
#include "lorsim/frenet.hpp"
#include "lorsim/pshape.hpp"
#include "lorsim/split_quaternion.hpp"

namespace lorsim {

// Frame-alignment sign pattern (s1, s2, s3) used to map the frame of the
// first curve onto the signed frame of the second at the anchor. Equal-shape
// pairs admit (+,+,+)/(-,-,-); pairs with flipped shape torsion admit
// (+,+,-)/(-,-,+).
enum class SignPattern { Direct, DirectNegated, BinormalFlip, BinormalFlipNegated };

const char* sign_pattern_name(SignPattern p);

struct MatchResult {
  double mu = 1.0;               // signed scale of the estimated map
  Mat3 linear;                   // full linear part (always set)
  Vec3 translation;
  std::optional<PSimilarity> f;  // set when quaternion extraction succeeded
  double residual = 0.0;         // max euclidean deviation on the common grid
  double mu_spread = 0.0;        // relative spread of per-node scale estimates
  Orientation orientation = Orientation::Preserving;
  SignPattern sign_pattern = SignPattern::Direct;
  PShapeDistance pshape_dist;

  Vec3 apply(const Vec3& p) const { return linear.apply(p) + translation; }
};

// Estimate the similarity mapping curve a onto curve b. Preconditions: equal
// tangent causal character (CausalMismatch) and shape profiles within
// tol.match_threshold in the direct or torsion-flipped pairing
// (PShapeMismatchError otherwise). The scale comes from a log-domain mean of
// the curvature ratio, the rotation from frame alignment at the mid-anchor of
// the common spherical-arc-length grid (all four admissible sign patterns are
// tried, lowest residual wins), and the translation closes the anchor.
MatchResult estimate_similarity(const CurveSamples& a, const CurveSamples& b,
                                const Tolerances& tol = {});

// Residual max_sigma |f(a(sigma)) - b(sigma)| over the common sigma grid,
// normalized by the euclidean diameter of b's samples on that range. Throws
// NoOverlap when the sigma ranges are disjoint.
double verify_match(const CurveSamples& a, const CurveSamples& b,
                    const PSimilarity& f, const Tolerances& tol = {});

struct SelfSimilarity {
  bool self_similar = false;
  double kappa_tilde = 0.0;  // mean shape curvature
  double tau_tilde = 0.0;    // mean shape torsion
};

/// True when both shape invariants are constant within tol (sup deviation
/// from their means); returns the means either way.
SelfSimilarity is_self_similar(const CurveSamples& a, double tol,
                               const Tolerances& num_tol = {});

}  // namespace lorsim
