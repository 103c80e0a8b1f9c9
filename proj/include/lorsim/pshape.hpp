#pragma once

#include <vector>

#include "lorsim/curve.hpp"
#include "lorsim/frenet.hpp"

namespace lorsim {

enum class PShapeSource { FromFrenet, FromDerivatives, Prescribed };

// The similarity-invariant signature of a non-lightlike curve: shape
// curvature kappa_tilde = -d(log kappa)/dsigma and shape torsion
// tau_tilde = tau/kappa, sampled against spherical arc length.
struct PShapeProfile {
  std::vector<double> sigma;
  std::vector<double> kappa_tilde;
  std::vector<double> tau_tilde;
  CausalCase causal_case = CausalCase::TimelikeT;
  PShapeSource source = PShapeSource::Prescribed;

  std::size_t size() const { return sigma.size(); }
};

/// Shape invariants from a Frenet apparatus (log-derivative route).
PShapeProfile pshape_from_frenet(const FrenetData& fd);

// Shape invariants straight from sigma-derivatives of a curve that is
// parametrized by spherical arc length:
//   kappa_tilde = (a'' . a') / (a' . a'),
//   tau_tilde   = -det3(a', a'', a''') |a'|^3 / |a' x a''|^3
// (triple-product sign as in frenet_apparatus). Throws DegenerateOsculating
// when |a' x a''| < 1e-10.
PShapeProfile pshape_from_derivatives(const CurveSamples& c);

// Focal data: osculating-sphere centers, focal curvatures, and radii.
// radius is the authoritative |gamma - alpha| (Minkowski norm); radius_formula
// evaluates sqrt(|eps2/kappa^2 + eps3 (kappa'/(kappa^2 tau))^2|) alongside.
struct FocalData {
  std::vector<double> m1, m2;
  std::vector<Vec3> center;
  std::vector<double> radius;
  std::vector<double> radius_formula;
};

/// Requires tau bounded away from zero (VanishingTorsion) and the curve's
/// sample points (taken from `points` evaluated on the same grid as fd).
FocalData focal_data(const FrenetData& fd, const std::vector<Vec3>& points);

// Residuals of the focal-curvature identities
//   kappa_tilde = eps1 eps2 m1',  tau_tilde = eps1 eps3 m1' m1 / m2
// over the grid ('= d/ds).
struct PropositionReport {
  double max_kappa_residual = 0.0;
  double max_tau_residual = 0.0;
};

PropositionReport proposition_check(const FrenetData& fd,
                                    const std::vector<Vec3>& points);

// Sup-norm distance between two profiles over their common sigma interval
// (cubic interpolation onto a shared grid), in the direct pairing and with
// the tau_tilde sign flipped. Throws NoOverlap when the common interval
// spans fewer than 3 nodes.
struct PShapeDistance {
  double direct = 0.0;
  double flipped = 0.0;
};

PShapeDistance pshape_distance(const PShapeProfile& p, const PShapeProfile& q);

}  // namespace lorsim
