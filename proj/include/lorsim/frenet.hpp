#pragma once

#include <string>
#include <vector>

#include "lorsim/curve.hpp"
#include "lorsim/minkowski.hpp"

namespace lorsim {

// Which slot of the moving frame carries the timelike vector. For a Frenet
// frame (e1, e2, e3) the slots correspond to (c, t, q) of the associated
// spherical frame, so eps2 = -1 maps to TimelikeT and so on.
enum class CausalCase { TimelikeT, TimelikeC, TimelikeQ };

const char* causal_case_name(CausalCase c);
CausalCase causal_case_from_name(const std::string& name);

// Frenet apparatus sampled on the curve's own grid: frame vectors, causal
// signs, curvature, torsion, and the arc-length / spherical-arc-length grids.
struct FrenetData {
  std::vector<double> params;      // the input grid
  std::vector<double> s;           // arc length, s[0] = 0
  std::vector<double> sigma;       // spherical arc length, sigma[0] = 0
  std::vector<double> kappa;       // > 0
  std::vector<double> tau;
  std::vector<Vec3> e1, e2, e3;
  double eps1 = 1.0, eps2 = 1.0, eps3 = 1.0;
  CausalCharacter tangent_character = CausalCharacter::Spacelike;

  std::size_t size() const { return params.size(); }
  CausalCase causal_case() const;
};

// Computes the Frenet apparatus of a non-lightlike curve with kappa > 0.
//
// Conventions (coupled; together they close the same Frenet-Serret matrix
//   d/ds [e1;e2;e3] = [[0,k,0],[eps3*k,0,tau],[0,eps1*tau,0]] [e1;e2;e3]
// for every causal type, and they are what frenet_residual verifies):
//   e1 = a'/|a'|, e2 = normalized Lorentz-orthogonal part of a'',
//   e3 = -eps3 * cross(e1, e2), tau = -det3(a', a'', a''') / |a' x a''|^2.
// Throws LightlikeTangent / CharacterChange / VanishingCurvature /
// LightlikeNormal.
FrenetData frenet_apparatus(const CurveSamples& c, const Tolerances& tol = {});

// Self-consistency diagnostic: max deviation of the numerical d(e_i)/ds from
// the Frenet-Serret right-hand side, per row and overall, plus the same
// residual with the torsion sign flipped (a large gap between the two pins
// the sign convention empirically).
struct FrenetResidual {
  double max_residual = 0.0;
  double row_residual[3] = {0.0, 0.0, 0.0};
  double flipped_tau_residual = 0.0;
  bool convention_matched = false;  // max_residual well below the flipped one
};

FrenetResidual frenet_residual(const FrenetData& fd);

// Moving frame (c, t = dc/dsigma, q = cross(c, t)) of a unit-speed curve on
// one of the unit spheres, with its geodesic curvature
// kg = -eps_q * det3(c, t, dt/dsigma) (triple-product sign matching the
// Frenet conventions above). max_system_residual reports how well the
// numerical frame derivatives satisfy
//   c' = t, t' = eps_q c - kg q, q' = -eps_c kg t.
struct SabbanData {
  std::vector<double> sigma;
  std::vector<Vec3> c, t, q;
  std::vector<double> kg;
  double eps_c = 1.0, eps_t = 1.0, eps_q = 1.0;
  CausalCase timelike_member = CausalCase::TimelikeT;
  double max_system_residual = 0.0;
};

SabbanData sabban_frame(const CurveSamples& curve, double sphere_tol = 1e-6,
                        double speed_tol = 1e-4);

}  // namespace lorsim
