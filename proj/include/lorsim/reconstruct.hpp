#pragma once

#include <functional>
#include <vector>

#include "lorsim/curve.hpp"
#include "lorsim/frenet.hpp"
#include "lorsim/minkowski.hpp"
#include "lorsim/pshape.hpp"

namespace lorsim {

// Prescribed shape invariants for curve construction: z1 is the target shape
// curvature, z2 the target shape torsion, both continuous on
// [sigma_start, sigma_end]. dz1 is d z1 / d sigma (used for the analytic
// third-derivative channel of the reconstructed curve).
struct PShapeSpec {
  std::function<double(double)> z1;
  std::function<double(double)> z2;
  std::function<double(double)> dz1;
  double sigma_start = 0.0;
  double sigma_end = 1.0;
  CausalCase causal_case = CausalCase::TimelikeT;

  static PShapeSpec constant(double kappa_tilde, double tau_tilde,
                             double sigma_start, double sigma_end,
                             CausalCase cc);
  /// The (1/sigma, a) shape; the range must exclude 0.
  static PShapeSpec reciprocal(double tau_tilde, double sigma_start,
                               double sigma_end, CausalCase cc);
  /// Cubic interpolation of a sampled profile (clamped at the ends).
  static PShapeSpec from_profile(const PShapeProfile& profile);
};

// Base point plus pseudo-orthonormal triad, the initial data of the frame
// integration. validate() checks the Gram matrix against the causal case and
// that e3 = cross(e1, e2) up to sign (CaseMismatch otherwise).
struct InitialFrame {
  Vec3 x0{0, 0, 0};
  Vec3 e1, e2, e3;

  void validate(CausalCase cc, double tol = 1e-10) const;
  /// Standard-basis frame with the timelike slot matching the case and
  /// e3 = cross(e1, e2).
  static InitialFrame standard(CausalCase cc);
};

/// Causal signs (eps_c, eps_t, eps_q) of the frame slots for a case.
void case_signs(CausalCase cc, double& eps_c, double& eps_t, double& eps_q);

// Frame-system coefficient matrix in the reference form
//   [[0,1,0],[1,0,z2],[0,z2,0]], [[0,-1,0],[-1,0,z2],[0,-z2,0]],
//   [[0,-1,0],[1,0,z2],[0,z2,0]]
// for the t/c/q-timelike cases; each satisfies M^t E + E M = 0 for the
// matching sign matrix E. The integrator itself uses the equivalent
// generator derived from t = dc/dsigma and q = cross(c, t), which reproduces
// the catalog curves sigma-forward (see integrate_sabban).
Mat3 sabban_matrix(CausalCase cc, double z2);

// Frame field from integrating c' = t, t' = eps_q c - eps_q z2 q,
// q' = -eps_c eps_q z2 t by classical RK4 with pseudo-Gram-Schmidt
// re-projection every 100 steps. max_gram_drift records the worst deviation
// of the frame Gram matrix from diag(eps_c, eps_t, eps_q) seen at any step
// before re-projection. Throws CaseMismatch / FrameDegenerate.
struct FrameField {
  std::vector<double> sigma;
  std::vector<Vec3> c, t, q;
  double max_gram_drift = 0.0;
};

FrameField integrate_sabban(const PShapeSpec& spec, const InitialFrame& init,
                            double step);

// Curve from prescribed shape invariants: position integrates
// b * e^{rho} c(sigma) with rho' = z1, rho(sigma_start) = 0, alongside the
// frame system (one RK4 state), so alpha(sigma_start) = x0. The result is
// parametrized by spherical arc length and carries analytic derivative
// channels; its recomputed shape invariants reproduce (z1, z2).
CurveSamples reconstruct_curve(const PShapeSpec& spec, const InitialFrame& init,
                               double b, double step);

}  // namespace lorsim
