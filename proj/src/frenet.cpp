#include "lorsim/frenet.hpp"

#include <algorithm>
#include <cmath>

#include "lorsim/errors.hpp"
#include "lorsim/numerics.hpp"

namespace lorsim {

const char* causal_case_name(CausalCase c) {
  switch (c) {
    case CausalCase::TimelikeT: return "timelike-t";
    case CausalCase::TimelikeC: return "timelike-c";
    case CausalCase::TimelikeQ: return "timelike-q";
  }
  return "?";
}

CausalCase causal_case_from_name(const std::string& name) {
  if (name == "timelike-t") return CausalCase::TimelikeT;
  if (name == "timelike-c") return CausalCase::TimelikeC;
  if (name == "timelike-q") return CausalCase::TimelikeQ;
  throw GeometryError(Err::InvalidArgument, "unknown causal case: " + name);
}

CausalCase FrenetData::causal_case() const {
  if (eps1 < 0.0) return CausalCase::TimelikeC;
  if (eps2 < 0.0) return CausalCase::TimelikeT;
  return CausalCase::TimelikeQ;
}

FrenetData frenet_apparatus(const CurveSamples& c, const Tolerances& tol) {
  const auto da = derivatives(c, 1);
  const auto dda = derivatives(c, 2);
  const auto ddda = derivatives(c, 3);
  const std::size_t n = c.size();

  FrenetData fd;
  fd.params = c.params;
  fd.tangent_character = curve_causal_character(c);
  fd.s = arc_length(c, tol);
  fd.kappa.resize(n);
  fd.tau.resize(n);
  fd.e1.resize(n);
  fd.e2.resize(n);
  fd.e3.resize(n);

  const double eps1 = fd.tangent_character == CausalCharacter::Timelike ? -1.0 : 1.0;
  double eps2 = 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    const double speed = norm(da[i]);
    const Vec3 e1 = da[i] / speed;

    // Lorentz-orthogonal part of the second derivative; its direction is the
    // principal normal for any parametrization.
    const Vec3 perp = dda[i] - e1 * (eps1 * inner(dda[i], e1));
    const double kappa = norm(cross(da[i], dda[i])) / (speed * speed * speed);
    if (kappa <= tol.curvature_floor)
      throw GeometryError(Err::VanishingCurvature, "curvature reaches the floor");

    const double perp_norm = norm(perp);
    if (perp_norm <= tol.lightlike * euclidean_norm(perp))
      throw GeometryError(Err::LightlikeNormal,
                          "principal normal is lightlike; Frenet frame undefined");
    const Vec3 e2 = perp / perp_norm;
    const double e2_sign = inner(e2, e2) < 0.0 ? -1.0 : 1.0;
    if (i == 0)
      eps2 = e2_sign;
    else if (e2_sign != eps2)
      throw GeometryError(Err::CharacterChange,
                          "principal normal causal character changes");

    const double eps3 = -eps1 * eps2;
    const Vec3 e3 = cross(e1, e2) * (-eps3);

    const double denom = norm(cross(da[i], dda[i]));
    fd.kappa[i] = kappa;
    fd.tau[i] = -det3(da[i], dda[i], ddda[i]) / (denom * denom);
    fd.e1[i] = e1;
    fd.e2[i] = e2;
    fd.e3[i] = e3;
  }

  fd.eps1 = eps1;
  fd.eps2 = eps2;
  fd.eps3 = -eps1 * eps2;

  fd.sigma = spherical_arc_length(c, fd.kappa, tol);
  // A curve already parametrized by spherical arc length keeps its own
  // sigma origin; anything else starts at 0.
  if (c.param_kind == ParamKind::SphericalArcLength) {
    const double origin = c.params.front();
    for (double& s : fd.sigma) s += origin;
  }
  return fd;
}

FrenetResidual frenet_residual(const FrenetData& fd) {
  const std::size_t n = fd.size();
  FrenetResidual out;
  double flipped = 0.0;

  // Numerical d(e_i)/ds against the Frenet-Serret right-hand side.
  std::vector<double> col(n);
  std::vector<Vec3> de[3];
  const std::vector<Vec3>* frames[3] = {&fd.e1, &fd.e2, &fd.e3};
  for (int r = 0; r < 3; ++r) {
    de[r].resize(n);
    for (int axis = 0; axis < 3; ++axis) {
      for (std::size_t i = 0; i < n; ++i) col[i] = (*frames[r])[i][axis];
      const auto d = fd_derivative(fd.s, col, 1);
      for (std::size_t i = 0; i < n; ++i) de[r][i][axis] = d[i];
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const double k = fd.kappa[i];
    const double t = fd.tau[i];
    const Vec3 rhs[3] = {fd.e2[i] * k,
                         fd.e1[i] * (fd.eps3 * k) + fd.e3[i] * t,
                         fd.e2[i] * (fd.eps1 * t)};
    const Vec3 rhs_flip[3] = {fd.e2[i] * k,
                              fd.e1[i] * (fd.eps3 * k) - fd.e3[i] * t,
                              fd.e2[i] * (-fd.eps1 * t)};
    for (int r = 0; r < 3; ++r) {
      const double dev = euclidean_norm(de[r][i] - rhs[r]);
      out.row_residual[r] = std::max(out.row_residual[r], dev);
      flipped = std::max(flipped, euclidean_norm(de[r][i] - rhs_flip[r]));
    }
  }
  out.max_residual = std::max({out.row_residual[0], out.row_residual[1], out.row_residual[2]});
  out.flipped_tau_residual = flipped;
  out.convention_matched = out.max_residual < 0.1 * std::max(flipped, 1e-300);
  return out;
}

SabbanData sabban_frame(const CurveSamples& curve, double sphere_tol,
                        double speed_tol) {
  const std::size_t n = curve.size();
  const auto d1 = derivatives(curve, 1);
  const auto d2 = derivatives(curve, 2);

  // The samples must sit on one of the unit spheres...
  bool on_lorentzian = true;
  bool on_hyperbolic = true;
  for (const auto& p : curve.points) {
    const double q = inner(p, p);
    if (std::fabs(q - 1.0) > sphere_tol) on_lorentzian = false;
    if (std::fabs(q + 1.0) > sphere_tol) on_hyperbolic = false;
  }
  if (!on_lorentzian && !on_hyperbolic)
    throw GeometryError(Err::NotOnSphere, "samples are not on a unit sphere");

  // ...and be parametrized by their own arc length.
  for (const auto& v : d1)
    if (std::fabs(norm(v) - 1.0) > speed_tol)
      throw GeometryError(Err::NotUnitSpeed, "curve is not unit speed");

  SabbanData sd;
  sd.sigma = curve.params;
  sd.c = curve.points;
  sd.t = d1;
  sd.q.resize(n);
  sd.kg.resize(n);

  sd.eps_c = on_lorentzian ? 1.0 : -1.0;
  const double t_sq = inner(d1.front(), d1.front());
  sd.eps_t = t_sq < 0.0 ? -1.0 : 1.0;
  sd.eps_q = -sd.eps_c * sd.eps_t;
  if (sd.eps_t < 0.0)
    sd.timelike_member = CausalCase::TimelikeT;
  else if (sd.eps_c < 0.0)
    sd.timelike_member = CausalCase::TimelikeC;
  else
    sd.timelike_member = CausalCase::TimelikeQ;

  for (std::size_t i = 0; i < n; ++i) {
    sd.q[i] = cross(sd.c[i], sd.t[i]);
    // Triple-product sign matches the torsion convention in frenet_apparatus.
    sd.kg[i] = -sd.eps_q * det3(sd.c[i], sd.t[i], d2[i]);
  }

  // Residual of the frame system c' = t, t' = eps_q c - kg q, q' = -eps_c kg t.
  std::vector<double> col(n);
  std::vector<Vec3> dq(n);
  for (int axis = 0; axis < 3; ++axis) {
    for (std::size_t i = 0; i < n; ++i) col[i] = sd.q[i][axis];
    const auto d = fd_derivative(curve.params, col, 1);
    for (std::size_t i = 0; i < n; ++i) dq[i][axis] = d[i];
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst, euclidean_norm(d1[i] - sd.t[i]));
    worst = std::max(worst, euclidean_norm(d2[i] - (sd.c[i] * sd.eps_q - sd.q[i] * sd.kg[i])));
    worst = std::max(worst, euclidean_norm(dq[i] - sd.t[i] * (-sd.eps_c * sd.kg[i])));
  }
  sd.max_system_residual = worst;
  return sd;
}

}  // namespace lorsim
