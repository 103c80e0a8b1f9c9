#include "lorsim/pshape.hpp"

#include <algorithm>
#include <cmath>

#include "lorsim/errors.hpp"
#include "lorsim/numerics.hpp"

namespace lorsim {

PShapeProfile pshape_from_frenet(const FrenetData& fd) {
  const std::size_t n = fd.size();
  PShapeProfile p;
  p.sigma = fd.sigma;
  p.causal_case = fd.causal_case();
  p.source = PShapeSource::FromFrenet;
  p.kappa_tilde.resize(n);
  p.tau_tilde.resize(n);

  // -d(log kappa)/dsigma is better conditioned than -kappa'/kappa^2 when
  // kappa is small.
  std::vector<double> log_kappa(n);
  for (std::size_t i = 0; i < n; ++i) log_kappa[i] = std::log(fd.kappa[i]);
  const auto dlog = fd_derivative(fd.sigma, log_kappa, 1);
  for (std::size_t i = 0; i < n; ++i) {
    p.kappa_tilde[i] = -dlog[i];
    p.tau_tilde[i] = fd.tau[i] / fd.kappa[i];
    if (!std::isfinite(p.kappa_tilde[i]) || !std::isfinite(p.tau_tilde[i]))
      throw GeometryError(Err::VanishingCurvature, "shape invariants are not finite");
  }
  return p;
}

PShapeProfile pshape_from_derivatives(const CurveSamples& c) {
  if (c.param_kind != ParamKind::SphericalArcLength)
    throw GeometryError(Err::InvalidArgument,
                        "curve must be parametrized by spherical arc length");
  const auto d1 = derivatives(c, 1);
  const auto d2 = derivatives(c, 2);
  const auto d3 = derivatives(c, 3);
  const std::size_t n = c.size();

  PShapeProfile p;
  p.sigma = c.params;
  p.source = PShapeSource::FromDerivatives;
  p.kappa_tilde.resize(n);
  p.tau_tilde.resize(n);

  double eps1 = 0.0, eps2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double g11 = inner(d1[i], d1[i]);
    const Vec3 osc = cross(d1[i], d2[i]);
    const double osc_norm = norm(osc);
    if (osc_norm < 1e-10)
      throw GeometryError(Err::DegenerateOsculating,
                          "osculating plane is degenerate");
    p.kappa_tilde[i] = inner(d2[i], d1[i]) / g11;
    const double n1 = norm(d1[i]);
    p.tau_tilde[i] = -det3(d1[i], d2[i], d3[i]) * (n1 * n1 * n1) /
                     (osc_norm * osc_norm * osc_norm);
    if (i == 0) {
      eps1 = g11 < 0.0 ? -1.0 : 1.0;
      const Vec3 perp = d2[i] - d1[i] * (inner(d2[i], d1[i]) / g11);
      eps2 = inner(perp, perp) < 0.0 ? -1.0 : 1.0;
    }
  }
  if (eps1 < 0.0)
    p.causal_case = CausalCase::TimelikeC;
  else if (eps2 < 0.0)
    p.causal_case = CausalCase::TimelikeT;
  else
    p.causal_case = CausalCase::TimelikeQ;
  return p;
}

FocalData focal_data(const FrenetData& fd, const std::vector<Vec3>& points) {
  const std::size_t n = fd.size();
  if (points.size() != n)
    throw GeometryError(Err::InvalidArgument, "points/frenet size mismatch");
  for (double t : fd.tau)
    if (std::fabs(t) < 1e-10)
      throw GeometryError(Err::VanishingTorsion, "torsion reaches zero");

  FocalData out;
  out.m1.resize(n);
  out.m2.resize(n);
  out.center.resize(n);
  out.radius.resize(n);
  out.radius_formula.resize(n);

  const double e12 = fd.eps1 * fd.eps2;
  const double e13 = fd.eps1 * fd.eps3;
  std::vector<double> inv_kappa(n);
  for (std::size_t i = 0; i < n; ++i) inv_kappa[i] = 1.0 / fd.kappa[i];
  const auto dinv_kappa = fd_derivative(fd.s, inv_kappa, 1);
  const auto dkappa = fd_derivative(fd.s, fd.kappa, 1);

  for (std::size_t i = 0; i < n; ++i) {
    out.m1[i] = e12 / fd.kappa[i];
    out.m2[i] = e13 * dinv_kappa[i] / fd.tau[i];
    out.center[i] = points[i] + fd.e2[i] * out.m1[i] + fd.e3[i] * out.m2[i];
    out.radius[i] = norm(out.center[i] - points[i]);
    const double k = fd.kappa[i];
    const double term = dkappa[i] / (k * k * fd.tau[i]);
    out.radius_formula[i] =
        std::sqrt(std::fabs(fd.eps2 / (k * k) + fd.eps3 * term * term));
  }
  return out;
}

PropositionReport proposition_check(const FrenetData& fd,
                                    const std::vector<Vec3>& points) {
  const auto focal = focal_data(fd, points);
  const auto p = pshape_from_frenet(fd);
  const auto dm1 = fd_derivative(fd.s, focal.m1, 1);

  PropositionReport rep;
  for (std::size_t i = 0; i < fd.size(); ++i) {
    rep.max_kappa_residual = std::max(
        rep.max_kappa_residual,
        std::fabs(p.kappa_tilde[i] - fd.eps1 * fd.eps2 * dm1[i]));
    if (std::fabs(focal.m2[i]) < 1e-12) continue;  // identity is 0/0 here
    rep.max_tau_residual = std::max(
        rep.max_tau_residual,
        std::fabs(p.tau_tilde[i] -
                  fd.eps1 * fd.eps3 * dm1[i] * focal.m1[i] / focal.m2[i]));
  }
  return rep;
}

PShapeDistance pshape_distance(const PShapeProfile& p, const PShapeProfile& q) {
  const double lo = std::max(p.sigma.front(), q.sigma.front());
  const double hi = std::min(p.sigma.back(), q.sigma.back());

  // The common interval must span at least 3 nodes of each profile.
  auto nodes_within = [lo, hi](const std::vector<double>& grid) {
    std::size_t k = 0;
    for (double v : grid)
      if (v >= lo - 1e-15 && v <= hi + 1e-15) ++k;
    return k;
  };
  if (!(lo < hi) || nodes_within(p.sigma) < 3 || nodes_within(q.sigma) < 3)
    throw GeometryError(Err::NoOverlap, "sigma ranges do not overlap enough");

  const std::size_t n = std::max(p.size(), q.size());
  PShapeDistance out;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    const double pk = lagrange_eval(p.sigma, p.kappa_tilde, s);
    const double pt = lagrange_eval(p.sigma, p.tau_tilde, s);
    const double qk = lagrange_eval(q.sigma, q.kappa_tilde, s);
    const double qt = lagrange_eval(q.sigma, q.tau_tilde, s);
    out.direct = std::max(out.direct, std::fabs(pk - qk) + std::fabs(pt - qt));
    out.flipped = std::max(out.flipped, std::fabs(pk - qk) + std::fabs(pt + qt));
  }
  return out;
}

}  // namespace lorsim
