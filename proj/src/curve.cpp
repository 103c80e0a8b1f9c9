#include "lorsim/curve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>

#include "lorsim/errors.hpp"
#include "lorsim/numerics.hpp"

namespace lorsim {

const char* param_kind_name(ParamKind k) {
  switch (k) {
    case ParamKind::Arbitrary: return "arbitrary";
    case ParamKind::ArcLength: return "arclength";
    case ParamKind::SphericalArcLength: return "spherical";
  }
  return "?";
}

ParamKind param_kind_from_name(const std::string& name) {
  if (name == "arbitrary") return ParamKind::Arbitrary;
  if (name == "arclength") return ParamKind::ArcLength;
  if (name == "spherical") return ParamKind::SphericalArcLength;
  throw GeometryError(Err::InvalidArgument, "unknown param_kind: " + name);
}

void CurveSamples::validate() const {
  const std::size_t n = params.size();
  if (points.size() != n)
    throw GeometryError(Err::InvalidArgument, "points/params size mismatch");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(params[i] < params[i + 1]))
      throw GeometryError(Err::InvalidArgument, "parameter grid is not strictly increasing");
  for (const auto* ch : {&d1, &d2, &d3})
    if (!ch->empty() && ch->size() != n)
      throw GeometryError(Err::InvalidArgument, "derivative channel length mismatch");
}

namespace {

// Finite differences applied componentwise to a vector channel.
std::vector<Vec3> fd_channel(const std::vector<double>& params,
                             const std::vector<Vec3>& values, int order) {
  const std::size_t n = params.size();
  std::vector<double> comp(n);
  std::vector<Vec3> out(n);
  for (int axis = 0; axis < 3; ++axis) {
    for (std::size_t i = 0; i < n; ++i) comp[i] = values[i][axis];
    const auto d = fd_derivative(params, comp, order);
    for (std::size_t i = 0; i < n; ++i) out[i][axis] = d[i];
  }
  return out;
}

}  // namespace

std::vector<Vec3> derivatives(const CurveSamples& c, int order) {
  c.validate();
  if (order < 1 || order > 3)
    throw GeometryError(Err::InvalidArgument, "derivative order must be 1..3");
  if (c.size() < 7)
    throw GeometryError(Err::GridTooCoarse, "need at least 7 samples");
  if (order == 1 && !c.d1.empty()) return c.d1;
  if (order == 2 && !c.d2.empty()) return c.d2;
  if (order == 3 && !c.d3.empty()) return c.d3;
  return fd_channel(c.params, c.points, order);
}

std::vector<double> arc_length(const CurveSamples& c, const Tolerances& tol) {
  const auto d1 = derivatives(c, 1);
  std::vector<double> speed(c.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    speed[i] = norm(d1[i]);
    peak = std::max(peak, speed[i]);
  }
  for (double v : speed)
    if (v <= tol.lightlike * peak)
      throw GeometryError(Err::LightlikeTangent, "tangent is lightlike on the grid");
  return cumulative_integral(c.params, speed);
}

std::vector<double> curvature_grid(const CurveSamples& c, const Tolerances& tol) {
  const auto d1 = derivatives(c, 1);
  const auto d2 = derivatives(c, 2);
  std::vector<double> speed(c.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    speed[i] = norm(d1[i]);
    peak = std::max(peak, speed[i]);
  }
  std::vector<double> kappa(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (speed[i] <= tol.lightlike * peak)
      throw GeometryError(Err::LightlikeTangent, "tangent is lightlike on the grid");
    kappa[i] = norm(cross(d1[i], d2[i])) / (speed[i] * speed[i] * speed[i]);
  }
  return kappa;
}

std::vector<double> spherical_arc_length(const CurveSamples& c,
                                         const std::vector<double>& kappa,
                                         const Tolerances& tol) {
  if (kappa.size() != c.size())
    throw GeometryError(Err::InvalidArgument, "kappa grid size mismatch");
  const double kmin = *std::min_element(kappa.begin(), kappa.end());
  if (kmin <= tol.curvature_floor)
    throw GeometryError(Err::VanishingCurvature, "curvature reaches the floor");
  const auto d1 = derivatives(c, 1);
  std::vector<double> rate(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) rate[i] = kappa[i] * norm(d1[i]);
  return cumulative_integral(c.params, rate);
}

namespace {

struct ParamMap {
  std::vector<double> g;   // target parameter at the source nodes
  std::vector<double> dg;  // dg/dt at the source nodes
};

ParamMap target_map(const CurveSamples& c, ParamKind target, const Tolerances& tol) {
  ParamMap out;
  const std::size_t n = c.size();
  switch (target) {
    case ParamKind::Arbitrary:
      out.g = c.params;
      out.dg.assign(n, 1.0);
      break;
    case ParamKind::ArcLength: {
      out.g = arc_length(c, tol);
      const auto d1 = derivatives(c, 1);
      out.dg.resize(n);
      for (std::size_t i = 0; i < n; ++i) out.dg[i] = norm(d1[i]);
      break;
    }
    case ParamKind::SphericalArcLength: {
      const auto kappa = curvature_grid(c, tol);
      out.g = spherical_arc_length(c, kappa, tol);
      const auto d1 = derivatives(c, 1);
      out.dg.resize(n);
      for (std::size_t i = 0; i < n; ++i) out.dg[i] = kappa[i] * norm(d1[i]);
      break;
    }
  }
  return out;
}

double eval_hermite_vec(const std::vector<double>& x, const std::vector<Vec3>& f,
                        const std::vector<Vec3>& df, int axis, double t) {
  const std::size_t i = bracket(x, t);
  const double xs[2] = {x[i], x[i + 1]};
  const double fs[2] = {f[i][axis], f[i + 1][axis]};
  const double ds[2] = {df[i][axis], df[i + 1][axis]};
  return hermite_eval(xs, fs, ds, t);
}

}  // namespace

CurveSamples resample(const CurveSamples& c, ParamKind target, std::size_t n,
                      const Tolerances& tol) {
  if (n < 7) throw GeometryError(Err::GridTooCoarse, "resample needs n >= 7");
  const auto d1 = derivatives(c, 1);
  const auto d2 = derivatives(c, 2);
  const auto d3 = derivatives(c, 3);
  const auto map = target_map(c, target, tol);

  // Second and third derivative of the parameter map, for the chain rule.
  const auto ddg = fd_derivative(c.params, map.dg, 1);
  const auto dddg = fd_derivative(c.params, map.dg, 2);

  CurveSamples out;
  out.param_kind = target;
  out.params.resize(n);
  out.points.resize(n);
  out.d1.resize(n);
  out.d2.resize(n);
  out.d3.resize(n);

  std::array<std::vector<double>, 3> d3_cols;
  for (int axis = 0; axis < 3; ++axis) {
    d3_cols[axis].resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) d3_cols[axis][i] = d3[i][axis];
  }

  const double u0 = map.g.front();
  const double u1 = map.g.back();
  for (std::size_t j = 0; j < n; ++j) {
    const double u = u0 + (u1 - u0) * static_cast<double>(j) / static_cast<double>(n - 1);
    const double t = invert_monotone(c.params, map.g, map.dg, u);
    out.params[j] = u;

    Vec3 p, v1, v2, v3;
    for (int axis = 0; axis < 3; ++axis) {
      p[axis] = eval_hermite_vec(c.params, c.points, d1, axis, t);
      v1[axis] = eval_hermite_vec(c.params, d1, d2, axis, t);
      v2[axis] = eval_hermite_vec(c.params, d2, d3, axis, t);
      v3[axis] = lagrange_eval(c.params, d3_cols[axis], t);
    }
    const double du = lagrange_eval(c.params, map.dg, t, 5);
    const double ddu = lagrange_eval(c.params, ddg, t, 5);
    const double dddu = lagrange_eval(c.params, dddg, t, 5);

    out.points[j] = p;
    out.d1[j] = v1 / du;
    out.d2[j] = (v2 * du - v1 * ddu) / (du * du * du);
    out.d3[j] = (v3 * (du * du) - v2 * (3.0 * du * ddu) +
                 v1 * (3.0 * ddu * ddu - du * dddu)) /
                (du * du * du * du * du);
  }
  return out;
}

CausalCharacter curve_causal_character(const CurveSamples& c, double tol) {
  const auto d1 = derivatives(c, 1);
  bool any_time = false;
  bool any_space = false;
  for (const auto& v : d1) {
    switch (causal_character(v, tol)) {
      case CausalCharacter::Lightlike:
        throw GeometryError(Err::LightlikeTangent, "tangent is lightlike on the grid");
      case CausalCharacter::Timelike: any_time = true; break;
      case CausalCharacter::Spacelike: any_space = true; break;
    }
  }
  if (any_time && any_space)
    throw GeometryError(Err::CharacterChange,
                        "tangent causal character changes along the curve");
  return any_time ? CausalCharacter::Timelike : CausalCharacter::Spacelike;
}

CurveSamples transform_curve(const CurveSamples& c, const PSimilarity& f) {
  c.validate();
  CurveSamples out;
  out.param_kind = c.param_kind;
  out.params = c.params;
  out.points.reserve(c.size());
  for (const auto& p : c.points) out.points.push_back(f.apply(p));
  auto map_linear = [&f](const std::vector<Vec3>& ch) {
    std::vector<Vec3> r;
    r.reserve(ch.size());
    for (const auto& v : ch) r.push_back(f.apply_linear(v));
    return r;
  };
  out.d1 = map_linear(c.d1);
  out.d2 = map_linear(c.d2);
  out.d3 = map_linear(c.d3);
  return out;
}

}  // namespace lorsim
