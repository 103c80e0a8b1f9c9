#pragma once

#include <string>
#include <vector>

#include "lorsim/minkowski.hpp"
#include "lorsim/split_quaternion.hpp"

namespace lorsim {

enum class ParamKind { Arbitrary, ArcLength, SphericalArcLength };

const char* param_kind_name(ParamKind k);
ParamKind param_kind_from_name(const std::string& name);

// Discretized curve: a strictly increasing parameter grid, sample points, and
// optional analytic derivative channels d1..d3 (each empty or one vector per
// node). Operations prefer analytic channels and fall back to finite
// differences.
struct CurveSamples {
  ParamKind param_kind = ParamKind::Arbitrary;
  std::vector<double> params;
  std::vector<Vec3> points;
  std::vector<Vec3> d1, d2, d3;

  std::size_t size() const { return params.size(); }
  bool has_derivatives() const { return !d1.empty() && !d2.empty() && !d3.empty(); }

  /// Structural checks (monotone grid, consistent channel lengths). Throws
  /// InvalidArgument on malformed data.
  void validate() const;
};

struct Tolerances {
  double lightlike = 1e-8;        // relative floor for tangent norms
  double curvature_floor = 1e-10;
  double match_threshold = 1e-3;  // p-shape distance gate for registration
};

// Per-node derivative of the given order (1..3). Uses the analytic channel
// when present, else 5-point finite-difference stencils (centered in the
// interior, one-sided at the boundary). Requires n >= 7.
std::vector<Vec3> derivatives(const CurveSamples& c, int order);

// Arc length grid s(t) with s(t0) = 0, by composite quadrature of the tangent
// norm. Throws LightlikeTangent when the tangent norm dips below
// tol.lightlike times its maximum.
std::vector<double> arc_length(const CurveSamples& c, const Tolerances& tol = {});

// Spherical arc length sigma = integral of kappa ds for a supplied curvature
// grid; sigma(t0) = 0. Throws VanishingCurvature when min kappa <=
// tol.curvature_floor.
std::vector<double> spherical_arc_length(const CurveSamples& c,
                                         const std::vector<double>& kappa,
                                         const Tolerances& tol = {});

/// Pointwise curvature kappa = |d1 x d2| / |d1|^3 (parameter-invariant form).
std::vector<double> curvature_grid(const CurveSamples& c, const Tolerances& tol = {});

// Resample onto a uniform grid of n nodes in the target parameter. Positions
// and d1/d2 interpolate with cubic Hermite (using the next derivative channel
// as slope data), d3 with local cubics; derivative channels are converted to
// the new parameter by the chain rule.
CurveSamples resample(const CurveSamples& c, ParamKind target, std::size_t n,
                      const Tolerances& tol = {});

// Common causal character of the tangent along the curve. Throws
// LightlikeTangent if the tangent is null anywhere and CharacterChange if the
// character is not constant.
CausalCharacter curve_causal_character(const CurveSamples& c, double tol = 1e-10);

/// Image of the curve under a similarity; derivative channels get the linear
/// part.
CurveSamples transform_curve(const CurveSamples& c, const PSimilarity& f);

}  // namespace lorsim
