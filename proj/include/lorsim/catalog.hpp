#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lorsim/curve.hpp"
#include "lorsim/minkowski.hpp"

namespace lorsim {

// Closed-form curve with analytic derivatives up to third order, sampled on
// demand. The catalog covers curves with constant shape invariants, the
// 1/sigma-shape curve, and the three pseudo-spherical generator curves.
struct AnalyticCurve {
  std::string name;
  std::map<std::string, double> constants;
  ParamKind native_param = ParamKind::SphericalArcLength;
  double default_start = 0.0;
  double default_end = 2.0;
  std::size_t default_n = 2001;
  std::function<void(double, Vec3&, Vec3&, Vec3&, Vec3&)> eval;

  CurveSamples sample(double start, double end, std::size_t n) const;
  CurveSamples sample() const { return sample(default_start, default_end, default_n); }
};

/// Names accepted by builtin(), in catalog order.
const std::vector<std::string>& catalog_names();

// Look up a catalog curve. Missing constants take the entry's defaults;
// throws UnknownExample / InvalidConstants.
AnalyticCurve builtin(const std::string& name,
                      const std::map<std::string, double>& constants = {});

struct FrameAtPoint {
  Vec3 x0, e1, e2, e3;
};

// The distinguished initial frame (base point and pseudo-orthonormal triad)
// of the three reconstruction examples example_or_i/ii/iii, used to rebuild
// them from their shape invariants.
FrameAtPoint catalog_initial_frame(const std::string& name, double a);

}  // namespace lorsim
