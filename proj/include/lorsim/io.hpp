#pragma once

#include <string>

#include "lorsim/curve.hpp"
#include "lorsim/frenet.hpp"
#include "lorsim/pshape.hpp"
#include "lorsim/registration.hpp"
#include "lorsim/reconstruct.hpp"
#include "lorsim/split_quaternion.hpp"

namespace lorsim {

// File schemas. All JSON is emitted with alphabetically ordered keys and
// %.17g floats so identical data produces identical bytes; parsing goes
// through nlohmann/json and reports IoError on malformed input.

/// %.17g rendering used by every writer.
std::string format_double(double v);

// Curve JSON: {"param_kind": "...", "samples": [[t, x0, x1, x2], ...],
// "derivatives": {"d1": [[x0,x1,x2], ...], "d2": ..., "d3": ...}} with
// "derivatives" optional. Readers reject non-monotone parameter grids.
std::string curve_to_json(const CurveSamples& c);
CurveSamples curve_from_json(const std::string& text);

// Curve CSV with required header "t,x0,x1,x2".
std::string curve_to_csv(const CurveSamples& c);
CurveSamples curve_from_csv(const std::string& text);

// PShapeProfile JSON:
// {"causal_case": "...", "samples": [[sigma, kappa_tilde, tau_tilde], ...]}.
std::string pshape_to_json(const PShapeProfile& p);
PShapeProfile pshape_from_json(const std::string& text);

// PSimilarity JSON: {"b": [b0,b1,b2], "mu": m, "q": [w,x,y,z]}.
std::string psimilarity_to_json(const PSimilarity& f);
PSimilarity psimilarity_from_json(const std::string& text);

// MatchResult JSON: mu, q (or rotation_matrix fallback), b, residual,
// orientation, mu_spread, sign_pattern.
std::string match_to_json(const MatchResult& m);

// FrenetData CSV: s, sigma, kappa, tau, e1_*, e2_*, e3_*, eps1..3.
std::string frenet_to_csv(const FrenetData& fd);

// Initial frame JSON: {"e1": [...], "e2": [...], "e3": [...], "x0": [...]}.
std::string initial_frame_to_json(const InitialFrame& f);
InitialFrame initial_frame_from_json(const std::string& text);

std::string read_file(const std::string& path);
/// Write-then-rename so concurrent readers never see partial output.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace lorsim
