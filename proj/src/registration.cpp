#include "lorsim/registration.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "lorsim/errors.hpp"
#include "lorsim/numerics.hpp"

namespace lorsim {

const char* sign_pattern_name(SignPattern p) {
  switch (p) {
    case SignPattern::Direct: return "direct";
    case SignPattern::DirectNegated: return "direct_negated";
    case SignPattern::BinormalFlip: return "binormal_flip";
    case SignPattern::BinormalFlipNegated: return "binormal_flip_negated";
  }
  return "?";
}

namespace {

// Component columns of a vector channel, for repeated interpolation against
// a sigma grid.
struct Columns {
  std::array<std::vector<double>, 3> col;

  Columns(const std::vector<Vec3>& channel) {
    for (int axis = 0; axis < 3; ++axis) {
      col[axis].resize(channel.size());
      for (std::size_t i = 0; i < channel.size(); ++i)
        col[axis][i] = channel[i][axis];
    }
  }

  Vec3 at(const std::vector<double>& sigma_grid, double sigma) const {
    return {lagrange_eval(sigma_grid, col[0], sigma),
            lagrange_eval(sigma_grid, col[1], sigma),
            lagrange_eval(sigma_grid, col[2], sigma)};
  }
};

// Linear map sending the a-frame to the sign-adjusted b-frame:
// x = sum_i eps_i inner(x, e_i^a) e_i^a  =>  R x = sum_i eps_i inner(x, e_i^a) s_i e_i^b.
Mat3 frame_alignment(const FrenetData& fa, const Vec3 ea[3], const Vec3 eb[3],
                     const double signs[3]) {
  const double eps[3] = {fa.eps1, fa.eps2, fa.eps3};
  Mat3 r;
  const double eta[3] = {-1.0, 1.0, 1.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k)
        acc += eps[k] * signs[k] * eb[k][i] * eta[j] * ea[k][j];
      r(i, j) = acc;
    }
  return r;
}

}  // namespace

MatchResult estimate_similarity(const CurveSamples& a, const CurveSamples& b,
                                const Tolerances& tol) {
  const FrenetData fa = frenet_apparatus(a, tol);
  const FrenetData fb = frenet_apparatus(b, tol);
  if (fa.tangent_character != fb.tangent_character ||
      fa.causal_case() != fb.causal_case())
    throw GeometryError(Err::CausalMismatch,
                        "curves have different causal characters");

  const PShapeProfile pa = pshape_from_frenet(fa);
  const PShapeProfile pb = pshape_from_frenet(fb);
  const PShapeDistance dist = pshape_distance(pa, pb);
  if (std::min(dist.direct, dist.flipped) > tol.match_threshold)
    throw PShapeMismatchError(std::min(dist.direct, dist.flipped),
                              "shape profiles differ beyond the match threshold");

  // Common sigma grid.
  const double lo = std::max(fa.sigma.front(), fb.sigma.front());
  const double hi = std::min(fa.sigma.back(), fb.sigma.back());
  if (!(lo < hi))
    throw GeometryError(Err::NoOverlap, "sigma ranges do not overlap");
  const std::size_t n = std::min(std::min(fa.size(), fb.size()),
                                 static_cast<std::size_t>(1001));
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);

  // Scale: log-domain mean of the curvature ratio, spread reported.
  const Columns a_points(a.points);
  const Columns b_points(b.points);
  double log_sum = 0.0;
  double rmin = 1e300, rmax = -1e300;
  std::vector<Vec3> a_pos(n), b_pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ka = lagrange_eval(fa.sigma, fa.kappa, grid[i]);
    const double kb = lagrange_eval(fb.sigma, fb.kappa, grid[i]);
    const double ratio = ka / kb;
    log_sum += std::log(ratio);
    rmin = std::min(rmin, ratio);
    rmax = std::max(rmax, ratio);
    a_pos[i] = a_points.at(fa.sigma, grid[i]);
    b_pos[i] = b_points.at(fb.sigma, grid[i]);
  }
  const double mu_plus = std::exp(log_sum / static_cast<double>(n));
  const double mu_spread = (rmax - rmin) / mu_plus;

  // Frames at the anchor.
  const double sigma0 = grid[n / 2];
  const Vec3 ea[3] = {Columns(fa.e1).at(fa.sigma, sigma0),
                      Columns(fa.e2).at(fa.sigma, sigma0),
                      Columns(fa.e3).at(fa.sigma, sigma0)};
  const Vec3 eb[3] = {Columns(fb.e1).at(fb.sigma, sigma0),
                      Columns(fb.e2).at(fb.sigma, sigma0),
                      Columns(fb.e3).at(fb.sigma, sigma0)};
  const Vec3 a0 = a_points.at(fa.sigma, sigma0);
  const Vec3 b0 = b_points.at(fb.sigma, sigma0);

  struct Candidate {
    SignPattern pattern;
    double signs[3];
  };
  const Candidate candidates[4] = {
      {SignPattern::Direct, {1.0, 1.0, 1.0}},
      {SignPattern::DirectNegated, {-1.0, -1.0, -1.0}},
      {SignPattern::BinormalFlip, {1.0, 1.0, -1.0}},
      {SignPattern::BinormalFlipNegated, {-1.0, -1.0, 1.0}},
  };

  MatchResult best;
  double best_residual = 1e300;
  for (const Candidate& cand : candidates) {
    const Mat3 r = frame_alignment(fa, ea, eb, cand.signs);
    Mat3 lin = r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) lin(i, j) *= mu_plus;
    const Vec3 trans = b0 - lin.apply(a0);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      residual = std::max(residual,
                          euclidean_norm(lin.apply(a_pos[i]) + trans - b_pos[i]));
    if (residual < best_residual) {
      best_residual = residual;
      best.sign_pattern = cand.pattern;
      best.linear = lin;
      best.translation = trans;
      best.residual = residual;
    }
  }

  best.mu_spread = mu_spread;
  best.pshape_dist = dist;
  const double det = best.linear.det();
  best.orientation = det > 0.0 ? Orientation::Preserving : Orientation::Reversing;
  best.mu = det > 0.0 ? mu_plus : -mu_plus;

  // Try to express the rotation part as a split-quaternion conjugation.
  Mat3 rot = best.linear;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rot(i, j) /= best.mu;
  const Vec3 time_image = rot.apply({1.0, 0.0, 0.0});
  if (pseudo_orthogonality_defect(rot) < 1e-6 && rot.det() > 0.0 &&
      time_image.x0 > 0.0) {
    try {
      PSimilarity f;
      f.mu = best.mu;
      f.q = quaternion_from_rotation(rot);
      f.b = best.translation;
      best.f = f;
    } catch (const GeometryError&) {
      best.f.reset();  // matrix form remains authoritative
    }
  }
  return best;
}

double verify_match(const CurveSamples& a, const CurveSamples& b,
                    const PSimilarity& f, const Tolerances& tol) {
  const FrenetData fa = frenet_apparatus(a, tol);
  const FrenetData fb = frenet_apparatus(b, tol);
  const double lo = std::max(fa.sigma.front(), fb.sigma.front());
  const double hi = std::min(fa.sigma.back(), fb.sigma.back());
  if (!(lo < hi))
    throw GeometryError(Err::NoOverlap, "sigma ranges do not overlap");
  const std::size_t n = std::min(std::min(fa.size(), fb.size()),
                                 static_cast<std::size_t>(1001));

  const Columns a_cols(a.points);
  const Columns b_cols(b.points);
  double residual = 0.0;
  double diameter = 0.0;
  std::vector<Vec3> b_interp(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sigma = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    const Vec3 pa = a_cols.at(fa.sigma, sigma);
    const Vec3 pb = b_cols.at(fb.sigma, sigma);
    b_interp[i] = pb;
    residual = std::max(residual, euclidean_norm(f.apply(pa) - pb));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      diameter = std::max(diameter, euclidean_norm(b_interp[i] - b_interp[j]));
  return diameter > 0.0 ? residual / diameter : residual;
}

SelfSimilarity is_self_similar(const CurveSamples& a, double tol,
                               const Tolerances& num_tol) {
  const FrenetData fd = frenet_apparatus(a, num_tol);
  const PShapeProfile p = pshape_from_frenet(fd);
  SelfSimilarity out;
  double mean_k = 0.0, mean_t = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mean_k += p.kappa_tilde[i];
    mean_t += p.tau_tilde[i];
  }
  mean_k /= static_cast<double>(p.size());
  mean_t /= static_cast<double>(p.size());
  double dev = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    dev = std::max(dev, std::fabs(p.kappa_tilde[i] - mean_k));
    dev = std::max(dev, std::fabs(p.tau_tilde[i] - mean_t));
  }
  out.self_similar = dev <= tol;
  out.kappa_tilde = mean_k;
  out.tau_tilde = mean_t;
  return out;
}

}  // namespace lorsim
