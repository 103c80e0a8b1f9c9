#include "lorsim/reconstruct.hpp"

#include <array>
#include <cmath>
#include <memory>

#include "lorsim/errors.hpp"
#include "lorsim/numerics.hpp"

namespace lorsim {

PShapeSpec PShapeSpec::constant(double kappa_tilde, double tau_tilde,
                                double sigma_start, double sigma_end,
                                CausalCase cc) {
  PShapeSpec s;
  s.z1 = [kappa_tilde](double) { return kappa_tilde; };
  s.z2 = [tau_tilde](double) { return tau_tilde; };
  s.dz1 = [](double) { return 0.0; };
  s.sigma_start = sigma_start;
  s.sigma_end = sigma_end;
  s.causal_case = cc;
  return s;
}

PShapeSpec PShapeSpec::reciprocal(double tau_tilde, double sigma_start,
                                  double sigma_end, CausalCase cc) {
  if (sigma_start <= 0.0 && sigma_end >= 0.0)
    throw GeometryError(Err::InvalidArgument,
                        "1/sigma shape needs a range excluding 0");
  PShapeSpec s;
  s.z1 = [](double sg) { return 1.0 / sg; };
  s.z2 = [tau_tilde](double) { return tau_tilde; };
  s.dz1 = [](double sg) { return -1.0 / (sg * sg); };
  s.sigma_start = sigma_start;
  s.sigma_end = sigma_end;
  s.causal_case = cc;
  return s;
}

PShapeSpec PShapeSpec::from_profile(const PShapeProfile& profile) {
  if (profile.size() < 4)
    throw GeometryError(Err::InvalidArgument, "profile too short to interpolate");
  for (std::size_t i = 0; i < profile.size(); ++i)
    if (!std::isfinite(profile.kappa_tilde[i]) || !std::isfinite(profile.tau_tilde[i]))
      throw GeometryError(Err::InvalidArgument, "profile has non-finite values");

  // Shared copies for the closures.
  auto sigma = std::make_shared<std::vector<double>>(profile.sigma);
  auto zk = std::make_shared<std::vector<double>>(profile.kappa_tilde);
  auto zt = std::make_shared<std::vector<double>>(profile.tau_tilde);

  auto clamp = [sigma](double s) {
    return std::min(std::max(s, sigma->front()), sigma->back());
  };

  PShapeSpec s;
  s.z1 = [sigma, zk, clamp](double sg) { return lagrange_eval(*sigma, *zk, clamp(sg)); };
  s.z2 = [sigma, zt, clamp](double sg) { return lagrange_eval(*sigma, *zt, clamp(sg)); };
  s.dz1 = [sigma, zk, clamp](double sg) {
    return lagrange_derivative(*sigma, *zk, clamp(sg));
  };
  s.sigma_start = profile.sigma.front();
  s.sigma_end = profile.sigma.back();
  s.causal_case = profile.causal_case;
  return s;
}

void case_signs(CausalCase cc, double& eps_c, double& eps_t, double& eps_q) {
  eps_c = 1.0;
  eps_t = -1.0;
  eps_q = 1.0;
  switch (cc) {
    case CausalCase::TimelikeT: break;
    case CausalCase::TimelikeC: eps_c = -1.0; eps_t = 1.0; break;
    case CausalCase::TimelikeQ: eps_t = 1.0; eps_q = -1.0; break;
  }
}

void InitialFrame::validate(CausalCase cc, double tol) const {
  double eps_c, eps_t, eps_q;
  case_signs(cc, eps_c, eps_t, eps_q);
  const Vec3 v[3] = {e1, e2, e3};
  const double want[3] = {eps_c, eps_t, eps_q};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double g = inner(v[i], v[j]);
      const double expect = i == j ? want[i] : 0.0;
      if (std::fabs(g - expect) > tol)
        throw GeometryError(Err::CaseMismatch,
                            "initial frame is not pseudo-orthonormal for the case");
    }
  }
  const Vec3 x = cross(e1, e2);
  if (euclidean_norm(x - e3) > 1e-8 && euclidean_norm(x + e3) > 1e-8)
    throw GeometryError(Err::CaseMismatch,
                        "e3 is not cross(e1, e2) up to sign");
}

InitialFrame InitialFrame::standard(CausalCase cc) {
  InitialFrame f;
  switch (cc) {
    case CausalCase::TimelikeT:
      f.e1 = {0, 0, 1};
      f.e2 = {1, 0, 0};
      f.e3 = {0, 1, 0};
      break;
    case CausalCase::TimelikeC:
      f.e1 = {1, 0, 0};
      f.e2 = {0, 1, 0};
      f.e3 = {0, 0, 1};
      break;
    case CausalCase::TimelikeQ:
      f.e1 = {0, 1, 0};
      f.e2 = {0, 0, 1};
      f.e3 = {-1, 0, 0};
      break;
  }
  return f;
}

Mat3 sabban_matrix(CausalCase cc, double z2) {
  Mat3 m;
  switch (cc) {
    case CausalCase::TimelikeT:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      m(1, 2) = z2;
      m(2, 1) = z2;
      break;
    case CausalCase::TimelikeC:
      m(0, 1) = -1.0;
      m(1, 0) = -1.0;
      m(1, 2) = z2;
      m(2, 1) = -z2;
      break;
    case CausalCase::TimelikeQ:
      m(0, 1) = -1.0;
      m(1, 0) = 1.0;
      m(1, 2) = z2;
      m(2, 1) = z2;
      break;
  }
  return m;
}

namespace {

// Internal state uses extended precision: boost-like frame flows reach
// component scale ~e^sigma, where the 1e-8 absolute conservation bound sits
// below the double roundoff floor (S^2 * 2^-53).
struct LVec {
  long double v0 = 0.0L, v1 = 0.0L, v2 = 0.0L;

  LVec() = default;
  LVec(long double a, long double b, long double c) : v0(a), v1(b), v2(c) {}
  LVec(const Vec3& v) : v0(v.x0), v1(v.x1), v2(v.x2) {}

  Vec3 to_vec3() const {
    return {static_cast<double>(v0), static_cast<double>(v1), static_cast<double>(v2)};
  }
  LVec operator+(const LVec& o) const { return {v0 + o.v0, v1 + o.v1, v2 + o.v2}; }
  LVec operator-(const LVec& o) const { return {v0 - o.v0, v1 - o.v1, v2 - o.v2}; }
  LVec operator*(long double s) const { return {v0 * s, v1 * s, v2 * s}; }
};

long double linner(const LVec& x, const LVec& y) {
  return -x.v0 * y.v0 + x.v1 * y.v1 + x.v2 * y.v2;
}

// RK4 state: frame (c, t, q), position, and the exponent rho.
struct State {
  LVec c, t, q, pos;
  long double rho = 0.0L;

  State operator+(const State& o) const {
    return {c + o.c, t + o.t, q + o.q, pos + o.pos, rho + o.rho};
  }
  State operator*(long double s) const {
    return {c * s, t * s, q * s, pos * s, rho * s};
  }
};

struct CaseSigns {
  double eps_c, eps_t, eps_q;
};

State derivative(const State& st, double sigma, const PShapeSpec& spec,
                 const CaseSigns& e, double b) {
  const long double z2 = spec.z2(sigma);
  State d;
  d.c = st.t;
  d.t = st.c * static_cast<long double>(e.eps_q) - st.q * (e.eps_q * z2);
  d.q = st.t * (-e.eps_c * e.eps_q * z2);
  d.rho = spec.z1(sigma);
  d.pos = st.c * (b * std::exp(st.rho));
  return d;
}

double gram_drift(const State& st, const CaseSigns& e) {
  const LVec* v[3] = {&st.c, &st.t, &st.q};
  const long double want[3] = {e.eps_c, e.eps_t, e.eps_q};
  long double worst = 0.0L;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const long double g = linner(*v[i], *v[j]);
      const long double expect = i == j ? want[i] : 0.0L;
      worst = std::max(worst, std::fabs(g - expect));
    }
  return static_cast<double>(worst);
}

// Lorentzian Gram-Schmidt, renormalizing each vector to its causal sign.
void reproject(State& st, const CaseSigns& e) {
  auto unitize = [](LVec& v) {
    const long double n = std::sqrt(std::fabs(linner(v, v)));
    if (n < 1e-12L)
      throw GeometryError(Err::FrameDegenerate, "frame vector degenerated");
    v = v * (1.0L / n);
  };
  unitize(st.c);
  st.t = st.t - st.c * (e.eps_c * linner(st.t, st.c));
  unitize(st.t);
  st.q = st.q - st.c * (e.eps_c * linner(st.q, st.c)) -
         st.t * (e.eps_t * linner(st.q, st.t));
  unitize(st.q);
}

struct Integration {
  FrameField field;
  std::vector<Vec3> pos;
  std::vector<double> rho;
};

Integration run_integration(const PShapeSpec& spec, const InitialFrame& init,
                            double step, double b) {
  if (!(step > 0.0))
    throw GeometryError(Err::InvalidArgument, "step must be positive");
  if (!(spec.sigma_end > spec.sigma_start))
    throw GeometryError(Err::InvalidArgument, "sigma range must be increasing");
  init.validate(spec.causal_case);

  CaseSigns e;
  case_signs(spec.causal_case, e.eps_c, e.eps_t, e.eps_q);

  const double span = spec.sigma_end - spec.sigma_start;
  const std::size_t steps = static_cast<std::size_t>(std::llround(span / step));
  const std::size_t n = std::max<std::size_t>(steps, 6) + 1;
  const double h = span / static_cast<double>(n - 1);

  Integration out;
  out.field.sigma.resize(n);
  out.field.c.resize(n);
  out.field.t.resize(n);
  out.field.q.resize(n);
  out.pos.resize(n);
  out.rho.resize(n);

  State st{init.e1, init.e2, init.e3, init.x0, 0.0L};
  const long double hl = h;
  for (std::size_t i = 0; i < n; ++i) {
    const double sigma = spec.sigma_start + h * static_cast<double>(i);
    out.field.sigma[i] = sigma;
    out.field.c[i] = st.c.to_vec3();
    out.field.t[i] = st.t.to_vec3();
    out.field.q[i] = st.q.to_vec3();
    out.pos[i] = st.pos.to_vec3();
    out.rho[i] = static_cast<double>(st.rho);
    out.field.max_gram_drift = std::max(out.field.max_gram_drift, gram_drift(st, e));
    if (i + 1 == n) break;

    const State k1 = derivative(st, sigma, spec, e, b);
    const State k2 = derivative(st + k1 * (hl / 2.0L), sigma + h / 2.0, spec, e, b);
    const State k3 = derivative(st + k2 * (hl / 2.0L), sigma + h / 2.0, spec, e, b);
    const State k4 = derivative(st + k3 * hl, sigma + h, spec, e, b);
    st = st + (k1 + k2 * 2.0L + k3 * 2.0L + k4) * (hl / 6.0L);

    if ((i + 1) % 100 == 0) reproject(st, e);
  }

  if (out.field.max_gram_drift > 1e-6)
    throw GeometryError(Err::FrameDegenerate,
                        "frame orthonormality drift exceeds 1e-6");
  return out;
}

}  // namespace

FrameField integrate_sabban(const PShapeSpec& spec, const InitialFrame& init,
                            double step) {
  return run_integration(spec, init, step, 1.0).field;
}

CurveSamples reconstruct_curve(const PShapeSpec& spec, const InitialFrame& init,
                               double b, double step) {
  if (!(b > 0.0))
    throw GeometryError(Err::InvalidArgument, "scale b must be positive");
  Integration ig = run_integration(spec, init, step, b);

  CaseSigns e;
  case_signs(spec.causal_case, e.eps_c, e.eps_t, e.eps_q);

  const std::size_t n = ig.field.sigma.size();
  CurveSamples out;
  out.param_kind = ParamKind::SphericalArcLength;
  out.params = ig.field.sigma;
  out.points = ig.pos;
  out.d1.resize(n);
  out.d2.resize(n);
  out.d3.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sigma = ig.field.sigma[i];
    const double w = b * std::exp(ig.rho[i]);
    const double z1 = spec.z1(sigma);
    const double z2 = spec.z2(sigma);
    const double dz1 = spec.dz1 ? spec.dz1(sigma) : 0.0;
    const Vec3& c = ig.field.c[i];
    const Vec3& t = ig.field.t[i];
    const Vec3& q = ig.field.q[i];
    out.d1[i] = c * w;
    out.d2[i] = (c * z1 + t) * w;
    out.d3[i] = (c * (z1 * z1 + dz1 + e.eps_q) + t * (2.0 * z1) -
                 q * (e.eps_q * z2)) * w;
  }
  return out;
}

}  // namespace lorsim
