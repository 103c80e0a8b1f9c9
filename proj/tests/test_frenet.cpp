#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lorsim/catalog.hpp"
#include "lorsim/errors.hpp"
#include "lorsim/frenet.hpp"
#include "lorsim/numerics.hpp"
#include "lorsim/split_quaternion.hpp"
#include "support.hpp"

using namespace lorsim;

namespace {

CurveSamples spacelike_circle(std::size_t n = 6284) {
  CurveSamples c;
  c.param_kind = ParamKind::ArcLength;
  c.params.resize(n);
  c.points.resize(n);
  c.d1.resize(n);
  c.d2.resize(n);
  c.d3.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = 2 * M_PI * static_cast<double>(i) / static_cast<double>(n - 1);
    c.params[i] = s;
    c.points[i] = {0.0, std::cos(s), std::sin(s)};
    c.d1[i] = {0.0, -std::sin(s), std::cos(s)};
    c.d2[i] = {0.0, -std::cos(s), -std::sin(s)};
    c.d3[i] = {0.0, std::sin(s), -std::cos(s)};
  }
  return c;
}

}  // namespace

TEST_CASE("spacelike circle has kappa = 1, tau = 0") {
  const auto fd = frenet_apparatus(spacelike_circle());
  for (std::size_t i = 0; i < fd.size(); i += 500) {
    CHECK(fd.kappa[i] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(fd.tau[i] == doctest::Approx(0.0).epsilon(1e-10));
  }
  CHECK(fd.eps1 == 1.0);
  CHECK(fd.eps2 == 1.0);
  CHECK(fd.eps3 == -1.0);  // binormal along the time axis
  CHECK(fd.causal_case() == CausalCase::TimelikeQ);
}

TEST_CASE("example_or_i(1) carries tau/kappa = 1") {
  const auto fd = frenet_apparatus(builtin("example_or_i", {{"a", 1.0}}).sample());
  for (std::size_t i = 0; i < fd.size(); i += 199)
    CHECK(fd.tau[i] / fd.kappa[i] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(fd.causal_case() == CausalCase::TimelikeT);
}

TEST_CASE("straight line has no Frenet frame") {
  CurveSamples c;
  for (int i = 0; i < 101; ++i) {
    c.params.push_back(0.01 * i);
    c.points.push_back({0.01 * i, 0.0, 0.0});
  }
  CHECK_THROWS_AS(frenet_apparatus(c), GeometryError);
}

TEST_CASE("frame Gram matrix matches the causal signs at every node") {
  for (const auto& name : {"example_or_i", "example_or_ii", "example_or_iii"}) {
    const auto fd = frenet_apparatus(builtin(name).sample(0.0, 2.0, 401));
    const double want[3] = {fd.eps1, fd.eps2, fd.eps3};
    int negatives = 0;
    for (double w : want)
      if (w < 0) ++negatives;
    CHECK(negatives == 1);
    for (std::size_t i = 0; i < fd.size(); i += 57) {
      const Vec3 e[3] = {fd.e1[i], fd.e2[i], fd.e3[i]};
      for (int r = 0; r < 3; ++r)
        for (int cidx = r; cidx < 3; ++cidx) {
          const double got = inner(e[r], e[cidx]);
          const double expect = r == cidx ? want[r] : 0.0;
          CHECK(std::fabs(got - expect) < 1e-8);
        }
    }
  }
}

TEST_CASE("frenet_residual: catalog fixtures satisfy the frame equations") {
  const auto fd2 = frenet_apparatus(builtin("example_or_ii", {{"a", 2.0}}).sample());
  const auto r2 = frenet_residual(fd2);
  CHECK(r2.max_residual < 1e-5);
  CHECK(r2.convention_matched);

  const auto rc = frenet_residual(frenet_apparatus(spacelike_circle()));
  CHECK(rc.max_residual < 1e-6);

  // flipping the binormal must be detected
  FrenetData flipped = fd2;
  for (auto& v : flipped.e3) v = -v;
  const auto rf = frenet_residual(flipped);
  CHECK(rf.max_residual > 0.5);
}

TEST_CASE("scaling laws: kappa by 1/|mu|, tau by 1/mu at matched sigma") {
  const auto c = builtin("example_or_ii", {{"a", 2.0}}).sample(0.0, 2.0, 1001);
  const auto fd = frenet_apparatus(c);
  for (int seed : {11, 12, 13}) {
    const PSimilarity f = random_psimilarity(seed, 0.5, 2.0);
    const auto fd2 = frenet_apparatus(transform_curve(c, f));
    for (std::size_t i = 0; i < fd.size(); i += 97) {
      CHECK(fd2.kappa[i] ==
            doctest::Approx(fd.kappa[i] / std::fabs(f.mu)).epsilon(1e-6));
      CHECK(fd2.tau[i] == doctest::Approx(fd.tau[i] / f.mu).epsilon(1e-6));
      CHECK(fd2.sigma[i] == doctest::Approx(fd.sigma[i]).epsilon(1e-6));
    }
  }
}

TEST_CASE("dalpha/dsigma = e1/kappa") {
  const auto c = builtin("self_similar_t").sample(0.0, 2.0, 1001);
  const auto fd = frenet_apparatus(c);
  // native parameter is sigma, so the d1 channel is dalpha/dsigma directly
  double worst = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    worst = std::max(worst,
                     euclidean_norm(c.d1[i] - fd.e1[i] / fd.kappa[i]));
  CHECK(worst < 1e-7);
}

TEST_CASE("similarity frame field satisfies its first-order system") {
  // d/dsigma of (e_i / kappa) against the coefficient matrix
  // [[kt, 1, 0], [eps3, kt, tt], [0, eps1 tt, kt]] acting on (e_i / kappa).
  const auto c = builtin("example_or_iii", {{"a", 2.0}}).sample(0.0, 2.0, 2001);
  const auto fd = frenet_apparatus(c);
  const std::size_t n = fd.size();

  std::vector<double> kt(n), tt(n);
  {
    std::vector<double> log_kappa(n);
    for (std::size_t i = 0; i < n; ++i) log_kappa[i] = std::log(fd.kappa[i]);
    const auto dlog = fd_derivative(fd.sigma, log_kappa, 1);
    for (std::size_t i = 0; i < n; ++i) {
      kt[i] = -dlog[i];
      tt[i] = fd.tau[i] / fd.kappa[i];
    }
  }

  const std::vector<Vec3>* frames[3] = {&fd.e1, &fd.e2, &fd.e3};
  std::vector<Vec3> scaled[3], dscaled[3];
  std::vector<double> col(n);
  for (int r = 0; r < 3; ++r) {
    scaled[r].resize(n);
    for (std::size_t i = 0; i < n; ++i) scaled[r][i] = (*frames[r])[i] / fd.kappa[i];
    dscaled[r].resize(n);
    for (int axis = 0; axis < 3; ++axis) {
      for (std::size_t i = 0; i < n; ++i) col[i] = scaled[r][i][axis];
      const auto d = fd_derivative(fd.sigma, col, 1);
      for (std::size_t i = 0; i < n; ++i) dscaled[r][i][axis] = d[i];
    }
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 rhs[3] = {
        scaled[0][i] * kt[i] + scaled[1][i],
        scaled[0][i] * fd.eps3 + scaled[1][i] * kt[i] + scaled[2][i] * tt[i],
        scaled[1][i] * (fd.eps1 * tt[i]) + scaled[2][i] * kt[i]};
    for (int r = 0; r < 3; ++r)
      worst = std::max(worst, euclidean_norm(dscaled[r][i] - rhs[r]));
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("sabban frame of the spherical generators") {
  SUBCASE("c_i2(1): timelike tangent, kg = 1") {
    const auto sd = sabban_frame(builtin("c_i2", {{"a", 1.0}}).sample());
    CHECK(sd.timelike_member == CausalCase::TimelikeT);
    CHECK(sd.eps_q == 1.0);
    for (std::size_t i = 0; i < sd.kg.size(); i += 211)
      CHECK(sd.kg[i] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(sd.max_system_residual < 1e-6);
    for (std::size_t i = 0; i < sd.kg.size(); i += 301)
      CHECK(euclidean_norm(sd.q[i] - cross(sd.c[i], sd.t[i])) < 1e-8);
  }

  SUBCASE("great-circle-type curve has kg = 0") {
    CurveSamples c;
    c.param_kind = ParamKind::ArcLength;
    const std::size_t n = 401;
    for (std::size_t i = 0; i < n; ++i) {
      const double s = 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
      c.params.push_back(s);
      c.points.push_back({std::sinh(s), std::cosh(s), 0.0});
      c.d1.push_back({std::cosh(s), std::sinh(s), 0.0});
      c.d2.push_back({std::sinh(s), std::cosh(s), 0.0});
      c.d3.push_back({std::cosh(s), std::sinh(s), 0.0});
    }
    const auto sd = sabban_frame(c);
    for (double kg : sd.kg) CHECK(std::fabs(kg) < 1e-9);
  }

  SUBCASE("samples off the sphere are rejected") {
    auto c = builtin("c_i2").sample();
    for (auto& p : c.points) p = p * (1.0 + 1e-3);
    CHECK_THROWS_AS(sabban_frame(c), GeometryError);
  }

  SUBCASE("non-unit-speed parametrizations are rejected") {
    auto c = builtin("c_i2").sample();
    for (auto& t : c.params) t *= 2.0;  // same points, halved speed
    for (auto& v : c.d1) v = v * 0.5;
    for (auto& v : c.d2) v = v * 0.25;
    for (auto& v : c.d3) v = v * 0.125;
    CHECK_THROWS_AS(sabban_frame(c), GeometryError);
  }
}
