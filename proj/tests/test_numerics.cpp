#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lorsim/errors.hpp"
#include "lorsim/numerics.hpp"

using namespace lorsim;

namespace {

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return x;
}

double max_error(const std::vector<double>& got, const std::vector<double>& want) {
  double worst = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i)
    worst = std::max(worst, std::fabs(got[i] - want[i]));
  return worst;
}

double fd_error_on_sin(double h, int order) {
  const auto x = linspace(0.0, 1.0, static_cast<std::size_t>(1.0 / h) + 1);
  std::vector<double> f(x.size()), want(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    f[i] = std::sin(x[i]);
    const double phase = x[i] + order * M_PI / 2.0;
    want[i] = std::sin(phase);
  }
  return max_error(fd_derivative(x, f, order), want);
}

}  // namespace

TEST_CASE("fd_weights reproduce exact derivatives of polynomials") {
  const std::vector<double> nodes = {-2.0, -1.0, 0.0, 1.0, 2.0};
  // f(x) = x^4 - 3x^2 + 2x: f'(0.5) = 4*0.125 - 3 + 2 = -0.5
  std::vector<double> f(5);
  for (std::size_t i = 0; i < 5; ++i)
    f[i] = std::pow(nodes[i], 4) - 3.0 * nodes[i] * nodes[i] + 2.0 * nodes[i];
  const auto w1 = fd_weights(0.5, nodes, 1);
  double d1 = 0.0;
  for (std::size_t i = 0; i < 5; ++i) d1 += w1[i] * f[i];
  CHECK(d1 == doctest::Approx(-0.5).epsilon(1e-12));

  const auto w3 = fd_weights(0.5, nodes, 3);
  double d3 = 0.0;
  for (std::size_t i = 0; i < 5; ++i) d3 += w3[i] * f[i];
  CHECK(d3 == doctest::Approx(12.0).epsilon(1e-12));  // 24 x at 0.5
}

TEST_CASE("fd_derivative error drops by >= 3.5 when h halves") {
  for (int order : {1, 2, 3}) {
    const double e1 = fd_error_on_sin(1e-2, order);
    const double e2 = fd_error_on_sin(5e-3, order);
    CAPTURE(order);
    CHECK(e1 / e2 >= 3.5);
  }
}

TEST_CASE("fd_derivative works on non-uniform grids") {
  std::vector<double> x;
  for (int i = 0; i <= 60; ++i) x.push_back(0.02 * i + 0.004 * std::sin(3.0 * i));
  std::vector<double> f(x.size()), want(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    f[i] = std::exp(x[i]);
    want[i] = std::exp(x[i]);
  }
  CHECK(max_error(fd_derivative(x, f, 1), want) < 1e-6);
  CHECK(max_error(fd_derivative(x, f, 2), want) < 1e-4);
}

TEST_CASE("fd_derivative rejects too-short grids") {
  const std::vector<double> x = {0, 1, 2};
  const std::vector<double> f = {0, 1, 2};
  CHECK_THROWS_AS(fd_derivative(x, f, 1), GeometryError);
}

TEST_CASE("cumulative integral: polynomials exactly, sin to O(h^4)") {
  const auto x = linspace(0.0, 2.0, 201);
  std::vector<double> f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) f[i] = 3.0 * x[i] * x[i];
  const auto F = cumulative_integral(x, f);
  CHECK(F.front() == 0.0);
  CHECK(F.back() == doctest::Approx(8.0).epsilon(1e-12));

  for (std::size_t i = 0; i < x.size(); ++i) f[i] = std::sin(x[i]);
  const auto G = cumulative_integral(x, f);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    worst = std::max(worst, std::fabs(G[i] - (1.0 - std::cos(x[i]))));
  CHECK(worst < 1e-9);
}

TEST_CASE("trapezoid fallback on non-uniform grids") {
  std::vector<double> x = {0.0, 0.1, 0.25, 0.5, 0.6, 0.85, 1.0};
  std::vector<double> f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) f[i] = 2.0 * x[i];
  const auto F = cumulative_integral(x, f);
  CHECK(F.back() == doctest::Approx(1.0).epsilon(1e-12));  // trapezoid exact for linear
}

TEST_CASE("hermite interpolation is exact at nodes and O(h^4) between") {
  const auto x = linspace(0.0, 1.0, 21);
  std::vector<double> f(x.size()), df(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    f[i] = std::sin(3.0 * x[i]);
    df[i] = 3.0 * std::cos(3.0 * x[i]);
  }
  CHECK(hermite_eval(x, f, df, x[7]) == doctest::Approx(f[7]).epsilon(1e-15));
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double t = i / 199.0;
    worst = std::max(worst, std::fabs(hermite_eval(x, f, df, t) - std::sin(3.0 * t)));
  }
  CHECK(worst < 5e-6);  // h = 0.05, h^4 scale
}

TEST_CASE("lagrange interpolation and derivative") {
  const auto x = linspace(0.0, 1.0, 26);
  std::vector<double> f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) f[i] = std::exp(x[i]);
  CHECK(lagrange_eval(x, f, 0.473) == doctest::Approx(std::exp(0.473)).epsilon(1e-7));
  CHECK(lagrange_derivative(x, f, 0.473) == doctest::Approx(std::exp(0.473)).epsilon(1e-5));
}

TEST_CASE("monotone inversion") {
  const auto x = linspace(0.0, 2.0, 41);
  std::vector<double> g(x.size()), dg(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    g[i] = x[i] + 0.3 * std::sin(x[i]);  // strictly increasing
    dg[i] = 1.0 + 0.3 * std::cos(x[i]);
  }
  for (double u : {0.05, 0.8, 1.9, 2.25}) {
    const double t = invert_monotone(x, g, dg, u);
    const double back = t + 0.3 * std::sin(t);
    CHECK(back == doctest::Approx(u).epsilon(1e-8));
  }
  CHECK(invert_monotone(x, g, dg, -5.0) == x.front());
  CHECK(invert_monotone(x, g, dg, 5.0) == x.back());
}

TEST_CASE("grid uniformity detection") {
  CHECK(grid_is_uniform(linspace(0, 1, 11)));
  std::vector<double> x = {0, 0.1, 0.25, 0.3};
  CHECK_FALSE(grid_is_uniform(x));
}
