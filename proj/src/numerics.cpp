#include "lorsim/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "lorsim/errors.hpp"

namespace lorsim {

std::vector<double> fd_weights(double x0, std::span<const double> nodes, int m) {
  // B. Fornberg, "Generation of finite difference formulas on arbitrarily
  // spaced grids", Math. Comp. 51 (1988).
  const int n = static_cast<int>(nodes.size()) - 1;
  if (n < m)
    throw GeometryError(Err::InvalidArgument, "not enough nodes for derivative order");
  std::vector<std::vector<double>> c(
      static_cast<std::size_t>(n) + 1, std::vector<double>(static_cast<std::size_t>(m) + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[static_cast<std::size_t>(i)] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
              c1 * (k * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] -
                    c5 * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]) / c2;
        c[static_cast<std::size_t>(i)][0] =
            -c1 * c5 * c[static_cast<std::size_t>(i - 1)][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
            (c4 * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
             k * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)]) / c3;
      c[static_cast<std::size_t>(j)][0] = c4 * c[static_cast<std::size_t>(j)][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) w[i] = c[i][static_cast<std::size_t>(m)];
  return w;
}

std::vector<double> fd_derivative(std::span<const double> x,
                                  std::span<const double> f, int order,
                                  int stencil) {
  const std::size_t n = x.size();
  if (n < static_cast<std::size_t>(stencil))
    throw GeometryError(Err::GridTooCoarse, "grid too coarse for the stencil width");
  std::vector<double> out(n, 0.0);
  const std::size_t half = static_cast<std::size_t>(stencil) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t start = i > half ? i - half : 0;
    start = std::min(start, n - static_cast<std::size_t>(stencil));
    const auto win_x = x.subspan(start, static_cast<std::size_t>(stencil));
    const auto w = fd_weights(x[i], win_x, order);
    double acc = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) acc += w[k] * f[start + k];
    out[i] = acc;
  }
  return out;
}

bool grid_is_uniform(std::span<const double> x, double rel_tol) {
  if (x.size() < 3) return true;
  const double h0 = x[1] - x[0];
  for (std::size_t i = 1; i + 1 < x.size(); ++i)
    if (std::fabs((x[i + 1] - x[i]) - h0) > rel_tol * std::fabs(h0)) return false;
  return true;
}

std::vector<double> cumulative_integral(std::span<const double> x,
                                        std::span<const double> f) {
  const std::size_t n = x.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  if (n >= 5 && grid_is_uniform(x)) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double h = x[i + 1] - x[i];
      const double tm = 0.5 * (x[i] + x[i + 1]);
      std::size_t start = i >= 2 ? i - 2 : 0;
      start = std::min(start, n - 5);
      const double fm = lagrange_eval(x.subspan(start, 5), f.subspan(start, 5), tm, 5);
      out[i + 1] = out[i] + h / 6.0 * (f[i] + 4.0 * fm + f[i + 1]);
    }
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i)
      out[i + 1] = out[i] + 0.5 * (x[i + 1] - x[i]) * (f[i] + f[i + 1]);
  }
  return out;
}

std::size_t bracket(std::span<const double> x, double t) {
  const auto it = std::upper_bound(x.begin(), x.end(), t);
  std::size_t i = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
  return std::min(i, x.size() - 2);
}

double hermite_eval(std::span<const double> x, std::span<const double> f,
                    std::span<const double> df, double t) {
  const std::size_t i = bracket(x, t);
  const double h = x[i + 1] - x[i];
  const double u = (t - x[i]) / h;
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
  const double h10 = u3 - 2.0 * u2 + u;
  const double h01 = -2.0 * u3 + 3.0 * u2;
  const double h11 = u3 - u2;
  return h00 * f[i] + h10 * h * df[i] + h01 * f[i + 1] + h11 * h * df[i + 1];
}

namespace {

std::size_t window_start(std::span<const double> x, double t, int window) {
  const std::size_t n = x.size();
  const std::size_t w = static_cast<std::size_t>(window);
  std::size_t i = bracket(x, t);
  std::size_t start = i > (w - 1) / 2 ? i - (w - 1) / 2 : 0;
  return std::min(start, n - w);
}

}  // namespace

double lagrange_eval(std::span<const double> x, std::span<const double> f,
                     double t, int window) {
  const std::size_t start = window_start(x, t, window);
  const std::size_t w = static_cast<std::size_t>(window);
  double acc = 0.0;
  for (std::size_t j = 0; j < w; ++j) {
    double basis = 1.0;
    for (std::size_t k = 0; k < w; ++k) {
      if (k == j) continue;
      basis *= (t - x[start + k]) / (x[start + j] - x[start + k]);
    }
    acc += basis * f[start + j];
  }
  return acc;
}

double lagrange_derivative(std::span<const double> x, std::span<const double> f,
                           double t, int window) {
  const std::size_t start = window_start(x, t, window);
  const std::size_t w = static_cast<std::size_t>(window);
  const auto win_x = x.subspan(start, w);
  const auto weights = fd_weights(t, win_x, 1);
  double acc = 0.0;
  for (std::size_t j = 0; j < w; ++j) acc += weights[j] * f[start + j];
  return acc;
}

double invert_monotone(std::span<const double> x, std::span<const double> g,
                       std::span<const double> dg, double u) {
  if (u <= g.front()) return x.front();
  if (u >= g.back()) return x.back();
  const auto it = std::upper_bound(g.begin(), g.end(), u);
  const std::size_t i = static_cast<std::size_t>(it - g.begin()) - 1;
  double lo = x[i];
  double hi = x[i + 1];
  const auto seg_x = x.subspan(i, 2);
  const auto seg_g = g.subspan(i, 2);
  const auto seg_dg = dg.subspan(i, 2);
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hermite_eval(seg_x, seg_g, seg_dg, mid) < u)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace lorsim
