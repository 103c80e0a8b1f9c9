#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lorsim {

// Finite-difference weights for the m-th derivative at x0 from the given
// nodes (Fornberg's recursion; nodes need not be uniform). Exact for
// polynomials of degree < nodes.size().
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int m);

// Per-node derivative of sampled data on an arbitrary strictly increasing
// grid, using a sliding window of `stencil` nodes (clamped at the ends, so
// interior nodes get centered stencils and boundary nodes one-sided ones).
std::vector<double> fd_derivative(std::span<const double> x,
                                  std::span<const double> f, int order,
                                  int stencil = 5);

// Cumulative integral of sampled f over grid x with F[0] = 0. Uniform grids
// get per-interval Simpson with quartic-interpolated midpoints (O(h^4));
// non-uniform grids fall back to the trapezoid rule.
std::vector<double> cumulative_integral(std::span<const double> x,
                                        std::span<const double> f);

bool grid_is_uniform(std::span<const double> x, double rel_tol = 1e-9);

/// Index i with x[i] <= t <= x[i+1] (clamped to the valid range).
std::size_t bracket(std::span<const double> x, double t);

/// Cubic Hermite evaluation at t from node values and node derivatives.
double hermite_eval(std::span<const double> x, std::span<const double> f,
                    std::span<const double> df, double t);

/// Local Lagrange interpolation at t through `window` nearby nodes
/// (default 4 = cubic).
double lagrange_eval(std::span<const double> x, std::span<const double> f,
                     double t, int window = 4);

/// Derivative of the local Lagrange interpolant at t.
double lagrange_derivative(std::span<const double> x, std::span<const double> f,
                           double t, int window = 4);

// Solve g(t) = u for a strictly increasing sampled map g with derivative
// samples dg (cubic Hermite model on the bracketing interval; bisection).
double invert_monotone(std::span<const double> x, std::span<const double> g,
                       std::span<const double> dg, double u);

}  // namespace lorsim
