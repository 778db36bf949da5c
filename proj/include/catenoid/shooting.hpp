#pragma once

// Half-line shooting kernel shared by the zeta-chart and eta-chart solvers.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "catenoid/numerov.hpp"

namespace catenoid::detail {

//! y'' = F(x, eps) y on x_i = x0 + i h, i < max_points, started at x0 by a
//! parity-dependent rule and matched to the decaying solution of the tail.
struct HalfLineProblem {
  double x0 = 0.0;
  double h = 0.0;
  std::size_t max_points = 0;
  std::function<double(double x, double eps)> coefficient;
  //! (y0, y1) given parity, eps, h and the coefficient samples f0, f1.
  std::function<std::pair<double, double>(Parity, double eps, double h, double f0, double f1)> start;
  double tail_action = 36.0;
  double min_tail_action = 18.0;
};

struct Shot {
  double determinant = 0.0;   // z-form Wronskian of outward and inward shots
  std::size_t match = 0;      // matching index (just outside the last turning point)
  std::size_t end = 0;        // inward start index
  double action = 0.0;        // WKB action between match and end
};

//! Evaluates the matching determinant; optionally assembles the joined
//! solution on [0, end] (zero beyond) into *wave.
Shot shoot(const HalfLineProblem& p, Parity parity, double eps, std::vector<double>* wave = nullptr);

//! Symmetric start for an even coefficient about x0: y_{-1} = +-y_1.
std::pair<double, double> symmetric_start(Parity parity, double h, double f0, double f1);

//! Roots of a continuous function bracketed on a scan grid, bisected to tol.
std::vector<double> bracketed_roots(const std::function<double(double)>& g,
                                    const std::vector<double>& scan, double tol);

}  // namespace catenoid::detail
