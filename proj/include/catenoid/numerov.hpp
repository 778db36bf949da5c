#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace catenoid {

//! Uniform grid lo = x_0 < ... < x_{n-1} = hi.
class Grid1D {
 public:
  Grid1D(double lo, double hi, std::size_t n);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::size_t size() const { return n_; }
  double spacing() const { return h_; }
  double operator[](std::size_t i) const {
    return i + 1 == n_ ? hi_ : lo_ + h_ * static_cast<double>(i);
  }

  std::vector<double> points() const;

 private:
  double lo_, hi_;
  std::size_t n_;
  double h_;
};

enum class Parity { Even, Odd, None };
enum class Normalization { WeightedCosh2, FlatU, None };

const char* parity_name(Parity p);

struct WaveFunction {
  Grid1D grid{0.0, 1.0, 16};
  std::vector<double> values;
  std::vector<double> derivs;
  Parity parity = Parity::None;
  Normalization norm = Normalization::None;
};

enum class Direction { Forward, Backward };

//! Coefficient f of y'' = f(x) y.
using Coefficient = std::function<double(double)>;

//! Numerov march for y'' = f y on uniform spacing h.
/*! y[0] and y[1] are inputs; the rest of y is filled. f.size() == y.size().
    Throws NumericalError naming the index when f is not finite or when
    1 - h^2 f / 12 <= 0 (step too coarse for the local decay rate). */
void numerov_march(std::span<const double> f, double h, std::span<double> y);

//! Integrates y'' = f(x) y over the grid.
/*! Forward: y0 = y(lo), y1 = y(lo + h). Backward: y0 = y(hi), y1 = y(hi - h).
    Derivatives are filled by five-point differences. */
WaveFunction numerov_integrate(const Coefficient& f, const Grid1D& grid, double y0, double y1,
                               Direction direction = Direction::Forward);

//! Fourth-order first derivative (central inside, one-sided at the ends).
std::vector<double> five_point_derivative(std::span<const double> y, double h);

//! Fourth-order second derivative on interior points [2, n-3]; second-order
//! one-sided at the two outermost points on each side.
std::vector<double> five_point_second_derivative(std::span<const double> y, double h);

}  // namespace catenoid
