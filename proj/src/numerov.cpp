#include "catenoid/numerov.hpp"

#include <cmath>
#include <string>

#include "catenoid/errors.hpp"

namespace catenoid {

Grid1D::Grid1D(double lo, double hi, std::size_t n) : lo_(lo), hi_(hi), n_(n) {
  if (n < 16) throw DomainError("Grid1D needs at least 16 samples");
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi))
    throw DomainError("Grid1D needs finite lo < hi");
  h_ = (hi - lo) / static_cast<double>(n - 1);
}

std::vector<double> Grid1D::points() const {
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[i] = (*this)[i];
  return x;
}

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::None: return "none";
  }
  return "none";
}

void numerov_march(std::span<const double> f, double h, std::span<double> y) {
  if (f.size() != y.size()) throw DomainError("numerov_march: size mismatch");
  if (y.size() < 2) return;
  const double h2 = h * h;
  auto weight = [&](std::size_t i) {
    if (!std::isfinite(f[i]))
      throw NumericalError("non-finite potential sample at index " + std::to_string(i));
    const double a = 1.0 - h2 * f[i] / 12.0;
    if (!(a > 0.0))
      throw NumericalError("Numerov step too coarse at index " + std::to_string(i) +
                           " (h^2 f / 12 >= 1)");
    return a;
  };
  // Summed form: march the first difference d = z_{i+1} - z_i so the small
  // increment h^2 f z / a is never rounded against 2 z.
  double a_cur = weight(1);
  double z_cur = a_cur * y[1];
  double d = z_cur - weight(0) * y[0];
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    const double a_next = weight(i + 1);
    d += h2 * f[i] / a_cur * z_cur;
    z_cur += d;
    y[i + 1] = z_cur / a_next;
    if (!std::isfinite(y[i + 1]))
      throw NumericalError("Numerov solution overflowed at index " + std::to_string(i + 1));
    a_cur = a_next;
  }
}

WaveFunction numerov_integrate(const Coefficient& f, const Grid1D& grid, double y0, double y1,
                               Direction direction) {
  const std::size_t n = grid.size();
  std::vector<double> fs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = direction == Direction::Forward ? grid[i] : grid[n - 1 - i];
    fs[i] = f(x);
    if (!std::isfinite(fs[i]))
      throw NumericalError("non-finite potential sample at x = " + std::to_string(x));
  }
  ys[0] = y0;
  ys[1] = y1;
  numerov_march(fs, grid.spacing(), ys);

  WaveFunction w{grid, {}, {}, Parity::None, Normalization::None};
  if (direction == Direction::Forward) {
    w.values = std::move(ys);
  } else {
    w.values.assign(ys.rbegin(), ys.rend());
  }
  w.derivs = five_point_derivative(w.values, grid.spacing());
  return w;
}

std::vector<double> five_point_derivative(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  std::vector<double> d(n, 0.0);
  if (n < 5) throw DomainError("five_point_derivative needs at least 5 samples");
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = (y[i - 2] - 8.0 * y[i - 1] + 8.0 * y[i + 1] - y[i + 2]) / (12.0 * h);
  // One-sided fourth-order formulas for the two end points on each side.
  auto fwd = [&](std::size_t i) {
    return (-25.0 * y[i] + 48.0 * y[i + 1] - 36.0 * y[i + 2] + 16.0 * y[i + 3] - 3.0 * y[i + 4]) /
           (12.0 * h);
  };
  auto skew = [&](std::size_t i) {
    return (-3.0 * y[i - 1] - 10.0 * y[i] + 18.0 * y[i + 1] - 6.0 * y[i + 2] + y[i + 3]) /
           (12.0 * h);
  };
  d[0] = fwd(0);
  d[1] = skew(1);
  d[n - 1] = -(-25.0 * y[n - 1] + 48.0 * y[n - 2] - 36.0 * y[n - 3] + 16.0 * y[n - 4] -
               3.0 * y[n - 5]) / (12.0 * h);
  d[n - 2] = -(-3.0 * y[n - 1] - 10.0 * y[n - 2] + 18.0 * y[n - 3] - 6.0 * y[n - 4] +
               y[n - 5]) / (12.0 * h);
  return d;
}

std::vector<double> five_point_second_derivative(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  if (n < 5) throw DomainError("five_point_second_derivative needs at least 5 samples");
  std::vector<double> d(n, 0.0);
  const double h2 = h * h;
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = (-y[i - 2] + 16.0 * y[i - 1] - 30.0 * y[i] + 16.0 * y[i + 1] - y[i + 2]) / (12.0 * h2);
  d[1] = (y[0] - 2.0 * y[1] + y[2]) / h2;
  d[n - 2] = (y[n - 3] - 2.0 * y[n - 2] + y[n - 1]) / h2;
  d[0] = (2.0 * y[0] - 5.0 * y[1] + 4.0 * y[2] - y[3]) / h2;
  d[n - 1] = (2.0 * y[n - 1] - 5.0 * y[n - 2] + 4.0 * y[n - 3] - y[n - 4]) / h2;
  return d;
}

}  // namespace catenoid
