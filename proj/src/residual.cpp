#include "catenoid/residual.hpp"

#include <cmath>
#include <string>

#include "catenoid/charts.hpp"
#include "catenoid/errors.hpp"

namespace catenoid {

namespace {

void finish(ResidualReport& r, const Grid1D& grid, const std::function<double(double)>& omega) {
  const double h = grid.spacing();
  double sum = 0.0;
  for (std::size_t i = 2; i + 2 < r.values.size(); ++i) {
    const double v = r.values[i];
    if (std::abs(v) > r.max_abs) {
      r.max_abs = std::abs(v);
      r.max_location = r.grid[i];
    }
    if (v != 0.0) sum += v * v * (omega ? omega(r.grid[i]) : 1.0);
  }
  r.weighted_l2 = std::sqrt(sum * h);
}

}  // namespace

ResidualReport residual(const WaveFunction& wave, const std::function<double(double)>& potential,
                        const std::function<double(double)>& norm_weight) {
  const std::size_t n = wave.values.size();
  if (n != wave.grid.size()) throw DomainError("wave values do not match the grid");
  const std::vector<double> d2 = five_point_second_derivative(wave.values, wave.grid.spacing());
  ResidualReport r;
  r.grid = wave.grid.points();
  r.values.assign(n, 0.0);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double phi = wave.values[i];
    r.values[i] = -d2[i] + (phi != 0.0 ? potential(r.grid[i]) * phi : 0.0);
  }
  finish(r, wave.grid, norm_weight);
  return r;
}

ResidualReport residual(const WaveFunction& wave, const ChannelSpec& ch, Chart chart) {
  switch (chart) {
    case Chart::ZPhi:
      return residual(
          wave, [ch](double z) { return v_zeta(ch, z); },
          [](double z) {
            const double c = std::cosh(z);
            return 1.0 / (c * c);
          });
    case Chart::Arc:
      return residual(wave, [ch](double u) { return v_scatter(ch.m, u) - ch.eps; });
    case Chart::EtaPlus:
    case Chart::EtaMinus: {
      const Patch patch = chart == Chart::EtaPlus ? Patch::Plus : Patch::Minus;
      const std::size_t n = wave.values.size();
      if (wave.grid.lo() < 0.0) throw DomainError("eta-chart wave must live on eta >= 0");
      const double h = wave.grid.spacing();
      const std::vector<double> d1 = five_point_derivative(wave.values, h);
      const std::vector<double> d2 = five_point_second_derivative(wave.values, h);
      ResidualReport r;
      r.grid = wave.grid.points();
      r.values.assign(n, 0.0);
      for (std::size_t i = 2; i + 2 < n; ++i) {
        const EtaCoordinate ec{patch, r.grid[i]};
        const EtaEquationCoefficients c = assembled_equation_coefficients(ch, ec);
        r.values[i] = c.second * d2[i] + c.first * d1[i] + c.zeroth * wave.values[i];
      }
      finish(r, wave.grid, [patch](double eta) {
        const EtaCoordinate ec{patch, eta};
        const double x = ec.shifted();
        const double c = cosh_from_eta(ec);
        return x * x * x / (c * c);
      });
      return r;
    }
    default:
      throw DomainError(std::string("no channel residual in chart ") + chart_name(chart));
  }
}

}  // namespace catenoid
