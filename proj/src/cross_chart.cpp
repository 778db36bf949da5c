#include "catenoid/cross_chart.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catenoid/errors.hpp"
#include "catenoid/shooting.hpp"

namespace catenoid {

namespace {

// psi'' = F psi with Phi = x^{-1/2} psi removing the Phi'/x term.
double psi_coefficient(int m, double x, double eps, Patch patch) {
  const double b = eta_bracket(ChannelSpec{m, eps}, EtaCoordinate{patch, x - 1.0});
  return -(b + 0.25 / (x * x));
}

detail::HalfLineProblem eta_problem(int m, double eps_guess, Patch patch,
                                    const CrossChartOptions& o) {
  if (!(eps_guess < 0.0)) throw DomainError("eta re-solve needs a negative eigenvalue guess");
  detail::HalfLineProblem p;
  p.x0 = 1.0;
  p.h = o.eta_step;
  const double decay = 0.5 * std::sqrt(-eps_guess);
  const double extent = 40.0 + 1.5 * (o.tail_action + 4.0) / decay;
  p.max_points = static_cast<std::size_t>(std::ceil(extent / o.eta_step)) + 1;
  p.coefficient = [m, patch](double x, double eps) { return psi_coefficient(m, x, eps, patch); };
  // Taylor start at x = 1 to fifth order; F' and F'' by one-sided differences.
  p.start = [m, patch](Parity parity, double eps, double h, double f0, double) {
    const double psi0 = parity == Parity::Odd ? 0.0 : 1.0;
    const double dpsi0 = parity == Parity::Odd ? 1.0 : 0.5;  // Phi_x(1) = 0 <=> psi' = psi/2
    const double d = 1e-3;
    const double f1 = psi_coefficient(m, 1.0 + d, eps, patch);
    const double f2 = psi_coefficient(m, 1.0 + 2.0 * d, eps, patch);
    const double fp = (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * d);
    const double fpp = (f0 - 2.0 * f1 + f2) / (d * d);
    const double y2 = f0 * psi0;
    const double y3 = fp * psi0 + f0 * dpsi0;
    const double y4 = fpp * psi0 + 2.0 * fp * dpsi0 + f0 * y2;
    const double psi1 = psi0 + h * dpsi0 + h * h / 2.0 * y2 + h * h * h / 6.0 * y3 +
                        h * h * h * h / 24.0 * y4;
    return std::pair<double, double>{psi0, psi1};
  };
  p.tail_action = o.tail_action;
  p.min_tail_action = o.min_tail_action;
  return p;
}

}  // namespace

double eta_chart_eigenvalue(int m, double eps_guess, Parity parity, Patch patch,
                            const CrossChartOptions& opts, WaveFunction* wave) {
  if (parity == Parity::None) throw DomainError("eta re-solve needs an even or odd state");
  const detail::HalfLineProblem p = eta_problem(m, eps_guess, patch, opts);
  auto det = [&](double eps) { return detail::shoot(p, parity, eps).determinant; };

  double delta = 1e-4 * std::max(1.0, std::abs(eps_guess));
  double lo = eps_guess - delta, hi = std::min(eps_guess + delta, 0.5 * eps_guess);
  double dlo = det(lo), dhi = det(hi);
  for (int it = 0; it < 12 && (dlo < 0.0) == (dhi < 0.0); ++it) {
    delta *= 4.0;
    lo = eps_guess - delta;
    hi = std::min(eps_guess + delta, 0.5 * eps_guess);
    dlo = det(lo);
    dhi = det(hi);
  }
  if ((dlo < 0.0) == (dhi < 0.0))
    throw NumericalError("no eta-chart eigenvalue bracketed near eps = " + std::to_string(eps_guess));
  const std::vector<double> roots = detail::bracketed_roots(det, {lo, hi}, opts.tol);
  if (roots.empty()) throw NumericalError("eta-chart bisection failed");
  const double eps = roots.front();

  if (wave != nullptr) {
    std::vector<double> psi;
    const detail::Shot shot = detail::shoot(p, parity, eps, &psi);
    const std::size_t n = std::max<std::size_t>(shot.end + 3, 16);
    const Grid1D grid(0.0, p.h * static_cast<double>(n - 1), n);
    wave->grid = grid;
    wave->values.assign(n, 0.0);
    for (std::size_t i = 0; i < n && i < psi.size(); ++i)
      wave->values[i] = psi[i] / std::sqrt(1.0 + grid[i]);
    // Same normalization as the zeta chart: both patches, cosh^2 dzeta = cosh^2 dx / x.
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const EtaCoordinate ec{patch, grid[i]};
      const double c = cosh_from_eta(ec);
      sum += wave->values[i] * wave->values[i] * c * c / ec.shifted();
    }
    const double s = 1.0 / std::sqrt(2.0 * sum * p.h);
    for (double& v : wave->values) v *= s;
    wave->derivs = five_point_derivative(wave->values, p.h);
    wave->parity = parity;
    wave->norm = Normalization::WeightedCosh2;
  }
  return eps;
}

ResidualReport mapped_eta_residual(const WaveFunction& zeta_wave, const ChannelSpec& ch) {
  const std::size_t n = zeta_wave.values.size();
  const double h = zeta_wave.grid.spacing();
  const std::vector<double> d1 = five_point_derivative(zeta_wave.values, h);
  const std::vector<double> d2 = five_point_second_derivative(zeta_wave.values, h);
  ResidualReport r;
  double sum = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double z = zeta_wave.grid[i];
    if (z < 0.0) continue;
    const EtaCoordinate ec = to_eta(z);
    const double x = ec.shifted();
    // Phi_x = Phi_z / x, Phi_xx = (Phi_zz - Phi_z) / x^2.
    const double phi_x = d1[i] / x;
    const double phi_xx = (d2[i] - d1[i]) / (x * x);
    const EtaEquationCoefficients c = assembled_equation_coefficients(ch, ec);
    const double v = c.second * phi_xx + c.first * phi_x + c.zeroth * zeta_wave.values[i];
    r.grid.push_back(z);
    r.values.push_back(v);
    if (std::abs(v) > r.max_abs) {
      r.max_abs = std::abs(v);
      r.max_location = z;
    }
    const double ch2 = cosh_from_eta(ec) * cosh_from_eta(ec);
    sum += x * x * x * x * v * v / ch2;  // zeta measure: (x^2 r)^2 / cosh^2 dzeta
  }
  r.weighted_l2 = std::sqrt(sum * h);
  return r;
}

CrossChartReport cross_chart_check(const BoundState& bound, const CrossChartOptions& opts) {
  CrossChartReport rep;
  const ChannelSpec ch = bound.channel;
  rep.eps_zeta = ch.eps;
  rep.eps_eta_plus = eta_chart_eigenvalue(ch.m, ch.eps, bound.wave.parity, Patch::Plus, opts,
                                          &rep.eta_wave);
  rep.eps_eta_minus = eta_chart_eigenvalue(ch.m, ch.eps, bound.wave.parity, Patch::Minus, opts);
  rep.abs_difference = std::abs(rep.eps_zeta - rep.eps_eta_plus);
  const ResidualReport mapped = mapped_eta_residual(bound.wave, ch);
  rep.mapped_residual_max = mapped.max_abs;
  rep.mapped_residual_weighted = mapped.weighted_l2;
  rep.eta_residual_weighted =
      residual(rep.eta_wave, ChannelSpec{ch.m, rep.eps_eta_plus}, Chart::EtaPlus).weighted_l2;
  rep.zeta_residual_weighted = residual(bound.wave, ch, Chart::ZPhi).weighted_l2;
  rep.agree = rep.abs_difference < opts.agree_tolerance;
  rep.flagged = rep.abs_difference > opts.flag_threshold;
  return rep;
}

}  // namespace catenoid
