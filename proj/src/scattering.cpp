#include "catenoid/scattering.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "catenoid/errors.hpp"

namespace catenoid {

namespace {

using cd = std::complex<double>;

// Riccati-Hankel h+(x) = sqrt(pi x / 2) (J_nu(x) + i Y_nu(x)) ~ exp(i(x - nu pi/2 - pi/4)).
cd riccati_hankel(int nu, double x) {
  const double s = std::sqrt(0.5 * std::numbers::pi * x);
  return s * cd(std::cyl_bessel_j(static_cast<double>(nu), x),
                std::cyl_neumann(static_cast<double>(nu), x));
}

// Solve z0 = A f0 + B g0, z1 = A f1 + B g1.
std::pair<cd, cd> decompose(cd z0, cd z1, cd f0, cd f1, cd g0, cd g1) {
  const cd det = f0 * g1 - f1 * g0;
  return {(z0 * g1 - z1 * g0) / det, (f0 * z1 - f1 * z0) / det};
}

}  // namespace

double default_u_max(double eps) {
  if (!(eps > 0.0)) throw DomainError("scattering needs eps > 0");
  return std::max(40.0, 20.0 / std::sqrt(eps));
}

ScatteringResult transmission(const std::function<double(double)>& potential, double eps,
                              const ScatteringOptions& opts, int hankel_order) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("scattering needs eps > 0");
  const double k = std::sqrt(eps);
  const double u_max = opts.u_max > 0.0 ? opts.u_max : default_u_max(eps);
  const double target = opts.step > 0.0 ? opts.step : std::min(0.01, 0.05 / k);
  const auto intervals = static_cast<std::size_t>(std::ceil(2.0 * u_max / target));
  const std::size_t n = intervals + 1;
  const double h = 2.0 * u_max / static_cast<double>(intervals);
  const double h2 = h * h;
  auto u_at = [&](std::size_t i) { return -u_max + h * static_cast<double>(i); };

  // Numerov in z_i = (1 - h^2 f_i / 12) chi_i with f = W - eps. The z-form
  // Wronskian conj(z_i) z_{i+1} - c.c. is conserved exactly by the recurrence.
  std::vector<double> f(n), a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = potential(u_at(i));
    if (!std::isfinite(v))
      throw NumericalError("non-finite potential sample at u = " + std::to_string(u_at(i)));
    f[i] = v - eps;
    a[i] = 1.0 - h2 * f[i] / 12.0;
    if (!(a[i] > 0.0)) throw NumericalError("scattering step too coarse");
  }

  // Backward Numerov march in summed form; on return z_cur, z_next hold
  // z_0, z_1.
  auto march_back = [&](cd& z_cur, cd& z_next) {
    cd d = z_cur - z_next;
    for (std::size_t i = n - 2; i-- > 0;) {
      d += h2 * f[i + 1] / a[i + 1] * z_cur;
      z_next = z_cur;
      z_cur += d;
    }
  };

  cd z_left0, z_left1, in0, in1, out0, out1;
  if (!opts.tail_correction) {
    // Discrete plane waves of the free Numerov recurrence.
    const double c = (1.0 - 5.0 * h2 * eps / 12.0) / (1.0 + h2 * eps / 12.0);
    if (!(std::abs(c) < 1.0)) throw NumericalError("scattering step too coarse for k");
    const double kappa = std::acos(c) / h;
    auto wave = [&](double sign, std::size_t i) { return std::exp(cd(0.0, sign * kappa * u_at(i))); };
    cd z_next = wave(1.0, n - 1);
    cd z_cur = wave(1.0, n - 2);
    march_back(z_cur, z_next);
    z_left0 = z_cur;
    z_left1 = z_next;
    in0 = wave(1.0, 0);
    in1 = wave(1.0, 1);
    out0 = wave(-1.0, 0);
    out1 = wave(-1.0, 1);
  } else {
    // Match chi (not z) to Riccati-Hankel functions of k|u|.
    auto hp = [&](std::size_t i) { return riccati_hankel(hankel_order, k * std::abs(u_at(i))); };
    cd z_next = a[n - 1] * hp(n - 1);
    cd z_cur = a[n - 2] * hp(n - 2);
    march_back(z_cur, z_next);
    z_left0 = z_cur / a[0];
    z_left1 = z_next / a[1];
    // Left of the throat: incoming ~ e^{iku} = conj(h+), reflected ~ h+.
    in0 = std::conj(hp(0));
    in1 = std::conj(hp(1));
    out0 = hp(0);
    out1 = hp(1);
  }

  const auto [amp_in, amp_out] = decompose(z_left0, z_left1, in0, in1, out0, out1);
  ScatteringResult res;
  res.channel = ChannelSpec{0, eps};
  res.k = k;
  res.t_amp = 1.0 / amp_in;
  res.r_amp = amp_out / amp_in;
  res.unitarity_defect = std::abs(res.reflection() + res.transmission() - 1.0);
  res.u_max = u_max;
  res.samples = n;
  if (!std::isfinite(res.unitarity_defect) || res.unitarity_defect > opts.failure_threshold)
    throw NumericalError("scattering unitarity defect " + std::to_string(res.unitarity_defect) +
                         " exceeds " + std::to_string(opts.failure_threshold) +
                         "; refine the step or enlarge u_max");
  return res;
}

ScatteringResult transmission(int m, double eps, const ScatteringOptions& opts) {
  ScatteringResult res =
      transmission([m](double u) { return v_scatter(m, u); }, eps, opts, std::abs(m));
  res.channel.m = m;
  return res;
}

}  // namespace catenoid
