#pragma once

#include <complex>
#include <cstddef>
#include <functional>

#include "catenoid/potentials.hpp"

namespace catenoid {

struct ScatteringOptions {
  double u_max = 0.0;   // 0: max(40, 20/sqrt(eps))
  double step = 0.0;    // 0: min(0.01, 0.05/k)
  //! Match to Riccati-Hankel waves sqrt(pi k u/2) H_|m|(k u) instead of plane
  //! waves; absorbs the (m^2 - 1/4)/u^2 tail of the arc-chart potential.
  bool tail_correction = false;
  double failure_threshold = 1e-4;
};

struct ScatteringResult {
  ChannelSpec channel;
  double k = 0.0;
  std::complex<double> r_amp;
  std::complex<double> t_amp;
  double unitarity_defect = 0.0;
  double u_max = 0.0;
  std::size_t samples = 0;

  double reflection() const { return std::norm(r_amp); }
  double transmission() const { return std::norm(t_amp); }
};

double default_u_max(double eps);

//! Catenoid channel m at eps > 0: -chi'' + W_m chi = eps chi across [-u_max, u_max].
ScatteringResult transmission(int m, double eps, const ScatteringOptions& opts = {});

//! Same transfer integration for an arbitrary real potential of u.
/*! hankel_order is the Bessel order used when opts.tail_correction is set. */
ScatteringResult transmission(const std::function<double(double)>& potential, double eps,
                              const ScatteringOptions& opts = {}, int hankel_order = 0);

}  // namespace catenoid
