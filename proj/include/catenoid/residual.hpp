#pragma once

#include <functional>
#include <vector>

#include "catenoid/geometry.hpp"
#include "catenoid/numerov.hpp"
#include "catenoid/potentials.hpp"

namespace catenoid {

struct ResidualReport {
  std::vector<double> grid;
  std::vector<double> values;  // zero on the two outermost points at each end
  double max_abs = 0.0;
  double max_location = 0.0;
  double weighted_l2 = 0.0;  // sqrt(sum r^2 omega h)
};

//! Pointwise -Phi'' + V Phi with five-point second differences.
/*! norm_weight omega defaults to 1. */
ResidualReport residual(const WaveFunction& wave, const std::function<double(double)>& potential,
                        const std::function<double(double)>& norm_weight = {});

//! Channel residual in a given chart.
/*! ZPhi: -Phi'' + v_zeta Phi, omega = 1/cosh^2 (dual of the cosh^2 normalization).
    EtaPlus/EtaMinus: wave on an eta grid, residual Phi'' + Phi'/x + B Phi,
    omega = x^3/cosh^2 so the norm equals the ZPhi norm of the same function.
    Arc: wave chi on a u grid, -chi'' + (W - eps) chi, omega = 1. */
ResidualReport residual(const WaveFunction& wave, const ChannelSpec& ch, Chart chart);

}  // namespace catenoid
