#pragma once

#include "catenoid/bound_states.hpp"
#include "catenoid/charts.hpp"
#include "catenoid/residual.hpp"

namespace catenoid {

struct CrossChartOptions {
  double eta_step = 0.004;      // uniform spacing in eta
  double tol = 1e-12;           // bisection width on eps
  double tail_action = 36.0;
  double min_tail_action = 18.0;
  double agree_tolerance = 1e-6;
  double flag_threshold = 1e-4;
};

struct CrossChartReport {
  double eps_zeta = 0.0;
  double eps_eta_plus = 0.0;
  double eps_eta_minus = 0.0;
  double abs_difference = 0.0;
  //! Residual of the zeta-chart samples in the eta equation via
  //! d^2/dzeta^2 = x d/dx (x d/dx); norm in the zeta-equivalent measure.
  double mapped_residual_max = 0.0;
  double mapped_residual_weighted = 0.0;
  //! Residual of the eta-chart re-solve in its own chart.
  double eta_residual_weighted = 0.0;
  double zeta_residual_weighted = 0.0;
  bool agree = false;
  bool flagged = false;  // |difference| above flag_threshold
  WaveFunction eta_wave;  // PLUS patch, on an eta grid
};

//! Eigenvalue of the eta-chart channel equation near a guess, by shooting in
//! x = eta + 1 on psi = sqrt(x) Phi. Parity fixes the condition at eta = 0
//! (Phi_x = 0 or Phi = 0). Fills *wave with Phi on the eta grid if given.
double eta_chart_eigenvalue(int m, double eps_guess, Parity parity, Patch patch,
                            const CrossChartOptions& opts = {}, WaveFunction* wave = nullptr);

//! Residual of zeta-grid samples (zeta >= 0 half) in the eta-chart equation.
ResidualReport mapped_eta_residual(const WaveFunction& zeta_wave, const ChannelSpec& ch);

//! Maps a converged zeta-chart state into the eta chart and re-solves there.
/*! Disagreement above flag_threshold is reported through `flagged`, not thrown. */
CrossChartReport cross_chart_check(const BoundState& bound, const CrossChartOptions& opts = {});

}  // namespace catenoid
