#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "catenoid/geometry.hpp"

namespace catenoid {

//! Patch of the two-chart eta atlas. PLUS covers zeta >= 0, MINUS zeta <= 0.
enum class Patch { Plus, Minus };

const char* patch_name(Patch patch);

//! eta+ = e^zeta - 1 on PLUS; on MINUS we store |eta-| = e^{-zeta} - 1 so the
//! two patches carry literally the same equations.
struct EtaCoordinate {
  Patch patch = Patch::Plus;
  double eta = 0.0;  // >= 0

  //! x = eta + 1 = e^{|zeta|}
  double shifted() const { return eta + 1.0; }
};

//! ζ = 0 maps to PLUS.
EtaCoordinate to_eta(double zeta);
double from_eta(const EtaCoordinate& ec);

//! (x^2+1)^2/(4x^4) deta^2 + (1/4)((x^2+1)/x)^2 dphi^2 with x = eta + 1.
MetricSample eta_metric(const EtaCoordinate& ec);

//! cosh(zeta) = (x^2 + 1)/(2x).
double cosh_from_eta(const EtaCoordinate& ec);

//! d^2/dzeta^2 = second * d^2/deta^2 + first * d/deta, i.e. x d/dx (x d/dx).
struct ZetaDerivativeOperator {
  double second = 1.0;  // x^2
  double first = 0.0;   // x
};

ZetaDerivativeOperator zeta_derivative_operator(const EtaCoordinate& ec);

//! Arc chart u = sinh(zeta). cosh^2(zeta) dzeta = cosh(zeta) du, and the
//! Liouville amplitude chi = (1+u^2)^{1/4} Phi removes the first-derivative term.
struct ArcCoordinate {
  double u = 0.0;
  double lfactor = 1.0;  // (1+u^2)^{-1/4}
};

ArcCoordinate to_arc(double zeta);
double zeta_from_arc(double u);

//! chi_i = (1+u_i^2)^{1/4} Phi_i with u_i = sinh(zeta_i).
std::vector<double> liouville_transform(std::span<const double> zeta,
                                        std::span<const double> phi);
//! Inverse of liouville_transform on the same zeta grid.
std::vector<double> inverse_liouville_transform(std::span<const double> zeta,
                                                std::span<const double> chi);

struct AsymptoticFit {
  double leading = 0.0;       // fitted limit coefficient
  double std_error = 0.0;
  double ci_halfwidth = 0.0;  // 95% normal-approximation interval
  double constant = 0.0;      // additive constant (angular fit only)
  std::size_t samples = 0;
};

//! Coefficient fits of the eta-metric at large eta.
struct AsymptoticAudit {
  double eta_max = 0.0;
  std::size_t samples = 0;
  AsymptoticFit radial;   // g_etaeta -> c1
  AsymptoticFit angular;  // g_phiphi ~ c2 x^2 + const
  // Series of (x^2+1)^2/(4x^2) = x^2/4 + 1/2 + 1/(4x^2).
  double series_radial = 0.25;
  double series_angular_leading = 0.25;
  double series_angular_constant = 0.5;
  double stated_radial = 0.25;   // claimed dη^2 coefficient
  double stated_angular = 0.5;   // claimed dφ^2 prefactor
};

//! Fits on the last decade of log-spaced eta in [1, eta_max]; eta_max > 10.
AsymptoticAudit asymptotic_audit(double eta_max, std::size_t samples = 400);

}  // namespace catenoid
