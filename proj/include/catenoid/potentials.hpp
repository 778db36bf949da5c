#pragma once

#include <string>
#include <vector>

#include "catenoid/charts.hpp"
#include "catenoid/geometry.hpp"

namespace catenoid {

//! Angular-momentum channel m (psi = e^{i m phi} Phi) and dimensionless energy
//! eps = 2 m0 E R^2 / hbar^2.
struct ChannelSpec {
  int m = 0;
  double eps = 0.0;
};

//! Whether eta-chart potentials are reported as V - E or as V with E = 1.
enum class EnergyConvention { VMinusE, UnitEnergy };

struct PotentialCurve {
  Chart chart = Chart::ZPhi;
  ChannelSpec channel;
  std::vector<double> grid;
  std::vector<double> values;
};

// --- zeta chart -------------------------------------------------------------

//! m^2 - eps cosh^2(zeta) - sech^2(zeta); RangeError for |zeta| > 350.
double v_zeta(const ChannelSpec& ch, double zeta);

//! Split of the same equation as -Phi'' + q Phi = eps w Phi.
double weighted_problem_q(int m, double zeta);  // m^2 - sech^2
double weighted_problem_w(double zeta);         // cosh^2

// --- eta chart --------------------------------------------------------------

//! Bracket B of Phi'' + Phi'/x + B Phi = 0 with x = eta + 1:
//! eps/4 - (m^2 - eps/2)/x^2 + (1/4)(eps/x^4 + 16/(x^2+1)^2).
double eta_bracket(const ChannelSpec& ch, const EtaCoordinate& ec);

struct EtaEquationCoefficients {
  double second = 1.0;
  double first = 0.0;   // 1/x
  double zeroth = 0.0;  // the bracket
};

EtaEquationCoefficients assembled_equation_coefficients(const ChannelSpec& ch,
                                                        const EtaCoordinate& ec);

//! V - E = -B (or V = 1 - B under EnergyConvention::UnitEnergy).
double v_eta(const ChannelSpec& ch, const EtaCoordinate& ec,
             EnergyConvention convention = EnergyConvention::VMinusE);

//! Large-eta limit of v_eta: -eps/4 for V - E.
double v_eta_asymptote(const ChannelSpec& ch,
                       EnergyConvention convention = EnergyConvention::VMinusE);

//! v_eta with its eta -> infinity constant removed.
double v_renormalized(const ChannelSpec& ch, const EtaCoordinate& ec,
                      EnergyConvention convention = EnergyConvention::VMinusE);

// --- arc chart ---------------------------------------------------------------

//! W(u) = [m^2(1+u^2) - 1/2 - u^2/4]/(1+u^2)^2, the potential of
//! -chi'' + W chi = eps chi after the Liouville amplitude map.
double v_scatter(int m, double u);

// --- Poschl-Teller reference family -----------------------------------------

struct PoschlTellerSpec {
  double lambda = 1.0;

  double strength() const { return lambda * (lambda + 1.0); }
  //! lambda >= 0 solving lambda (lambda + 1) = strength.
  static PoschlTellerSpec from_strength(double strength);
};

double poschl_teller_potential(const PoschlTellerSpec& spec, double zeta);

//! sinh^2(pi k) / (sinh^2(pi k) + cos^2((pi/2) sqrt(1 + 4 lambda(lambda+1)))).
double poschl_teller_transmission(const PoschlTellerSpec& spec, double k);

// --- curve sampling ----------------------------------------------------------

//! Chart-driven sampling of the channel potential on [lo, hi].
/*! ZPhi -> v_zeta; EtaPlus/EtaMinus -> v_eta or v_renormalized; Arc -> v_scatter.
    Parallel over grid points; values are ordered by grid index. */
PotentialCurve sample_potential(Chart chart, const ChannelSpec& ch, double lo, double hi,
                                std::size_t samples, bool renormalized = false,
                                EnergyConvention convention = EnergyConvention::VMinusE,
                                int workers = 0);

}  // namespace catenoid
