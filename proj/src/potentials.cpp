#include "catenoid/potentials.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "catenoid/errors.hpp"
#include "catenoid/parallel.hpp"

namespace catenoid {

namespace {

double guarded_cosh(double zeta) {
  if (!std::isfinite(zeta)) throw DomainError("zeta must be finite");
  if (std::abs(zeta) > kZetaOverflowLimit)
    throw RangeError("|zeta| > 350 overflows cosh^2; use the eta or arc chart");
  return std::cosh(zeta);
}

}  // namespace

double v_zeta(const ChannelSpec& ch, double zeta) {
  const double c = guarded_cosh(zeta);
  const double m2 = static_cast<double>(ch.m) * ch.m;
  return m2 - ch.eps * c * c - 1.0 / (c * c);
}

double weighted_problem_q(int m, double zeta) {
  const double c = guarded_cosh(zeta);
  return static_cast<double>(m) * m - 1.0 / (c * c);
}

double weighted_problem_w(double zeta) {
  const double c = guarded_cosh(zeta);
  return c * c;
}

double eta_bracket(const ChannelSpec& ch, const EtaCoordinate& ec) {
  if (!(ec.eta >= 0.0)) throw DomainError("eta must be nonnegative");
  const double x = ec.shifted();
  const double x2 = x * x;
  const double m2 = static_cast<double>(ch.m) * ch.m;
  const double p = x2 + 1.0;
  return ch.eps / 4.0 - (m2 - ch.eps / 2.0) / x2 +
         0.25 * (ch.eps / (x2 * x2) + 16.0 / (p * p));
}

EtaEquationCoefficients assembled_equation_coefficients(const ChannelSpec& ch,
                                                        const EtaCoordinate& ec) {
  return EtaEquationCoefficients{1.0, 1.0 / ec.shifted(), eta_bracket(ch, ec)};
}

double v_eta(const ChannelSpec& ch, const EtaCoordinate& ec, EnergyConvention convention) {
  const double v_minus_e = -eta_bracket(ch, ec);
  return convention == EnergyConvention::UnitEnergy ? v_minus_e + 1.0 : v_minus_e;
}

double v_eta_asymptote(const ChannelSpec& ch, EnergyConvention convention) {
  const double v_minus_e = -ch.eps / 4.0;
  return convention == EnergyConvention::UnitEnergy ? v_minus_e + 1.0 : v_minus_e;
}

double v_renormalized(const ChannelSpec& ch, const EtaCoordinate& ec,
                      EnergyConvention convention) {
  // Subtract the constant eps/4 inside the bracket rather than the evaluated
  // asymptote so large-eta values go to zero without cancellation.
  if (!(ec.eta >= 0.0)) throw DomainError("eta must be nonnegative");
  const double x = ec.shifted();
  const double x2 = x * x;
  const double m2 = static_cast<double>(ch.m) * ch.m;
  const double p = x2 + 1.0;
  const double v_minus_e =
      (m2 - ch.eps / 2.0) / x2 - 0.25 * (ch.eps / (x2 * x2) + 16.0 / (p * p));
  return convention == EnergyConvention::UnitEnergy ? v_minus_e + 1.0 : v_minus_e;
}

double v_scatter(int m, double u) {
  if (!std::isfinite(u)) throw DomainError("u must be finite");
  const double m2 = static_cast<double>(m) * m;
  const double p = 1.0 + u * u;
  return (m2 * p - 0.5 - 0.25 * u * u) / (p * p);
}

PoschlTellerSpec PoschlTellerSpec::from_strength(double strength) {
  if (!(strength >= 0.0)) throw DomainError("Poschl-Teller strength must be nonnegative");
  return PoschlTellerSpec{0.5 * (std::sqrt(1.0 + 4.0 * strength) - 1.0)};
}

double poschl_teller_potential(const PoschlTellerSpec& spec, double zeta) {
  if (!(spec.lambda >= 0.0)) throw DomainError("lambda must be nonnegative");
  const double c = std::cosh(zeta);
  return -spec.strength() / (c * c);
}

double poschl_teller_transmission(const PoschlTellerSpec& spec, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("wavenumber k must be positive");
  if (!(spec.lambda >= 0.0)) throw DomainError("lambda must be nonnegative");
  if (spec.lambda == std::floor(spec.lambda)) return 1.0;
  const double sh = std::sinh(std::numbers::pi * k);
  const double c = std::cos(0.5 * std::numbers::pi * std::sqrt(1.0 + 4.0 * spec.strength()));
  return sh * sh / (sh * sh + c * c);
}

PotentialCurve sample_potential(Chart chart, const ChannelSpec& ch, double lo, double hi,
                                std::size_t samples, bool renormalized,
                                EnergyConvention convention, int workers) {
  if (samples < 2) throw DomainError("curve sampling needs at least 2 samples");
  if (!(hi > lo)) throw DomainError("curve range must satisfy lo < hi");
  const bool eta_chart = chart == Chart::EtaPlus || chart == Chart::EtaMinus;
  if (eta_chart && lo < 0.0) throw DomainError("eta range must be nonnegative");
  if (!(eta_chart || chart == Chart::ZPhi || chart == Chart::Arc))
    throw DomainError(std::string("no channel potential in chart ") + chart_name(chart));

  PotentialCurve curve;
  curve.chart = chart;
  curve.channel = ch;
  curve.grid.resize(samples);
  const double step = (hi - lo) / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i)
    curve.grid[i] = (i + 1 == samples) ? hi : lo + step * static_cast<double>(i);

  const Patch patch = chart == Chart::EtaMinus ? Patch::Minus : Patch::Plus;
  auto eval = [&](double c) {
    switch (chart) {
      case Chart::ZPhi: return v_zeta(ch, c);
      case Chart::Arc: return v_scatter(ch.m, c);
      default:
        return renormalized ? v_renormalized(ch, EtaCoordinate{patch, c}, convention)
                            : v_eta(ch, EtaCoordinate{patch, c}, convention);
    }
  };
  // Validate serially so a domain error surfaces before the parallel region.
  eval(curve.grid.front());
  eval(curve.grid.back());
  curve.values = parallel::map_omp(curve.grid, eval, workers, 1024);
  return curve;
}

}  // namespace catenoid
