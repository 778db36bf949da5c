#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace catenoid {

//! Catenoid of throat radius R viewed as the theta0-section of a wormhole.
/*! The section scale a = sin(theta0) rescales the throat to aR. a = 0 is a
    valid value to hold but every geometric evaluation on it throws
    DegenerateSectionError. */
class CatenoidShape {
 public:
  explicit CatenoidShape(double radius, double section_scale = 1.0);

  static CatenoidShape from_section_angle(double radius, double theta0);

  double radius() const { return radius_; }
  double section_scale() const { return section_scale_; }
  bool degenerate() const { return section_scale_ == 0.0; }
  bool equatorial() const { return section_scale_ == 1.0; }

  //! aR; throws DegenerateSectionError for a = 0.
  double effective_radius() const;

 private:
  double radius_;
  double section_scale_;
};

//! Mass, hbar and the length unit used for the energy <-> eps conversion.
class PhysicalScales {
 public:
  PhysicalScales(double mass = 1.0, double hbar = 1.0, double radius = 1.0);

  double mass() const { return mass_; }
  double hbar() const { return hbar_; }
  double radius() const { return radius_; }

  //! eps = 2 m0 E R^2 / hbar^2
  double to_dimensionless(double energy) const;
  double to_physical(double eps) const;

 private:
  double mass_;
  double hbar_;
  double radius_;
};

enum class Chart { ZPhi, RhoPhi, RWormhole, EtaPlus, EtaMinus, Arc };

const char* chart_name(Chart chart);

struct ChartPoint {
  Chart chart = Chart::ZPhi;
  double c1 = 0.0;   // zeta, rho, r, |eta| or u depending on chart
  double phi = 0.0;  // azimuth in [0, 2pi)
};

struct MetricSample {
  double g11 = 0.0;
  double g22 = 0.0;
  double sqrt_g = 0.0;

  static MetricSample from_components(double g11, double g22);
};

struct CurvatureSample {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double mean = 0.0;      // H
  double gaussian = 0.0;  // K
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Largest |zeta| at which cosh and cosh^2 are evaluated directly.
inline constexpr double kZetaOverflowLimit = 350.0;

// RHO_PHI evaluations closer than this (relative to aR) to the throat are
// refused; use the Z_PHI chart there.
inline constexpr double kThroatCollar = 1e-6;

//! Point (aR cosh(zeta) cos(phi), aR cosh(zeta) sin(phi), aR zeta).
Vec3 embed_catenoid(const CatenoidShape& shape, double zeta, double phi);

//! Metric components in the Z_PHI or RHO_PHI chart.
/*! Z_PHI: g11 = cosh^2(zeta) (the dz^2 coefficient), g22 = (aR)^2 cosh^2(zeta).
    RHO_PHI: g11 = rho^2/(rho^2 - (aR)^2), g22 = rho^2. */
MetricSample catenoid_metric(const CatenoidShape& shape, const ChartPoint& point);

//! Line element of the theta0-section of the wormhole in (r, phi).
MetricSample wormhole_section_metric(double b0, double theta0, double r);

//! Embedding profile z(r) = b0 arccosh(r/b0) of the upper branch (l >= 0).
double wormhole_profile(double b0, double r);

//! Proper radial distance l = +sqrt(r^2 - b0^2) on the upper branch.
double wormhole_proper_distance(double b0, double r);

struct EquivalenceAudit {
  double b0 = 0.0;
  std::size_t samples = 0;
  double max_radial_deviation = 0.0;   // |(dl/dr)^2 - g_rr| / g_rr
  double max_angular_deviation = 0.0;  // |(b0^2 + l^2) - r^2| / r^2
  double max_relative_deviation = 0.0;
  double worst_r = 0.0;
};

//! Compares the wormhole line element dl^2 + (b0^2 + l^2) dphi^2 pulled back
//! through l^2 = r^2 - b0^2 against the catenoid form in (r, phi).
EquivalenceAudit equivalence_audit(double b0, std::span<const double> r_values);

CurvatureSample curvature(const CatenoidShape& shape, double zeta);

//! The da Costa potential evaluated three ways.
struct GeometricPotentialForms {
  double closed_form = 0.0;        // -(hbar^2 / 2 m0 (aR)^2) sech^4
  double mean_gaussian = 0.0;      // -(hbar^2 / 2 m0)(H^2 - K)
  double principal_split = 0.0;    // -(hbar^2 / 8 m0)(kappa1 - kappa2)^2
};

GeometricPotentialForms geometric_potential_forms(const CatenoidShape& shape,
                                                  const PhysicalScales& scales,
                                                  double zeta);

//! -(hbar^2 / 2 m0 (aR)^2) sech^4(zeta); throws NumericalError if the
//! curvature route disagrees beyond a few ulps.
double geometric_potential(const CatenoidShape& shape, const PhysicalScales& scales,
                           double zeta);

}  // namespace catenoid
