#include "catenoid/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "catenoid/errors.hpp"

namespace catenoid {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

double checked_cosh(double zeta) {
  require_finite(zeta, "zeta");
  if (std::abs(zeta) > kZetaOverflowLimit)
    throw RangeError("|zeta| = " + std::to_string(std::abs(zeta)) +
                     " exceeds the cosh overflow guard");
  return std::cosh(zeta);
}

// 1/cosh without overflow: tends to 0 cleanly for large |zeta|.
double sech(double zeta) {
  const double a = std::abs(zeta);
  if (a > 20.0) {
    const double e = std::exp(-a);
    return 2.0 * e / (1.0 + e * e);
  }
  return 1.0 / std::cosh(zeta);
}

// r^2 - b^2 without cancellation near r = b.
double difference_of_squares(double r, double b) { return (r - b) * (r + b); }

}  // namespace

CatenoidShape::CatenoidShape(double radius, double section_scale)
    : radius_(radius), section_scale_(section_scale) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw DomainError("throat radius must be positive and finite");
  if (!(section_scale >= 0.0 && section_scale <= 1.0))
    throw DomainError("section scale a must lie in [0, 1]");
}

CatenoidShape CatenoidShape::from_section_angle(double radius, double theta0) {
  if (!(theta0 >= 0.0 && theta0 <= std::numbers::pi))
    throw DomainError("theta0 must lie in [0, pi]");
  // The poles are a = 0 exactly, not sin(pi) ~ 1e-16.
  const double a = (theta0 == 0.0 || theta0 == std::numbers::pi) ? 0.0 : std::sin(theta0);
  return CatenoidShape(radius, std::min(a, 1.0));
}

double CatenoidShape::effective_radius() const {
  if (degenerate())
    throw DegenerateSectionError("section scale a = 0: zero-radius catenoid (theta0 = 0 or pi)");
  return section_scale_ * radius_;
}

PhysicalScales::PhysicalScales(double mass, double hbar, double radius)
    : mass_(mass), hbar_(hbar), radius_(radius) {
  if (!(mass > 0.0) || !(hbar > 0.0) || !(radius > 0.0) || !std::isfinite(mass) ||
      !std::isfinite(hbar) || !std::isfinite(radius))
    throw DomainError("physical scales must be strictly positive and finite");
}

double PhysicalScales::to_dimensionless(double energy) const {
  return 2.0 * mass_ * energy * radius_ * radius_ / (hbar_ * hbar_);
}

double PhysicalScales::to_physical(double eps) const {
  return eps * hbar_ * hbar_ / (2.0 * mass_ * radius_ * radius_);
}

const char* chart_name(Chart chart) {
  switch (chart) {
    case Chart::ZPhi: return "zeta";
    case Chart::RhoPhi: return "rho";
    case Chart::RWormhole: return "r";
    case Chart::EtaPlus: return "eta+";
    case Chart::EtaMinus: return "eta-";
    case Chart::Arc: return "arc";
  }
  return "unknown";
}

MetricSample MetricSample::from_components(double g11, double g22) {
  return MetricSample{g11, g22, std::sqrt(g11 * g22)};
}

Vec3 embed_catenoid(const CatenoidShape& shape, double zeta, double phi) {
  const double scale = shape.effective_radius();
  require_finite(phi, "phi");
  if (phi < 0.0 || phi >= 2.0 * std::numbers::pi) throw DomainError("phi must lie in [0, 2pi)");
  const double rho = scale * checked_cosh(zeta);
  return Vec3{rho * std::cos(phi), rho * std::sin(phi), scale * zeta};
}

MetricSample catenoid_metric(const CatenoidShape& shape, const ChartPoint& point) {
  const double scale = shape.effective_radius();
  switch (point.chart) {
    case Chart::ZPhi: {
      const double c = checked_cosh(point.c1);
      const double c2 = c * c;
      return MetricSample::from_components(c2, scale * scale * c2);
    }
    case Chart::RhoPhi: {
      const double rho = point.c1;
      require_finite(rho, "rho");
      if (rho < scale) throw DomainError("rho below the throat radius aR");
      if (rho - scale < kThroatCollar * scale)
        throw ThroatSingularError("rho-chart metric is singular at the throat; use the zeta chart");
      const double rho2 = rho * rho;
      return MetricSample::from_components(rho2 / difference_of_squares(rho, scale), rho2);
    }
    default:
      throw DomainError(std::string("catenoid_metric does not handle chart ") +
                        chart_name(point.chart));
  }
}

MetricSample wormhole_section_metric(double b0, double theta0, double r) {
  if (!(b0 > 0.0) || !std::isfinite(b0)) throw DomainError("b0 must be positive");
  const CatenoidShape section = CatenoidShape::from_section_angle(b0, theta0);
  if (section.degenerate())
    throw DegenerateSectionError("theta0 = 0 or pi gives a zero-radius section");
  require_finite(r, "r");
  if (r < b0) throw DomainError("r below the wormhole throat b0");
  if (r == b0) throw ThroatSingularError("g_rr diverges at r = b0");
  const double a = std::sin(theta0);
  const double r2 = r * r;
  return MetricSample::from_components(r2 / difference_of_squares(r, b0), a * a * r2);
}

double wormhole_profile(double b0, double r) {
  if (!(b0 > 0.0)) throw DomainError("b0 must be positive");
  if (!(r >= b0)) throw DomainError("r below the wormhole throat b0");
  // arccosh(x) = log(x + sqrt(x^2 - 1)) via log1p to keep precision near x = 1.
  const double t = (r - b0) / b0;
  return b0 * std::log1p(t + std::sqrt(t * (t + 2.0)));
}

double wormhole_proper_distance(double b0, double r) {
  if (!(b0 > 0.0)) throw DomainError("b0 must be positive");
  if (!(r >= b0)) throw DomainError("r below the wormhole throat b0");
  return std::sqrt(difference_of_squares(r, b0));
}

EquivalenceAudit equivalence_audit(double b0, std::span<const double> r_values) {
  EquivalenceAudit audit;
  audit.b0 = b0;
  audit.samples = r_values.size();
  constexpr double equatorial = std::numbers::pi / 2.0;
  for (double r : r_values) {
    const MetricSample g = wormhole_section_metric(b0, equatorial, r);
    const double l = wormhole_proper_distance(b0, r);
    const double dl_dr = r / l;  // d/dr sqrt(r^2 - b0^2)
    const double radial = std::abs(dl_dr * dl_dr - g.g11) / g.g11;
    const double angular = std::abs((b0 * b0 + l * l) - g.g22) / g.g22;
    audit.max_radial_deviation = std::max(audit.max_radial_deviation, radial);
    audit.max_angular_deviation = std::max(audit.max_angular_deviation, angular);
    const double worst = std::max(radial, angular);
    if (worst >= audit.max_relative_deviation) {
      audit.max_relative_deviation = worst;
      audit.worst_r = r;
    }
  }
  return audit;
}

CurvatureSample curvature(const CatenoidShape& shape, double zeta) {
  const double scale = shape.effective_radius();
  require_finite(zeta, "zeta");
  const double s = sech(zeta);
  CurvatureSample c;
  c.kappa1 = s * s / scale;
  c.kappa2 = -c.kappa1;
  c.mean = 0.5 * (c.kappa1 + c.kappa2);
  c.gaussian = c.kappa1 * c.kappa2;
  return c;
}

GeometricPotentialForms geometric_potential_forms(const CatenoidShape& shape,
                                                  const PhysicalScales& scales,
                                                  double zeta) {
  const double scale = shape.effective_radius();
  const CurvatureSample c = curvature(shape, zeta);
  const double hb2 = scales.hbar() * scales.hbar();
  const double s2 = sech(zeta) * sech(zeta);
  GeometricPotentialForms f;
  f.closed_form = -hb2 / (2.0 * scales.mass() * scale * scale) * s2 * s2;
  f.mean_gaussian = -hb2 / (2.0 * scales.mass()) * (c.mean * c.mean - c.gaussian);
  const double split = c.kappa1 - c.kappa2;
  f.principal_split = -hb2 / (8.0 * scales.mass()) * split * split;
  return f;
}

double geometric_potential(const CatenoidShape& shape, const PhysicalScales& scales,
                           double zeta) {
  const GeometricPotentialForms f = geometric_potential_forms(shape, scales, zeta);
  const double tol = std::max(1e-13 * std::abs(f.closed_form), 1e-300);
  if (std::abs(f.closed_form - f.principal_split) > tol ||
      std::abs(f.closed_form - f.mean_gaussian) > tol)
    throw NumericalError("da Costa potential forms disagree at zeta = " + std::to_string(zeta));
  return f.closed_form;
}

}  // namespace catenoid
