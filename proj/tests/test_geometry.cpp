#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "catenoid/errors.hpp"
#include "catenoid/geometry.hpp"
#include "golden.hpp"

using namespace catenoid;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;

double sech(double z) { return 1.0 / std::cosh(z); }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
}  // namespace

TEST_CASE("embedding") {
  const CatenoidShape unit(1.0);
  const Vec3 p0 = embed_catenoid(unit, 0.0, 0.0);
  CHECK(p0.x == 1.0);
  CHECK(p0.y == 0.0);
  CHECK(p0.z == 0.0);

  const Vec3 p1 = embed_catenoid(unit, 0.0, pi / 2.0);
  CHECK(std::abs(p1.x) < 1e-16);
  CHECK(p1.y == 1.0);

  const Vec3 p2 = embed_catenoid(unit, 1.0, 0.0);
  CHECK(rel(p2.x, golden::kCosh1) < 1e-15);
  CHECK(p2.z == 1.0);

  // The section rescales the throat to aR.
  const CatenoidShape half(2.0, 0.25);
  const Vec3 p3 = embed_catenoid(half, 0.0, 0.0);
  CHECK(p3.x == Approx(0.5));

  CHECK_THROWS_AS(embed_catenoid(unit, 0.0, 2.0 * pi), DomainError);
  CHECK_THROWS_AS(embed_catenoid(CatenoidShape(1.0, 0.0), 0.0, 0.0), DegenerateSectionError);
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(CatenoidShape(0.0), DomainError);
  CHECK_THROWS_AS(CatenoidShape(1.0, 1.5), DomainError);
  CHECK_THROWS_AS(CatenoidShape(1.0, -0.1), DomainError);
  CHECK(CatenoidShape::from_section_angle(1.0, 0.0).degenerate());
  CHECK(CatenoidShape::from_section_angle(1.0, pi).degenerate());
  CHECK(CatenoidShape::from_section_angle(1.0, pi / 2.0).equatorial());
  CHECK_THROWS_AS(CatenoidShape(1.0, 0.0).effective_radius(), DegenerateSectionError);
}

TEST_CASE("physical scales round trip") {
  const PhysicalScales s(2.0, 0.5, 3.0);
  const double e = 0.37;
  CHECK(s.to_dimensionless(e) == Approx(2.0 * 2.0 * e * 9.0 / 0.25));
  CHECK(s.to_physical(s.to_dimensionless(e)) == Approx(e).epsilon(1e-15));
  CHECK_THROWS_AS(PhysicalScales(0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("metric in both charts") {
  const CatenoidShape unit(1.0);
  const MetricSample throat = catenoid_metric(unit, {Chart::ZPhi, 0.0, 0.0});
  CHECK(throat.g11 == 1.0);
  CHECK(throat.g22 == 1.0);
  CHECK(throat.sqrt_g == 1.0);

  const MetricSample z1 = catenoid_metric(unit, {Chart::ZPhi, 1.0, 0.0});
  CHECK(rel(z1.g11, golden::kCosh1Squared) < 1e-15);
  CHECK(rel(z1.g22, golden::kCosh1Squared) < 1e-15);

  const MetricSample r2 = catenoid_metric(unit, {Chart::RhoPhi, 2.0, 0.0});
  CHECK(rel(r2.g11, 4.0 / 3.0) < 1e-15);
  CHECK(r2.g22 == 4.0);

  CHECK_THROWS_AS(catenoid_metric(unit, {Chart::RhoPhi, 1.0, 0.0}), ThroatSingularError);
  CHECK_THROWS_AS(catenoid_metric(unit, {Chart::RhoPhi, 1.0 + 1e-7, 0.0}), ThroatSingularError);
  CHECK_THROWS_AS(catenoid_metric(unit, {Chart::RhoPhi, 0.5, 0.0}), DomainError);
  CHECK_THROWS_AS(catenoid_metric(unit, {Chart::Arc, 0.5, 0.0}), DomainError);
}

TEST_CASE("rho metric is the pullback of the zeta metric") {
  for (double a : {1.0, 0.5, 0.1}) {
    const CatenoidShape shape(1.0, a);
    const double ar = shape.effective_radius();
    double worst = 0.0;
    for (int i = 1; i <= 200; ++i) {
      const double zeta = 0.01 * i;  // away from the throat
      const double rho = ar * std::cosh(zeta);
      const MetricSample gz = catenoid_metric(shape, {Chart::ZPhi, zeta, 0.0});
      const MetricSample gr = catenoid_metric(shape, {Chart::RhoPhi, rho, 0.0});
      // dz = d rho / sinh(zeta) with z = aR zeta.
      const double drho_dz = std::sinh(zeta);
      worst = std::max({worst, rel(gz.g11 / (drho_dz * drho_dz), gr.g11), rel(gz.g22, gr.g22)});
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("wormhole section metric") {
  const MetricSample g = wormhole_section_metric(1.0, pi / 2.0, 2.0);
  CHECK(rel(g.g11, 4.0 / 3.0) < 1e-15);
  CHECK(g.g22 == 4.0);

  const MetricSample g6 = wormhole_section_metric(1.0, pi / 6.0, 2.0);
  CHECK(rel(g6.g22, 1.0) < 1e-15);

  CHECK(rel(wormhole_profile(1.0, golden::kCosh1), 1.0) < 1e-15);
  CHECK(rel(wormhole_profile(2.0, 2.0 * golden::kCosh1), 2.0) < 1e-15);

  CHECK_THROWS_AS(wormhole_section_metric(1.0, pi / 2.0, 1.0), ThroatSingularError);
  CHECK_THROWS_AS(wormhole_section_metric(1.0, pi / 2.0, 0.9), DomainError);
  CHECK_THROWS_AS(wormhole_section_metric(1.0, 0.0, 2.0), DegenerateSectionError);
  CHECK_THROWS_AS(wormhole_section_metric(-1.0, pi / 2.0, 2.0), DomainError);
}

TEST_CASE("theta0 and pi - theta0 give the same section") {
  for (double t : {0.1, 0.4, 0.9, 1.3}) {
    for (double r : {1.01, 2.0, 7.5}) {
      const MetricSample a = wormhole_section_metric(1.0, t, r);
      const MetricSample b = wormhole_section_metric(1.0, pi - t, r);
      CHECK(a.g11 == b.g11);
      CHECK(rel(a.g22, b.g22) < 1e-14);
      CHECK(a.g22 == std::sin(t) * std::sin(t) * (r * r));
    }
  }
}

TEST_CASE("equivalence audit") {
  std::vector<double> r;
  for (int i = 0; i <= 89; ++i) r.push_back(1.1 + 0.1 * i);
  CHECK(equivalence_audit(1.0, r).max_relative_deviation < 1e-12);

  const std::vector<double> one{3.0};
  const EquivalenceAudit a = equivalence_audit(2.0, one);
  CHECK(a.max_radial_deviation < 1e-15);
  const double dl_dr = 3.0 / std::sqrt(5.0);
  CHECK(rel(dl_dr * dl_dr, wormhole_section_metric(2.0, pi / 2.0, 3.0).g11) < 1e-15);

  // Compensated r^2 - b0^2 keeps the near-throat pullback accurate.
  const std::vector<double> close{1.0 + 1e-9};
  CHECK(equivalence_audit(1.0, close).max_relative_deviation < 1e-9);
}

TEST_CASE("curvature of the minimal surface") {
  const CatenoidShape unit(1.0);
  const CurvatureSample c0 = curvature(unit, 0.0);
  CHECK(c0.kappa1 == 1.0);
  CHECK(c0.kappa2 == -1.0);
  CHECK(c0.mean == 0.0);
  CHECK(c0.gaussian == -1.0);

  CHECK(rel(curvature(unit, 1.0).kappa1, golden::kSech1Squared) < 1e-15);
  CHECK(std::abs(curvature(unit, 10.0).gaussian) < 1e-8);
  CHECK(std::abs(curvature(unit, -10.0).kappa1) < 1e-7);

  for (double a : {1.0, 0.7, 0.2}) {
    const CatenoidShape shape(1.0, a);
    double h = 0.0, k = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double z = -10.0 + 0.01 * i;
      const CurvatureSample c = curvature(shape, z);
      const double s = sech(z);
      h = std::max(h, std::abs(c.mean));
      k = std::max(k, std::abs(c.gaussian - c.kappa1 * c.kappa2));
      k = std::max(k, std::abs(c.gaussian + s * s * s * s / (a * a)));
    }
    CHECK(h < 1e-12);
    CHECK(k < 1e-12);
  }
}

TEST_CASE("da Costa potential") {
  const CatenoidShape unit(1.0);
  const PhysicalScales natural;
  CHECK(geometric_potential(unit, natural, 0.0) == Approx(-0.5).epsilon(1e-15));
  CHECK(std::abs(geometric_potential(unit, natural, 40.0)) < 1e-30);
  CHECK(geometric_potential(CatenoidShape(1.0, 0.1), natural, 0.0) ==
        Approx(-50.0).epsilon(1e-13));

  double worst = 0.0;
  for (double a : {1.0, 0.3}) {
    const CatenoidShape shape(1.0, a);
    for (int i = 0; i <= 2000; ++i) {
      const double z = -10.0 + 0.01 * i;
      const GeometricPotentialForms f = geometric_potential_forms(shape, natural, z);
      worst = std::max({worst, rel(f.principal_split, f.closed_form),
                        rel(f.mean_gaussian, f.closed_form)});
    }
  }
  CHECK(worst < 1e-13);
  CHECK_THROWS_AS(geometric_potential(CatenoidShape(1.0, 0.0), natural, 0.0),
                  DegenerateSectionError);
}
