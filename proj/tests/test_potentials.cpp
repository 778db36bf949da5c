#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "catenoid/errors.hpp"
#include "catenoid/potentials.hpp"
#include "golden.hpp"

using namespace catenoid;
using doctest::Approx;

TEST_CASE("zeta-chart potential") {
  CHECK(v_zeta({0, 0.0}, 0.0) == -1.0);
  CHECK(v_zeta({1, 0.1}, 0.0) == Approx(-0.1).epsilon(1e-15));
  CHECK_THROWS_AS(v_zeta({0, 0.1}, 351.0), RangeError);
  CHECK_NOTHROW(v_zeta({0, 0.1}, 349.0));

  // Inverted double well: local minimum at 0, symmetric maxima, then -> -inf.
  const ChannelSpec ch{1, 0.1};
  const double zs = golden::kFig2MaxLocation;
  CHECK(v_zeta(ch, zs) == Approx(golden::kFig2MaxValue).epsilon(1e-14));
  CHECK(v_zeta(ch, -zs) == v_zeta(ch, zs));
  CHECK(v_zeta(ch, zs) > v_zeta(ch, zs - 1e-4));
  CHECK(v_zeta(ch, zs) > v_zeta(ch, zs + 1e-4));
  CHECK(v_zeta(ch, 0.0) < v_zeta(ch, 1e-3));
  CHECK(v_zeta(ch, 20.0) < -1e6);

  for (double z : {0.0, 0.7, 3.1})
    CHECK(v_zeta({2, 0.3}, z) == v_zeta({-2, 0.3}, z));

  // Weighted grouping: q - eps w is the same equation.
  for (double z : {-2.0, 0.0, 0.4}) {
    const double eps = -0.3;
    CHECK(weighted_problem_q(1, z) - eps * weighted_problem_w(z) ==
          Approx(v_zeta({1, eps}, z)).epsilon(1e-15));
  }
}

TEST_CASE("eta-chart bracket and renormalized potential") {
  const EtaCoordinate origin{Patch::Plus, 0.0};
  CHECK(eta_bracket({0, 2.0}, origin) == Approx(3.0).epsilon(1e-15));
  // m = 2, eps = 2 at the origin: V - E = -B = m^2 - eps - 1, and the
  // renormalized value adds eps/4, giving m^2 - (3/4) eps - 1.
  CHECK(v_eta({2, 2.0}, origin) == Approx(1.0).epsilon(1e-15));
  CHECK(v_eta({2, 2.0}, origin, EnergyConvention::UnitEnergy) == Approx(2.0).epsilon(1e-15));
  CHECK(v_renormalized({2, 2.0}, origin) == Approx(1.5).epsilon(1e-15));

  CHECK(std::abs(v_renormalized({0, 2.0}, origin) + 2.5) < 1e-12);
  CHECK(std::abs(v_renormalized({1, 2.0}, origin) + 1.5) < 1e-12);
  CHECK(std::abs(v_renormalized({-1, 2.0}, origin) + 1.5) < 1e-12);
  for (int m : {0, 1, 2, 5})
    for (double eps : {-1.0, 0.5, 2.0}) {
      CHECK(std::abs(v_renormalized({m, eps}, {Patch::Plus, 1e6})) < 1e-10);
      CHECK(v_eta_asymptote({m, eps}) == -eps / 4.0);
    }

  const auto c = assembled_equation_coefficients({1, 2.0}, {Patch::Plus, 1.0});
  CHECK(c.second == 1.0);
  CHECK(c.first == 0.5);
  CHECK(c.zeroth == eta_bracket({1, 2.0}, {Patch::Plus, 1.0}));

  // The bracket approaches eps/4 as x^-2 with coefficient eps/2 - m^2; for
  // the s-channel the gap stays below eps (eta+1)^-2.
  for (double eps : {0.5, 2.0, 7.0})
    for (double eta = 11.0; eta < 1e5; eta *= 1.7) {
      const double x = eta + 1.0;
      CHECK(std::abs(eta_bracket({0, eps}, {Patch::Plus, eta}) - eps / 4.0) <
            eps / 2.0 / (x * x) * 2.0);
    }
  for (int m : {0, 1, 3})
    for (double eps : {0.5, 2.0})
      for (double eta = 11.0; eta < 1e5; eta *= 1.7) {
        const double x = eta + 1.0;
        const double d = (eta_bracket({m, eps}, {Patch::Plus, eta}) - eps / 4.0) * x * x;
        CHECK(std::abs(d - (eps / 2.0 - m * m)) < 10.0 / (x * x) + 1e-14 * x * x);
      }

  for (double eta : {0.0, 0.3, 7.0})
    CHECK(v_eta({3, 1.2}, {Patch::Plus, eta}) == v_eta({3, 1.2}, {Patch::Minus, eta}));
  CHECK_THROWS_AS(v_eta({0, 1.0}, {Patch::Plus, -1.0}), DomainError);
}

TEST_CASE("eta equation is the zeta equation") {
  // Phi(zeta) smooth; in x = e^zeta, x^2 Phi'' + x Phi' equals Phi_zetazeta, so
  // x^2 (Phi'' + Phi'/x + B Phi) = Phi_zetazeta + x^2 B Phi must equal
  // Phi_zetazeta - v_zeta Phi up to the cosh^2 weight (x^2 B = -v_zeta).
  for (int m : {0, 1, 2})
    for (double eps : {-0.4, 0.7, 2.0}) {
      double worst = 0.0;
      for (int i = 0; i <= 200; ++i) {
        const double z = 0.02 * i;
        const EtaCoordinate ec = to_eta(z);
        const double x = ec.shifted();
        worst = std::max(worst, std::abs(x * x * eta_bracket({m, eps}, ec) + v_zeta({m, eps}, z)) /
                                    std::max(1.0, std::abs(v_zeta({m, eps}, z))));
      }
      CHECK(worst < 1e-12);
    }
}

TEST_CASE("arc-chart potential") {
  CHECK(v_scatter(0, 0.0) == -0.5);
  CHECK(v_scatter(0, 1e6) * 1e12 == Approx(-0.25).epsilon(1e-6));
  CHECK(v_scatter(1, 1e6) * 1e12 == Approx(0.75).epsilon(1e-6));
  CHECK(v_scatter(2, 3.0) == v_scatter(-2, 3.0));
  CHECK(v_scatter(1, -2.5) == v_scatter(1, 2.5));
}

TEST_CASE("Liouville identity") {
  // chi = (1+u^2)^{1/4} Phi turns (-Phi_zz + v Phi) into (1+u^2)^{3/4} (-chi'' + (W - eps) chi).
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const double a = coef(rng), b = coef(rng), c = coef(rng);
  auto phi = [&](double z) {
    return a * std::exp(-z * z / 8.0) + b * std::tanh(z) * std::exp(-std::abs(z) / 3.0) +
           c / std::cosh(z);
  };
  const double h = 1e-3;
  for (int m : {0, 1}) {
    const double eps = 0.37;
    auto chi = [&](double u) { return std::pow(1.0 + u * u, 0.25) * phi(std::asinh(u)); };
    double worst = 0.0, scale = 0.0;
    for (int i = -800; i <= 800; ++i) {
      const double z = 0.01 * i;
      const double u = std::sinh(z);
      const double lz = -(phi(z + h) - 2.0 * phi(z) + phi(z - h)) / (h * h) +
                        v_zeta({m, eps}, z) * phi(z);
      const double lu = -(chi(u + h) - 2.0 * chi(u) + chi(u - h)) / (h * h) +
                        (v_scatter(m, u) - eps) * chi(u);
      worst = std::max(worst, std::abs(lz * std::pow(1.0 + u * u, -0.75) - lu));
      scale = std::max(scale, std::abs(lu));
    }
    CHECK(scale > 1e-2);
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("Poschl-Teller family") {
  const PoschlTellerSpec one{1.0};
  CHECK(one.strength() == 2.0);
  CHECK(poschl_teller_potential(one, 0.0) == -2.0);
  for (double k : {0.2, 1.0, 3.7}) CHECK(poschl_teller_transmission(one, k) == Approx(1.0).epsilon(1e-14));

  const PoschlTellerSpec s1 = PoschlTellerSpec::from_strength(1.0);
  CHECK(s1.strength() == Approx(1.0).epsilon(1e-15));
  CHECK(poschl_teller_transmission(s1, 1.0) ==
        Approx(golden::kPoschlTellerStrength1K1).epsilon(1e-14));

  CHECK_THROWS_AS(poschl_teller_transmission(one, 0.0), DomainError);
  CHECK_THROWS_AS(poschl_teller_transmission(one, -1.0), DomainError);
  CHECK_THROWS_AS(PoschlTellerSpec::from_strength(-1.0), DomainError);
}

TEST_CASE("curve sampling") {
  const PotentialCurve c = sample_potential(Chart::ZPhi, {1, 0.1}, -3.0, 3.0, 601);
  REQUIRE(c.values.size() == 601);
  CHECK(c.grid.front() == -3.0);
  CHECK(c.grid.back() == 3.0);
  for (std::size_t i = 0; i < c.grid.size(); ++i) CHECK(c.values[i] == v_zeta({1, 0.1}, c.grid[i]));
  for (std::size_t i = 0; i < c.values.size(); ++i) CHECK(c.values[i] == Approx(c.values[c.values.size() - 1 - i]).epsilon(1e-13));

  const PotentialCurve r = sample_potential(Chart::EtaPlus, {0, 2.0}, 0.0, 100.0, 101, true);
  CHECK(std::abs(r.values.front() + 2.5) < 1e-12);
  CHECK_THROWS_AS(sample_potential(Chart::EtaPlus, {0, 2.0}, -1.0, 1.0, 11), DomainError);
  CHECK_THROWS_AS(sample_potential(Chart::RhoPhi, {0, 2.0}, 1.0, 2.0, 11), DomainError);
  CHECK_THROWS_AS(sample_potential(Chart::ZPhi, {0, 2.0}, 1.0, 1.0, 11), DomainError);
}
