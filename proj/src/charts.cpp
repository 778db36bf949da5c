#include "catenoid/charts.hpp"

#include <array>
#include <cmath>
#include <string>

#include "catenoid/errors.hpp"

namespace catenoid {

namespace {

// Least squares for y ~ sum_j c_j s^j (j < N) via normal equations; the
// basis variable s is pre-scaled into [0.01, 1] by the caller.
template <std::size_t N>
struct PolyFit {
  std::array<double, N> coef{};
  std::array<double, N> std_error{};
};

template <std::size_t N>
PolyFit<N> poly_fit(std::span<const double> s, std::span<const double> y) {
  std::array<std::array<double, N + 1>, N> a{};
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::array<double, N> row{};
    double p = 1.0;
    for (std::size_t j = 0; j < N; ++j, p *= s[k]) row[j] = p;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) a[i][j] += row[i] * row[j];
      a[i][N] += row[i] * y[k];
    }
  }
  // Gauss-Jordan on [A | b | I] to get both the solution and A^{-1}.
  std::array<std::array<double, 2 * N + 1>, N> m{};
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j <= N; ++j) m[i][j] = a[i][j];
    m[i][N + 1 + i] = 1.0;
  }
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < N; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    std::swap(m[c], m[piv]);
    const double d = m[c][c];
    for (double& v : m[c]) v /= d;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c) continue;
      const double f = m[r][c];
      for (std::size_t j = 0; j < 2 * N + 1; ++j) m[r][j] -= f * m[c][j];
    }
  }
  PolyFit<N> fit;
  for (std::size_t i = 0; i < N; ++i) fit.coef[i] = m[i][N];
  double rss = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    double model = 0.0, p = 1.0;
    for (std::size_t j = 0; j < N; ++j, p *= s[k]) model += fit.coef[j] * p;
    rss += (y[k] - model) * (y[k] - model);
  }
  const double dof = static_cast<double>(s.size()) - static_cast<double>(N);
  const double sigma2 = dof > 0 ? rss / dof : 0.0;
  for (std::size_t i = 0; i < N; ++i) fit.std_error[i] = std::sqrt(sigma2 * m[i][N + 1 + i]);
  return fit;
}

}  // namespace

const char* patch_name(Patch patch) { return patch == Patch::Plus ? "plus" : "minus"; }

EtaCoordinate to_eta(double zeta) {
  if (!std::isfinite(zeta)) throw DomainError("zeta must be finite");
  if (zeta >= 0.0) return EtaCoordinate{Patch::Plus, std::expm1(zeta)};
  return EtaCoordinate{Patch::Minus, std::expm1(-zeta)};
}

double from_eta(const EtaCoordinate& ec) {
  if (!(ec.eta >= 0.0) || !std::isfinite(ec.eta))
    throw DomainError("eta must be a finite nonnegative magnitude");
  const double z = std::log1p(ec.eta);
  return ec.patch == Patch::Plus ? z : -z;
}

MetricSample eta_metric(const EtaCoordinate& ec) {
  if (!(ec.eta >= 0.0)) throw DomainError("eta must be nonnegative");
  const double x = ec.shifted();
  const double x2 = x * x;
  const double num = (x2 + 1.0) * (x2 + 1.0);
  return MetricSample::from_components(num / (4.0 * x2 * x2), num / (4.0 * x2));
}

double cosh_from_eta(const EtaCoordinate& ec) {
  const double x = ec.shifted();
  return (x * x + 1.0) / (2.0 * x);
}

ZetaDerivativeOperator zeta_derivative_operator(const EtaCoordinate& ec) {
  const double x = ec.shifted();
  return ZetaDerivativeOperator{x * x, x};
}

ArcCoordinate to_arc(double zeta) {
  if (!std::isfinite(zeta)) throw DomainError("zeta must be finite");
  if (std::abs(zeta) > kZetaOverflowLimit) throw RangeError("|zeta| exceeds the sinh overflow guard");
  const double u = std::sinh(zeta);
  // (1+u^2)^{-1/4} = cosh(zeta)^{-1/2}
  return ArcCoordinate{u, 1.0 / std::sqrt(std::cosh(zeta))};
}

double zeta_from_arc(double u) { return std::asinh(u); }

std::vector<double> liouville_transform(std::span<const double> zeta,
                                        std::span<const double> phi) {
  if (zeta.size() != phi.size()) throw DomainError("grid and samples differ in length");
  std::vector<double> chi(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) chi[i] = phi[i] / to_arc(zeta[i]).lfactor;
  return chi;
}

std::vector<double> inverse_liouville_transform(std::span<const double> zeta,
                                                std::span<const double> chi) {
  if (zeta.size() != chi.size()) throw DomainError("grid and samples differ in length");
  std::vector<double> phi(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) phi[i] = chi[i] * to_arc(zeta[i]).lfactor;
  return phi;
}

AsymptoticAudit asymptotic_audit(double eta_max, std::size_t samples) {
  if (!(eta_max > 10.0)) throw DomainError("asymptotic audit needs eta_max > 10");
  if (samples < 20) throw DomainError("asymptotic audit needs at least 20 samples");
  AsymptoticAudit audit;
  audit.eta_max = eta_max;
  audit.samples = samples;

  // Log-spaced eta on [1, eta_max]; keep the last decade.
  const double log_hi = std::log10(eta_max);
  std::vector<double> s, radial, angular;
  const double t_scale = 1.0 / ((eta_max / 10.0 + 1.0) * (eta_max / 10.0 + 1.0));
  for (std::size_t i = 0; i < samples; ++i) {
    const double eta = std::pow(10.0, log_hi * static_cast<double>(i) / (samples - 1));
    if (eta < eta_max / 10.0) continue;
    const MetricSample g = eta_metric(EtaCoordinate{Patch::Plus, eta});
    const double x = eta + 1.0;
    s.push_back(1.0 / (x * x) / t_scale);
    radial.push_back(g.g11);
    angular.push_back(g.g22 / (x * x));
  }

  const PolyFit<2> rf = poly_fit<2>(s, radial);
  audit.radial = AsymptoticFit{rf.coef[0], rf.std_error[0], 1.96 * rf.std_error[0], 0.0, s.size()};
  const PolyFit<2> af = poly_fit<2>(s, angular);
  const PolyFit<3> af3 = poly_fit<3>(s, angular);
  audit.angular = AsymptoticFit{af.coef[0], af.std_error[0], 1.96 * af.std_error[0],
                                af3.coef[1] / t_scale, s.size()};
  return audit;
}

}  // namespace catenoid
