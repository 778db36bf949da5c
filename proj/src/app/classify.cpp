#include "catenoid/app/classify.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "catenoid/errors.hpp"

namespace catenoid {

const char* category_name(ChannelCategory c) {
  switch (c) {
    case ChannelCategory::NegativeNearOriginSlow: return "NEGATIVE_NEAR_ORIGIN_SLOW";
    case ChannelCategory::NegativeNearOriginFast: return "NEGATIVE_NEAR_ORIGIN_FAST";
    case ChannelCategory::PositiveDefinite: return "POSITIVE_DEFINITE";
    case ChannelCategory::OuterWell: return "OUTER_WELL";
  }
  return "?";
}

namespace {

// Golden-section search for an extremum of f on [a, b]; sign = +1 for a
// minimum, -1 for a maximum.
double refine_extremum(const auto& f, double a, double b, double sign, double tol) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = sign * f(c);
  double fd = sign * f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = sign * f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = sign * f(d);
    }
  }
  return 0.5 * (a + b);
}

ChannelClass classify_one(int m, double eps, double eta_max, const ClassifyOptions& opts) {
  const ChannelSpec ch{std::abs(m), eps};
  auto v = [&](double eta) { return v_renormalized(ch, EtaCoordinate{Patch::Plus, eta}); };

  const std::size_t n = opts.samples;
  const double lx_max = std::log(1.0 + eta_max);
  std::vector<double> eta(n), val(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = lx_max * static_cast<double>(i) / static_cast<double>(n - 1);
    eta[i] = i == 0 ? 0.0 : (i == n - 1 ? eta_max : std::expm1(lx));
    val[i] = v(eta[i]);
  }

  ChannelClass out;
  out.m = m;
  out.eps = eps;
  out.value_at_origin = val[0];
  out.min_value = val[0];
  for (double y : val) out.min_value = std::min(out.min_value, y);

  for (std::size_t i = 1; i + 1 < n; ++i) {
    const bool is_min = val[i] < val[i - 1] && val[i] <= val[i + 1];
    const bool is_max = val[i] > val[i - 1] && val[i] >= val[i + 1];
    if (!is_min && !is_max) continue;
    const double e = refine_extremum(v, eta[i - 1], eta[i + 1], is_min ? 1.0 : -1.0,
                                     opts.extremum_tol);
    out.extrema.push_back({e, v(e), is_min});
  }

  // Least-squares slope of log|V| against log x over the last decade.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  const double lx_lo = lx_max - std::log(10.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log1p(eta[i]);
    if (lx < lx_lo || val[i] == 0.0) continue;
    const double ly = std::log(std::abs(val[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++k;
  }
  const double kd = static_cast<double>(k);
  out.falloff_power = k > 1 ? -(kd * sxy - sx * sy) / (kd * sxx - sx * sx) : 0.0;

  bool interior_min = false;
  for (const auto& e : out.extrema) interior_min = interior_min || e.minimum;
  if (out.value_at_origin < 0.0)
    out.category = out.falloff_power >= opts.fast_power ? ChannelCategory::NegativeNearOriginFast
                                                        : ChannelCategory::NegativeNearOriginSlow;
  else if (interior_min || out.min_value < 0.0)
    out.category = ChannelCategory::OuterWell;
  else
    out.category = ChannelCategory::PositiveDefinite;
  return out;
}

}  // namespace

std::vector<ChannelClass> classify_channels(double eps, std::span<const int> ms, double eta_max,
                                            const ClassifyOptions& opts) {
  if (!(eta_max >= 50.0))
    throw DomainError("classify_channels: eta_max must be >= 50, got " + std::to_string(eta_max));
  if (opts.samples < 16) throw DomainError("classify_channels: need at least 16 samples");
  std::vector<ChannelClass> out;
  out.reserve(ms.size());
  for (int m : ms) out.push_back(classify_one(m, eps, eta_max, opts));
  return out;
}

}  // namespace catenoid
